#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctv {

/// Exact rational backed by GMP. mpq_class keeps values canonical (lowest
/// terms, positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Point = std::vector<Rational>;

/// Parses "num/den" or a bare integer. Rejects zero denominators and junk.
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  auto check_int = [&](const std::string& s) {
    std::size_t i = (s.size() > 0 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational: " + text);
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed rational: " + text);
  };
  auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(mpz_class(strip_plus(text), 10));
  }
  const std::string num = text.substr(0, slash), den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d(strip_plus(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: " + text);
  Rational r(mpz_class(strip_plus(num), 10), d);
  r.canonicalize();
  return r;
}

/// "num/den", or just "num" for integers.
inline std::string to_string(Rational r) {
  r.canonicalize();
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace ctv
