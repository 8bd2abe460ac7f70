#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace ctv {

struct LpResult {
  bool feasible = false;
  std::vector<Rational> x;
  std::size_t pivots = 0;
};

/// Decides whether {x >= 0 : A x = b} is nonempty with a phase-1 simplex on a
/// dense exact tableau. Bland's rule (lowest eligible column enters, ties in
/// the ratio test go to the lowest basic variable) guarantees termination.
inline LpResult find_feasible_point(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("row count mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("ragged constraint matrix");

  LpResult res;
  if (m == 0) {
    res.feasible = true;
    res.x.assign(n, Rational(0));
    return res;
  }

  // Columns [0, n) are the original variables, [n, n + m) the artificials,
  // and column n + m holds the right-hand side.
  const std::size_t width = n + m + 1, rhs = n + m;
  std::vector<std::vector<Rational>> t(m, std::vector<Rational>(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][rhs] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }

  // Reduced costs of the phase-1 objective (sum of artificials) and its value.
  std::vector<Rational> cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
    cost[rhs] -= t[i][rhs];
  }

  for (;;) {
    std::size_t enter = rhs;
    for (std::size_t j = 0; j < rhs; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter == rhs) break;

    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][rhs] / t[i][enter];
      if (!leave || ratio < best || (ratio == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio;
      }
    }
    // The phase-1 objective is bounded below by zero.
    if (!leave) throw std::logic_error("phase-1 objective unbounded");

    const std::size_t r = *leave;
    const Rational pivot = t[r][enter];
    for (std::size_t j = 0; j < width; ++j) t[r][j] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[r][j];
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[r][j];
    }
    basis[r] = enter;
    ++res.pivots;
  }

  // cost[rhs] is minus the remaining artificial mass.
  res.feasible = sgn(cost[rhs]) == 0;
  if (res.feasible) {
    res.x.assign(n, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) res.x[basis[i]] = t[i][rhs];
  }
  return res;
}

}  // namespace ctv
