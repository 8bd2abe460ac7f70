#pragma once

// Bound calculus for the Volovikov index of the configuration spaces used in
// the colored Tverberg argument. The index itself is never computed; every
// number below is a bound derived from a named rule, and each rule application
// is recorded as one trace step.
//
// Naming: `m_large` is the number of color classes held to the larger size
// threshold. The coincidence theorem's target dimension is `target_dim` (it
// equals d here). The two are never conflated.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "symmetry.hpp"

namespace ctv {

/// Rule names cited by trace steps.
namespace rule {
inline constexpr const char* kDecomposition = "deleted-join-decomposition";
inline constexpr const char* kChessboardConnectivity = "chessboard-connectivity";
inline constexpr const char* kJoinConnectivity = "join-connectivity";
inline constexpr const char* kIndexFromConnectivity = "index-from-connectivity";
inline constexpr const char* kLargeClassCondition = "large-class-condition";
inline constexpr const char* kSphereIndex = "free-sphere-index";
inline constexpr const char* kMonotonicity = "equivariant-monotonicity";
inline constexpr const char* kUnionSubadditivity = "union-subadditivity";
inline constexpr const char* kCoincidence = "partial-coincidence";
inline constexpr const char* kStrictExcess = "strict-excess";
}  // namespace rule

struct TraceStep {
  std::string rule;
  std::string statement;
  std::int64_t value = 0;
};

struct TheoremInstance {
  std::int64_t d = 1;
  std::int64_t k = 1;
  std::int64_t m_large = 0;
  std::uint32_t p = 2;
  std::uint32_t n = 1;
  std::vector<std::size_t> sizes;

  std::int64_t r() const { return static_cast<std::int64_t>(checked_pow(p, n)); }
  std::int64_t q() const { return r() - 1; }

  /// Human-readable problems with the parameter ranges; empty when valid.
  std::vector<std::string> problems() const {
    std::vector<std::string> out;
    if (d < 1) out.push_back("d must be >= 1");
    if (k < 1 || k > d) out.push_back("k must satisfy 1 <= k <= d");
    if (m_large < 0 || m_large > k + 1) out.push_back("m must satisfy 0 <= m <= k+1");
    if (!is_prime(p)) out.push_back("p must be prime");
    if (n < 1) out.push_back("n must be >= 1");
    if (k >= 0 && sizes.size() != static_cast<std::size_t>(k + 1)) out.push_back("sizes must list k+1 color classes");
    for (auto s : sizes)
      if (s == 0) {
        out.push_back("color class sizes must be positive");
        break;
      }
    if (is_prime(p) && n >= 1) {
      try {
        (void)checked_pow(p, n);
      } catch (const std::overflow_error&) {
        out.push_back("p^n overflows");
      }
    }
    return out;
  }

  bool valid() const { return problems().empty(); }

  /// Bundle with every class exactly at its threshold (large classes first).
  static TheoremInstance at_threshold(std::int64_t d, std::int64_t k, std::int64_t m_large, std::uint32_t p,
                                      std::uint32_t n) {
    TheoremInstance ti{d, k, m_large, p, n, {}};
    const std::int64_t r = ti.r();
    for (std::int64_t i = 0; i < k + 1; ++i) {
      const std::int64_t t = i < m_large ? 2 * r - 1 : 2 * r - 4;
      ti.sizes.push_back(static_cast<std::size_t>(std::max<std::int64_t>(t, 1)));
    }
    return ti;
  }
};

struct ClassCheck {
  std::size_t index = 0;
  std::size_t size = 0;
  std::int64_t threshold = 0;
  bool large = false;
  bool passed = false;
};

/// Connectivity lower bound for the r-fold 2-wise deleted join of a rainbow
/// complex. `value` is empty when some class is below its threshold.
struct JoinConnBound {
  std::optional<std::int64_t> value;
  std::vector<ClassCheck> classes;

  bool thresholds_met() const {
    for (const auto& c : classes)
      if (!c.passed) return false;
    return true;
  }
};

struct IndexBound {
  std::string space;
  std::optional<std::int64_t> lower;
  std::optional<std::int64_t> upper_prime;
  std::vector<TraceStep> trace;
};

struct Condition {
  std::string name;
  bool passed = false;
  bool assumption = false;
  std::string detail;
};

struct Upgrade {
  std::int64_t faces = 0;
  std::vector<TraceStep> trace;
};

struct Verdict {
  bool applicable = false;
  std::int64_t q = 0;
  std::int64_t promised_faces = 0;
  std::int64_t target_dim = 0;
  std::int64_t m_large = 0;
  std::int64_t required_index = 0;
  std::optional<std::int64_t> achieved_lower_bound;
  std::vector<Condition> conditions;
  std::vector<TraceStep> trace;
  std::optional<Upgrade> upgrade;
};

/// Classes 1..m need 2r-1 points, the rest 2r-4.
inline std::vector<ClassCheck> size_thresholds(const std::vector<std::size_t>& sizes, std::int64_t r,
                                               std::int64_t m_large) {
  std::vector<ClassCheck> out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    ClassCheck c;
    c.index = i;
    c.size = sizes[i];
    c.large = static_cast<std::int64_t>(i) < m_large;
    c.threshold = c.large ? 2 * r - 1 : 2 * r - 4;
    c.passed = static_cast<std::int64_t>(sizes[i]) >= c.threshold;
    out.push_back(c);
  }
  return out;
}

/// conn of the deleted join >= m(r-2) + (k+1-m)(r-3) + 2k, with k+1 = sizes.size().
inline JoinConnBound conn_lower_bound_join(const std::vector<std::size_t>& sizes, std::int64_t r,
                                           std::int64_t m_large) {
  if (sizes.empty()) throw std::invalid_argument("sizes must be nonempty");
  if (r < 2) throw std::invalid_argument("r must be at least 2");
  const auto classes = static_cast<std::int64_t>(sizes.size());
  if (m_large < 0 || m_large > classes) throw std::invalid_argument("m must lie in [0, number of classes]");
  JoinConnBound b;
  b.classes = size_thresholds(sizes, r, m_large);
  if (!b.thresholds_met()) return b;
  const std::int64_t k = classes - 1;
  b.value = m_large * (r - 2) + (k + 1 - m_large) * (r - 3) + 2 * k;
  return b;
}

namespace detail {

inline std::string threshold_failures(const std::vector<ClassCheck>& classes) {
  std::ostringstream os;
  bool first = true;
  for (const auto& c : classes) {
    if (c.passed) continue;
    os << (first ? "" : "; ") << "class " << c.index + 1 << " has " << c.size << " < " << c.threshold;
    first = false;
  }
  return os.str();
}

}  // namespace detail

/// i(deleted join) >= conn + 2 = (k+1)(r-1) + m. When m >= (d-k)(r-1) the trace
/// also records the consequence i >= (d+1)(r-1).
inline IndexBound index_lower_bound_deleted_join(const TheoremInstance& ti) {
  if (auto pr = ti.problems(); !pr.empty()) throw std::invalid_argument(pr.front());
  IndexBound out;
  out.space = "deleted-join-of-rainbow-complex";
  const std::int64_t r = ti.r();
  const std::int64_t k = ti.k;
  const std::int64_t m = ti.m_large;

  auto conn = conn_lower_bound_join(ti.sizes, r, m);
  if (!conn.value) {
    out.trace.push_back({rule::kChessboardConnectivity,
                         "size thresholds unmet, bound not claimed: " + detail::threshold_failures(conn.classes), 0});
    return out;
  }
  out.trace.push_back({rule::kDecomposition,
                       "r-fold 2-wise deleted join of the rainbow complex is the join of chessboards D(|C_i|, r)",
                       static_cast<std::int64_t>(ti.sizes.size())});
  out.trace.push_back({rule::kChessboardConnectivity,
                       "conn D(|C_i|, r) >= r-2 for the m large classes and >= r-3 for the others",
                       m * (r - 2) + (k + 1 - m) * (r - 3)});
  out.trace.push_back({rule::kJoinConnectivity, "conn of a join of k+1 factors gains 2k over the sum",
                       *conn.value});
  const std::int64_t lower = *conn.value + 2;
  out.trace.push_back({rule::kIndexFromConnectivity, "i(X) >= conn(X) + 2 = (k+1)(r-1) + m", lower});
  out.lower = lower;
  if (m >= (ti.d - k) * (r - 1)) {
    out.trace.push_back({rule::kLargeClassCondition, "m >= (d-k)(r-1) gives i >= (d+1)(r-1)",
                         (ti.d + 1) * (r - 1)});
  }
  return out;
}

/// i(deleted product) >= d(r-1), from i(join) <= i'(A) + i(product) with
/// i'(A) <= i'(free sphere S^{r-2}) = r-1.
inline IndexBound index_lower_bound_deleted_product(const TheoremInstance& ti) {
  if (auto pr = ti.problems(); !pr.empty()) throw std::invalid_argument(pr.front());
  IndexBound out;
  out.space = "deleted-product-of-rainbow-complex";
  const std::int64_t r = ti.r();
  const std::int64_t needed = (ti.d - ti.k) * (r - 1);
  if (ti.m_large < needed) {
    out.trace.push_back({rule::kLargeClassCondition,
                         "m = " + std::to_string(ti.m_large) + " < (d-k)(r-1) = " + std::to_string(needed), needed});
    return out;
  }
  auto join_bound = index_lower_bound_deleted_join(ti);
  if (!join_bound.lower) {
    out.trace = join_bound.trace;
    return out;
  }
  const std::int64_t join_lower = (ti.d + 1) * (r - 1);
  out.trace.push_back({rule::kLargeClassCondition, "i(deleted join) >= (d+1)(r-1)", join_lower});
  out.trace.push_back({rule::kSphereIndex, "i'(S^{r-2}) = r-1 for a fixed-point-free action", r - 1});
  out.trace.push_back({rule::kMonotonicity, "A maps equivariantly to S^{r-2}, so i'(A) <= r-1", r - 1});
  out.trace.push_back({rule::kUnionSubadditivity, "i(deleted join) <= i'(A) + i(deleted product)",
                       join_lower - (r - 1)});
  out.lower = join_lower - (r - 1);
  return out;
}

/// Upgrade to r faces when m exceeds (d-k)(r-1) strictly.
inline std::optional<Upgrade> strict_inequality_note(const TheoremInstance& ti) {
  if (!ti.valid()) return std::nullopt;
  const std::int64_t r = ti.r();
  const std::int64_t needed = (ti.d - ti.k) * (r - 1);
  if (ti.m_large <= needed) return std::nullopt;
  auto join_bound = index_lower_bound_deleted_join(ti);
  if (!join_bound.lower) return std::nullopt;
  Upgrade up;
  up.faces = r;
  up.trace.push_back({rule::kStrictExcess,
                      "m = " + std::to_string(ti.m_large) + " > (d-k)(r-1) = " + std::to_string(needed) +
                          " gives i(deleted join) >= (d+1)(r-1) + 1",
                      (ti.d + 1) * (r - 1) + 1});
  up.trace.push_back({rule::kStrictExcess, "r pairwise disjoint rainbow faces with intersecting images", r});
  return up;
}

/// Applicability of the partial-coincidence theorem with y = q = p^n - 1 and
/// target dimension d to the p^n-fold deleted product of the rainbow complex.
inline Verdict volovikov_condition(const TheoremInstance& ti) {
  Verdict v;
  v.target_dim = ti.d;
  v.m_large = ti.m_large;

  const auto problems = ti.problems();
  {
    Condition c{"parameters", problems.empty(), false, ""};
    for (std::size_t i = 0; i < problems.size(); ++i) c.detail += (i ? "; " : "") + problems[i];
    if (c.passed) c.detail = "1 <= k <= d, 0 <= m <= k+1, p prime, k+1 classes";
    v.conditions.push_back(std::move(c));
  }
  if (!problems.empty()) {
    v.applicable = false;
    return v;
  }

  const std::int64_t r = ti.r();
  const std::int64_t q = ti.q();
  const std::int64_t y = q;
  v.q = q;
  v.promised_faces = q;

  const auto classes = size_thresholds(ti.sizes, r, ti.m_large);
  bool sizes_ok = true;
  for (const auto& c : classes) sizes_ok = sizes_ok && c.passed;
  v.conditions.push_back({"size_thresholds", sizes_ok, false,
                          sizes_ok ? "|C_i| >= 2r-1 for i <= m, >= 2r-4 otherwise"
                                   : detail::threshold_failures(classes)});

  const std::int64_t needed = (ti.d - ti.k) * (r - 1);
  v.conditions.push_back({"large_class_count", ti.m_large >= needed, false,
                          "m = " + std::to_string(ti.m_large) + ", (d-k)(r-1) = " + std::to_string(needed)});

  v.required_index = (v.target_dim - 1) * (r - 1) + y;
  auto product_bound = index_lower_bound_deleted_product(ti);
  v.trace = product_bound.trace;
  v.achieved_lower_bound = product_bound.lower;
  {
    Condition c{"index_inequality", false, false, ""};
    if (product_bound.lower) {
      c.passed = *product_bound.lower >= v.required_index;
      c.detail = "i(deleted product) >= " + std::to_string(*product_bound.lower) +
                 " vs (target_dim-1)(p^n-1) + y = " + std::to_string(v.required_index) +
                 (*product_bound.lower == v.required_index ? " (equality)" : "");
    } else {
      c.detail = "no lower bound on the deleted-product index";
    }
    v.conditions.push_back(std::move(c));
  }

  {
    Condition c{"coincidence_multiplicity", true, false, ""};
    if (y < 2) {
      c.detail = "y = q = 1: a single nonempty rainbow face already satisfies the conclusion";
    } else if (y > r) {
      c.passed = false;
      c.detail = "y exceeds the group order";
    } else if (y == 3) {
      c.passed = r == 3 || r == 4 || r == 5;
      c.detail = c.passed ? "y = 3 is excluded in general; covered by the extension to r in {3,4,5} (r = " +
                                std::to_string(r) + ")"
                          : "y = 3 with r outside {3,4,5}";
    } else {
      c.detail = "2 <= y = " + std::to_string(y) + " <= p^n, y != 3";
    }
    v.conditions.push_back(std::move(c));
  }

  v.conditions.push_back({"configuration_space_connected", true, true,
                          "connectedness of the deleted product is assumed, not verified at this scale"});

  v.applicable = true;
  for (const auto& c : v.conditions) v.applicable = v.applicable && c.passed;

  if (v.applicable) {
    v.trace.push_back({rule::kCoincidence,
                       "A(h, y) nonempty for y = q = " + std::to_string(q) + ", target_dim = " +
                           std::to_string(v.target_dim) + " (m_large = " + std::to_string(v.m_large) + ")",
                       q});
    v.upgrade = strict_inequality_note(ti);
    if (v.upgrade) v.promised_faces = v.upgrade->faces;
  }
  return v;
}

}  // namespace ctv
