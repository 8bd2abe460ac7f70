#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "index_calculus.hpp"
#include "lp.hpp"
#include "rational.hpp"
#include "simplicial_complex.hpp"

namespace ctv {

/// Points in R^d, one per vertex of the colored simplex, with their color
/// classes. An affine map from the simplex is determined by these points.
struct ColoredConfiguration {
  std::size_t d = 0;
  std::vector<Point> points;
  Coloring coloring;

  void validate() const {
    for (const auto& pt : points)
      if (pt.size() != d) throw std::invalid_argument("point has wrong dimension");
    coloring.validate(points.size());
  }
};

/// At most one point per color, at least one overall. `by_color[c]` is the
/// chosen point of color c, and `vertices` the sorted point indices.
struct RainbowFace {
  std::vector<std::optional<std::uint32_t>> by_color;
  std::vector<std::uint32_t> vertices;

  int dim() const noexcept { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const RainbowFace&, const RainbowFace&) = default;
};

/// A common point of the hulls of pairwise disjoint faces, certified by convex
/// weights (weights[i][j] belongs to faces[i].vertices[j]).
struct Witness {
  std::vector<RainbowFace> faces;
  Point point;
  std::vector<std::vector<Rational>> weights;
};

struct HullIntersection {
  Point point;
  std::vector<std::vector<Rational>> weights;
};

/// All rainbow faces of dimension <= max_dim (negative means unbounded), sorted
/// lexicographically by their vertex lists.
inline std::vector<RainbowFace> enumerate_rainbow_faces(const ColoredConfiguration& config, int max_dim = -1) {
  const auto& classes = config.coloring.classes;
  std::vector<RainbowFace> out;
  RainbowFace cur;
  cur.by_color.assign(classes.size(), std::nullopt);
  auto pick = [&](auto&& self, std::size_t color) -> void {
    if (color == classes.size()) {
      if (cur.vertices.empty()) return;
      RainbowFace f = cur;
      std::sort(f.vertices.begin(), f.vertices.end());
      out.push_back(std::move(f));
      return;
    }
    self(self, color + 1);
    if (max_dim >= 0 && static_cast<int>(cur.vertices.size()) > max_dim) return;
    for (auto v : classes[color]) {
      cur.by_color[color] = v;
      cur.vertices.push_back(v);
      self(self, color + 1);
      cur.vertices.pop_back();
      cur.by_color[color] = std::nullopt;
    }
  };
  pick(pick, 0);
  std::sort(out.begin(), out.end(), [](const RainbowFace& a, const RainbowFace& b) { return a.vertices < b.vertices; });
  return out;
}

/// Exact test whether the convex hulls of the given point sets share a point.
/// Solves for weights l_{i,j} >= 0 with sum_j l_{i,j} = 1 per set and equal
/// weighted sums across sets.
inline std::optional<HullIntersection> hulls_intersect(const std::vector<std::vector<std::uint32_t>>& faces,
                                                       const ColoredConfiguration& config,
                                                       std::size_t* pivots = nullptr) {
  if (faces.empty()) throw std::invalid_argument("no faces given");
  const std::size_t d = config.d;
  std::vector<std::size_t> offset;
  std::size_t vars = 0;
  for (const auto& f : faces) {
    if (f.empty()) throw std::invalid_argument("faces must be nonempty");
    for (auto v : f)
      if (v >= config.points.size()) throw std::invalid_argument("face references unknown point");
    offset.push_back(vars);
    vars += f.size();
  }

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t j = 0; j < faces[i].size(); ++j) row[offset[i] + j] = 1;
    a.push_back(std::move(row));
    b.emplace_back(1);
  }
  for (std::size_t i = 1; i < faces.size(); ++i) {
    for (std::size_t c = 0; c < d; ++c) {
      std::vector<Rational> row(vars, Rational(0));
      for (std::size_t j = 0; j < faces[i].size(); ++j) row[offset[i] + j] = config.points[faces[i][j]][c];
      for (std::size_t j = 0; j < faces[0].size(); ++j) row[offset[0] + j] = -config.points[faces[0][j]][c];
      a.push_back(std::move(row));
      b.emplace_back(0);
    }
  }

  auto lp = find_feasible_point(a, b);
  if (pivots) *pivots += lp.pivots;
  if (!lp.feasible) return std::nullopt;

  HullIntersection out;
  out.point.assign(d, Rational(0));
  for (std::size_t i = 0; i < faces.size(); ++i) {
    std::vector<Rational> w(lp.x.begin() + static_cast<std::ptrdiff_t>(offset[i]),
                            lp.x.begin() + static_cast<std::ptrdiff_t>(offset[i] + faces[i].size()));
    out.weights.push_back(std::move(w));
  }
  for (std::size_t j = 0; j < faces[0].size(); ++j)
    for (std::size_t c = 0; c < d; ++c) out.point[c] += out.weights[0][j] * config.points[faces[0][j]][c];
  return out;
}

/// Re-checks a witness with pure rational arithmetic: rainbow faces, pairwise
/// disjoint, weights nonnegative summing to one, weighted sums equal to `point`.
inline bool verify_witness(const ColoredConfiguration& config, const Witness& w) {
  if (w.faces.size() != w.weights.size() || w.point.size() != config.d) return false;
  const auto color = config.coloring.color_of(config.points.size());
  std::vector<char> used(config.points.size(), 0);
  for (std::size_t i = 0; i < w.faces.size(); ++i) {
    const auto& f = w.faces[i];
    if (f.vertices.empty() || f.vertices.size() != w.weights[i].size()) return false;
    std::vector<char> color_hit(config.coloring.color_count(), 0);
    Point sum(config.d, Rational(0));
    Rational total = 0;
    for (std::size_t j = 0; j < f.vertices.size(); ++j) {
      const auto v = f.vertices[j];
      if (v >= config.points.size() || used[v]) return false;
      used[v] = 1;
      if (color_hit[color[v]]++) return false;
      if (sgn(w.weights[i][j]) < 0) return false;
      total += w.weights[i][j];
      for (std::size_t c = 0; c < config.d; ++c) sum[c] += w.weights[i][j] * config.points[v][c];
    }
    if (total != 1 || sum != w.point) return false;
  }
  return true;
}

enum class SearchStatus { Found, Exhausted, BudgetExhausted };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "unknown";
}

struct SearchOptions {
  std::size_t lp_budget = 1'000'000;
  bool prune = true;
  int max_dim = -1;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Witness> witness;
  std::size_t lp_calls = 0;
  std::size_t nodes = 0;
  std::size_t pivots = 0;
};

/// Rainbow faces in search order: larger faces first, then lexicographic.
inline std::vector<RainbowFace> search_order(std::vector<RainbowFace> faces) {
  std::stable_sort(faces.begin(), faces.end(), [](const RainbowFace& a, const RainbowFace& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() > b.vertices.size();
    return a.vertices < b.vertices;
  });
  return faces;
}

/// Depth-first search for q pairwise disjoint rainbow faces whose hulls share
/// a point. Faces are taken in increasing search-order position, so each
/// unordered family is visited once. With pruning, a prefix is only extended
/// when its hulls already intersect.
inline SearchResult find_disjoint_intersecting_family(const ColoredConfiguration& config, std::int64_t q,
                                                      const SearchOptions& opts = {}) {
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  config.validate();
  const auto faces = search_order(enumerate_rainbow_faces(config, opts.max_dim));

  SearchResult res;
  std::vector<char> used(config.points.size(), 0);
  std::vector<std::size_t> chosen;
  std::vector<std::vector<std::uint32_t>> sets;
  bool budget_hit = false;

  auto check = [&]() -> std::optional<HullIntersection> {
    if (res.lp_calls >= opts.lp_budget) {
      budget_hit = true;
      return std::nullopt;
    }
    ++res.lp_calls;
    return hulls_intersect(sets, config, &res.pivots);
  };

  auto dfs = [&](auto&& self, std::size_t start) -> bool {
    for (std::size_t i = start; i < faces.size(); ++i) {
      const auto& f = faces[i];
      bool free = true;
      for (auto v : f.vertices)
        if (used[v]) { free = false; break; }
      if (!free) continue;
      ++res.nodes;
      for (auto v : f.vertices) used[v] = 1;
      chosen.push_back(i);
      sets.push_back(f.vertices);

      const bool full = static_cast<std::int64_t>(chosen.size()) == q;
      bool descend = true;
      std::optional<HullIntersection> hit;
      if (full || (opts.prune && chosen.size() >= 2)) {
        hit = check();
        descend = hit.has_value();
      }
      if (full && hit) {
        Witness w;
        for (auto idx : chosen) w.faces.push_back(faces[idx]);
        w.point = hit->point;
        w.weights = hit->weights;
        res.witness = std::move(w);
        return true;
      }
      if (!full && descend && !budget_hit && self(self, i + 1)) return true;

      sets.pop_back();
      chosen.pop_back();
      for (auto v : f.vertices) used[v] = 0;
      if (budget_hit) return false;
    }
    return false;
  };

  if (dfs(dfs, 0)) {
    res.status = SearchStatus::Found;
  } else {
    res.status = budget_hit ? SearchStatus::BudgetExhausted : SearchStatus::Exhausted;
  }
  return res;
}

/// Deterministic integer coordinates in [-bound, bound]^d. Color class i gets
/// sizes[i] consecutive point indices.
inline ColoredConfiguration random_configuration(std::size_t d, const std::vector<std::size_t>& sizes,
                                                 std::uint64_t seed, std::int64_t coordinate_bound) {
  if (coordinate_bound < 1) throw std::invalid_argument("coordinate bound must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-coordinate_bound, coordinate_bound);
  ColoredConfiguration cfg;
  cfg.d = d;
  std::uint32_t next = 0;
  for (std::size_t s : sizes) {
    std::vector<std::uint32_t> cls;
    for (std::size_t i = 0; i < s; ++i) {
      Point pt;
      for (std::size_t c = 0; c < d; ++c) pt.emplace_back(static_cast<long>(coord(rng)));
      cfg.points.push_back(std::move(pt));
      cls.push_back(next++);
    }
    cfg.coloring.classes.push_back(std::move(cls));
  }
  return cfg;
}

/// splitmix64 finalizer; derives independent per-trial seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct ExperimentOptions {
  /// Number of faces to look for; defaults to p^n - 1.
  std::optional<std::int64_t> q;
  std::size_t lp_budget = 1'000'000;
  std::int64_t coordinate_bound = 1000;
  unsigned threads = 1;
  bool prune = true;
};

struct TrialRecord {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  SearchStatus status = SearchStatus::Exhausted;
  std::size_t lp_calls = 0;
  std::size_t nodes = 0;
  std::optional<Witness> witness;
  bool certificate_ok = false;
};

struct Counterexample {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::int64_t q = 0;
  ColoredConfiguration config;
};

struct ExperimentReport {
  TheoremInstance instance;
  Verdict verdict;
  std::int64_t q = 0;
  /// "theorem" when the verdict promises at least q faces, else "exploratory".
  std::string label;
  std::vector<TrialRecord> trials;
  std::vector<Counterexample> counterexamples;
  std::size_t successes = 0;
  std::size_t exhausted = 0;
  std::size_t budget_exhausted = 0;
  std::size_t certificate_failures = 0;
};

/// Runs `trials` seeded searches on random configurations with the instance's
/// color class sizes in dimension d. Trials are independent; the report is in
/// trial order regardless of scheduling.
inline ExperimentReport verify_theorem_empirically(const TheoremInstance& ti, std::size_t trials, std::uint64_t seed,
                                                   const ExperimentOptions& opts = {}) {
  if (auto pr = ti.problems(); !pr.empty()) throw std::invalid_argument(pr.front());
  ExperimentReport rep;
  rep.instance = ti;
  rep.verdict = volovikov_condition(ti);
  rep.q = opts.q.value_or(ti.q());
  if (rep.q < 1) throw std::invalid_argument("q must be at least 1");
  rep.label = (rep.verdict.applicable && rep.q <= rep.verdict.promised_faces) ? "theorem" : "exploratory";
  rep.trials.resize(trials);

  SearchOptions sopts;
  sopts.lp_budget = opts.lp_budget;
  sopts.prune = opts.prune;

  std::vector<ColoredConfiguration> configs(trials);
  auto run_trial = [&](std::size_t t) {
    TrialRecord rec;
    rec.trial = t;
    rec.seed = mix_seed(seed + t);
    configs[t] = random_configuration(static_cast<std::size_t>(ti.d), ti.sizes, rec.seed, opts.coordinate_bound);
    auto res = find_disjoint_intersecting_family(configs[t], rep.q, sopts);
    rec.status = res.status;
    rec.lp_calls = res.lp_calls;
    rec.nodes = res.nodes;
    if (res.witness) rec.certificate_ok = verify_witness(configs[t], *res.witness);
    rec.witness = std::move(res.witness);
    rep.trials[t] = std::move(rec);
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::max<std::size_t>(trials, 1))));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < trials; t = next++) run_trial(t);
      });
  }

  for (const auto& rec : rep.trials) {
    switch (rec.status) {
      case SearchStatus::Found:
        ++rep.successes;
        if (!rec.certificate_ok) ++rep.certificate_failures;
        break;
      case SearchStatus::Exhausted:
        ++rep.exhausted;
        if (rep.label == "theorem") rep.counterexamples.push_back({rec.trial, rec.seed, rep.q, configs[rec.trial]});
        break;
      case SearchStatus::BudgetExhausted:
        ++rep.budget_exhausted;
        break;
    }
  }
  return rep;
}

}  // namespace ctv
