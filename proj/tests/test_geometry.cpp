#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include <ctverberg/json_io.hpp>

#include "oracles.hpp"

using namespace ctv;

namespace {

ColoredConfiguration make_config(std::size_t d, const std::vector<std::vector<long>>& pts,
                                 std::vector<std::vector<VertexId>> colors) {
  ColoredConfiguration c;
  c.d = d;
  for (const auto& p : pts) {
    Point q;
    for (long x : p) q.emplace_back(x);
    c.points.push_back(std::move(q));
  }
  c.coloring.classes = std::move(colors);
  c.validate();
  return c;
}

std::vector<oracle::Pt> gather(const ColoredConfiguration& c, const std::vector<std::uint32_t>& idx) {
  std::vector<oracle::Pt> out;
  for (auto i : idx) out.push_back(c.points[i]);
  return out;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Lp, SimpleSystems) {
  // x + y = 1, x - y = 0.
  std::vector<std::vector<Rational>> a{{1, 1}, {1, -1}};
  std::vector<Rational> b{1, 0};
  auto r = find_feasible_point(a, b);
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.x[0], Rational(1, 2));
  EXPECT_EQ(r.x[1], Rational(1, 2));
  // x + y = -1 has no nonnegative solution.
  EXPECT_FALSE(find_feasible_point({{1, 1}}, {Rational(-1)}).feasible);
  // Redundant rows.
  EXPECT_TRUE(find_feasible_point({{1, 2}, {2, 4}}, {Rational(2), Rational(4)}).feasible);
}

TEST(Hulls, CrossingSegments) {
  auto c = make_config(2, {{0, 0}, {2, 2}, {0, 2}, {2, 0}}, {{0, 1}, {2, 3}});
  auto hit = hulls_intersect({{0, 1}, {2, 3}}, c);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->point, (Point{1, 1}));
}

TEST(Hulls, ParallelSegmentsMiss) {
  auto c = make_config(2, {{0, 0}, {2, 0}, {0, 1}, {2, 1}}, {{0, 1}, {2, 3}});
  EXPECT_FALSE(hulls_intersect({{0, 1}, {2, 3}}, c));
}

TEST(Hulls, PointInTriangleAndOnEdge) {
  auto c = make_config(2, {{0, 0}, {4, 0}, {0, 4}, {1, 1}, {2, 0}, {5, 5}}, {{0, 1, 2, 3, 4, 5}});
  EXPECT_TRUE(hulls_intersect({{0, 1, 2}, {3}}, c));
  EXPECT_TRUE(hulls_intersect({{0, 1, 2}, {4}}, c));
  EXPECT_FALSE(hulls_intersect({{0, 1, 2}, {5}}, c));
}

TEST(Hulls, ThreeWayInOneDimension) {
  auto c = make_config(1, {{0}, {4}, {2}, {6}, {3}}, {{0, 1, 2, 3, 4}});
  auto hit = hulls_intersect({{0, 1}, {2, 3}, {4}}, c);
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->point, (Point{3}));
  EXPECT_FALSE(hulls_intersect({{0, 2}, {1, 3}}, c));
}

TEST(Hulls, RejectsBadFaces) {
  auto c = make_config(1, {{0}}, {{0}});
  EXPECT_THROW(hulls_intersect({}, c), std::invalid_argument);
  EXPECT_THROW(hulls_intersect({{}}, c), std::invalid_argument);
  EXPECT_THROW(hulls_intersect({{3}}, c), std::invalid_argument);
}

TEST(Hulls, AgreesWithPlanarOracle) {
  std::mt19937 rng(17);
  int hits = 0, misses = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = 1 + trial % 2;
    const std::size_t n = 4 + rng() % 6;
    std::vector<std::vector<long>> pts(n, std::vector<long>(d));
    for (auto& p : pts)
      for (auto& x : p) x = static_cast<long>(rng() % 9) - 4;
    std::vector<VertexId> all(n);
    std::iota(all.begin(), all.end(), 0);
    auto c = make_config(d, pts, {all});
    std::vector<std::uint32_t> perm(all.begin(), all.end());
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t groups = 2 + rng() % 2;
    std::vector<std::vector<std::uint32_t>> sets(groups);
    for (std::size_t i = 0; i < n && i < groups * 3; ++i) sets[i % groups].push_back(perm[i]);
    std::vector<std::vector<oracle::Pt>> ps;
    for (auto& s : sets) {
      std::sort(s.begin(), s.end());
      ps.push_back(gather(c, s));
    }
    auto ours = hulls_intersect(sets, c);
    auto theirs = oracle::common_hull_point(ps);
    ASSERT_EQ(ours.has_value(), theirs.has_value()) << "trial " << trial;
    if (ours) {
      ++hits;
      for (const auto& s : ps) EXPECT_TRUE(oracle::in_hull(ours->point, s));
    } else {
      ++misses;
    }
  }
  EXPECT_GT(hits, 20);
  EXPECT_GT(misses, 20);
}

TEST(RainbowFaces, CountsAndShape) {
  auto c = random_configuration(2, {2, 3}, 1, 10);
  auto faces = enumerate_rainbow_faces(c);
  EXPECT_EQ(faces.size(), 3u * 4u - 1u);
  for (const auto& f : faces) EXPECT_TRUE(std::is_sorted(f.vertices.begin(), f.vertices.end()));
  EXPECT_EQ(enumerate_rainbow_faces(c, 0).size(), 5u);
  auto ordered = search_order(faces);
  EXPECT_EQ(ordered.front().vertices.size(), 2u);
  EXPECT_EQ(ordered.back().vertices.size(), 1u);
}

TEST(Search, SingleFaceAlwaysExists) {
  auto c = random_configuration(3, {1, 2}, 9, 100);
  auto res = find_disjoint_intersecting_family(c, 1);
  EXPECT_EQ(res.status, SearchStatus::Found);
  ASSERT_TRUE(res.witness);
  EXPECT_TRUE(verify_witness(c, *res.witness));
}

TEST(Search, RadonPartitionInThePlane) {
  // Four points, each its own color: two disjoint faces always meet.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto c = random_configuration(2, {1, 1, 1, 1}, seed, 50);
    auto res = find_disjoint_intersecting_family(c, 2);
    ASSERT_EQ(res.status, SearchStatus::Found) << seed;
    EXPECT_TRUE(verify_witness(c, *res.witness));
  }
}

TEST(Search, ColoredTverbergThreeFacesInThePlane) {
  // Three classes of 2r-1 = 5 points; all three large, so three faces.
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    auto c = random_configuration(2, {5, 5, 5}, mix_seed(seed), 1000);
    auto res = find_disjoint_intersecting_family(c, 3);
    ASSERT_EQ(res.status, SearchStatus::Found) << seed;
    EXPECT_TRUE(verify_witness(c, *res.witness));
    EXPECT_EQ(res.witness->faces.size(), 3u);
  }
}

TEST(Search, ExhaustsWhenNoFamilyExists) {
  auto c = make_config(1, {{0}, {1}}, {{0, 1}});
  auto res = find_disjoint_intersecting_family(c, 2);
  EXPECT_EQ(res.status, SearchStatus::Exhausted);
  EXPECT_FALSE(res.witness);
}

TEST(Search, BudgetIsReportedSeparately) {
  auto c = make_config(1, {{0}, {1}, {2}}, {{0, 1, 2}});
  SearchOptions o;
  o.lp_budget = 1;
  auto res = find_disjoint_intersecting_family(c, 2, o);
  EXPECT_EQ(res.status, SearchStatus::BudgetExhausted);
  EXPECT_LE(res.lp_calls, 1u);
}

TEST(Search, PruningDoesNotChangeTheAnswer) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto c = random_configuration(2, {2, 3, 2}, seed, 6);
    for (std::int64_t q : {2, 3}) {
      SearchOptions a, b;
      b.prune = false;
      auto ra = find_disjoint_intersecting_family(c, q, a);
      auto rb = find_disjoint_intersecting_family(c, q, b);
      EXPECT_EQ(ra.status, rb.status) << seed << " q=" << q;
      if (ra.witness) {
        EXPECT_TRUE(verify_witness(c, *ra.witness));
      }
      if (rb.witness) {
        EXPECT_TRUE(verify_witness(c, *rb.witness));
      }
    }
  }
}

TEST(Witness, TamperedCertificatesFail) {
  auto c = make_config(2, {{0, 0}, {2, 2}, {0, 2}, {2, 0}}, {{0, 2}, {1, 3}});
  auto res = find_disjoint_intersecting_family(c, 2);
  ASSERT_EQ(res.status, SearchStatus::Found);
  auto w = *res.witness;
  EXPECT_TRUE(verify_witness(c, w));
  auto moved = w;
  moved.point[0] += 1;
  EXPECT_FALSE(verify_witness(c, moved));
  auto overlapping = w;
  overlapping.faces[1] = overlapping.faces[0];
  overlapping.weights[1] = overlapping.weights[0];
  EXPECT_FALSE(verify_witness(c, overlapping));
  auto negative = w;
  negative.weights[0][0] = -negative.weights[0][0];
  EXPECT_FALSE(verify_witness(c, negative));
}

TEST(Witness, JsonRoundTrip) {
  auto c = random_configuration(2, {5, 5, 5}, 3, 1000);
  auto res = find_disjoint_intersecting_family(c, 3);
  ASSERT_TRUE(res.witness);
  auto cj = config_to_json(c);
  auto c2 = config_from_json(json::parse(cj.dump()));
  EXPECT_EQ(c2.points, c.points);
  auto w2 = witness_from_json(json::parse(witness_to_json(*res.witness).dump()), c2);
  EXPECT_TRUE(verify_witness(c2, w2));
  EXPECT_EQ(w2.faces, res.witness->faces);
}

TEST(Configuration, RejectsMalformedInput) {
  EXPECT_THROW(config_from_json(json::parse(R"({"d": 2, "points": [["1","2"]], "colors": [[0,0]]})")),
               std::invalid_argument);
  EXPECT_THROW(config_from_json(json::parse(R"({"d": 2, "points": [["1"]], "colors": [[0]]})")), std::invalid_argument);
  EXPECT_THROW(config_from_json(json::parse(R"({"d": 1, "points": [["1"],["2"]], "colors": [[0]]})")),
               std::invalid_argument);
  EXPECT_THROW(config_from_json(json::parse(R"({"d": 1, "points": [["1/0"]], "colors": [[0]]})")),
               std::invalid_argument);
  EXPECT_THROW(config_from_json(json::parse(R"({"d": 1, "points": [["1"]]})")), std::invalid_argument);
  auto ok = config_from_json(json::parse(R"({"d": 1, "points": [["1/2"], [3]], "colors": [[1], [0]]})"));
  EXPECT_EQ(ok.points[0][0], Rational(1, 2));
}

TEST(Experiment, RandomConfigurationShape) {
  auto c = random_configuration(3, {2, 4}, 42, 7);
  EXPECT_EQ(c.points.size(), 6u);
  EXPECT_EQ(c.coloring.classes, (std::vector<std::vector<VertexId>>{{0, 1}, {2, 3, 4, 5}}));
  for (const auto& p : c.points) {
    ASSERT_EQ(p.size(), 3u);
    for (const auto& x : p) {
      EXPECT_LE(abs(x), 7);
      EXPECT_EQ(x.get_den(), 1);
    }
  }
  EXPECT_EQ(random_configuration(3, {2, 4}, 42, 7).points, c.points);
  EXPECT_NE(random_configuration(3, {2, 4}, 43, 7).points, c.points);
}

TEST(Experiment, DeterministicAcrossThreadCounts) {
  TheoremInstance ti{2, 2, 3, 3, 1, {5, 5, 5}};
  ExperimentOptions one, four;
  four.threads = 4;
  auto a = verify_theorem_empirically(ti, 12, 99, one);
  auto b = verify_theorem_empirically(ti, 12, 99, four);
  EXPECT_EQ(experiment_to_json(a).dump(), experiment_to_json(b).dump());
  EXPECT_EQ(a.label, "theorem");
  EXPECT_EQ(a.q, 2);
  EXPECT_EQ(a.successes, 12u);
  EXPECT_EQ(a.certificate_failures, 0u);
}

TEST(Experiment, LabelsQueriesBeyondTheTheoremAsExploratory) {
  TheoremInstance ti{2, 2, 0, 3, 1, {1, 1, 1}};
  ExperimentOptions o;
  o.q = 2;
  auto rep = verify_theorem_empirically(ti, 5, 1, o);
  EXPECT_EQ(rep.label, "exploratory");
  EXPECT_TRUE(rep.counterexamples.empty());
  EXPECT_EQ(rep.successes + rep.exhausted + rep.budget_exhausted, 5u);
}

TEST(Experiment, RejectsInvalidInstances) {
  EXPECT_THROW(verify_theorem_empirically(TheoremInstance{2, 2, 0, 4, 1, {5, 5, 5}}, 1, 0), std::invalid_argument);
  ExperimentOptions o;
  o.q = 0;
  EXPECT_THROW(verify_theorem_empirically(TheoremInstance{2, 2, 0, 3, 1, {5, 5, 5}}, 1, 0, o), std::invalid_argument);
}
