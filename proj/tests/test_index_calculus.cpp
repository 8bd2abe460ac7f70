#include <gtest/gtest.h>

#include <ctverberg/index_calculus.hpp>

using namespace ctv;

namespace {

const Condition& condition(const Verdict& v, const std::string& name) {
  for (const auto& c : v.conditions)
    if (c.name == name) return c;
  throw std::runtime_error("missing condition " + name);
}

}  // namespace

TEST(JoinConnectivity, WorkedExamples) {
  EXPECT_EQ(conn_lower_bound_join({13, 13, 13, 13, 13, 13, 10, 10}, 7, 6).value, 52);
  EXPECT_EQ(conn_lower_bound_join({10, 10, 10}, 7, 0).value, 16);
  EXPECT_EQ(conn_lower_bound_join({3, 3}, 2, 2).value, 2);
}

TEST(JoinConnectivity, WithheldBelowThreshold) {
  auto b = conn_lower_bound_join({9, 10, 10}, 7, 0);
  EXPECT_FALSE(b.value);
  EXPECT_FALSE(b.thresholds_met());
  EXPECT_FALSE(b.classes[0].passed);
  EXPECT_EQ(b.classes[0].threshold, 10);
  // A large class needs 2r-1.
  EXPECT_FALSE(conn_lower_bound_join({12, 10, 10}, 7, 1).value);
  EXPECT_TRUE(conn_lower_bound_join({13, 10, 10}, 7, 1).value);
}

TEST(JoinConnectivity, RejectsBadArguments) {
  EXPECT_THROW(conn_lower_bound_join({}, 3, 0), std::invalid_argument);
  EXPECT_THROW(conn_lower_bound_join({5}, 1, 0), std::invalid_argument);
  EXPECT_THROW(conn_lower_bound_join({5, 5}, 3, 3), std::invalid_argument);
}

TEST(IndexBounds, WorkedExampleLargeClasses) {
  TheoremInstance ti{8, 7, 6, 7, 1, {13, 13, 13, 13, 13, 13, 10, 10}};
  auto join = index_lower_bound_deleted_join(ti);
  ASSERT_TRUE(join.lower);
  EXPECT_EQ(*join.lower, 54);
  EXPECT_FALSE(join.trace.empty());
  auto prod = index_lower_bound_deleted_product(ti);
  ASSERT_TRUE(prod.lower);
  EXPECT_EQ(*prod.lower, 48);
}

TEST(IndexBounds, WorkedExampleNoLargeClasses) {
  TheoremInstance ti{2, 2, 0, 7, 1, {10, 10, 10}};
  EXPECT_EQ(index_lower_bound_deleted_join(ti).lower, 18);
  EXPECT_EQ(index_lower_bound_deleted_product(ti).lower, 12);
}

TEST(IndexBounds, SmallestCase) {
  TheoremInstance ti{1, 1, 2, 2, 1, {3, 3}};
  EXPECT_EQ(index_lower_bound_deleted_join(ti).lower, 4);
  EXPECT_EQ(index_lower_bound_deleted_product(ti).lower, 1);
}

TEST(IndexBounds, ProductBoundNeedsLargeClasses) {
  TheoremInstance ti{3, 2, 1, 3, 1, {5, 5, 5}};
  // (d-k)(r-1) = 2 > m = 1.
  EXPECT_TRUE(index_lower_bound_deleted_join(ti).lower);
  EXPECT_FALSE(index_lower_bound_deleted_product(ti).lower);
}

TEST(IndexBounds, JoinBoundIsMonotoneInM) {
  for (std::int64_t k = 1; k <= 4; ++k)
    for (std::uint32_t p : {2u, 3u, 5u}) {
      std::int64_t prev = -1;
      for (std::int64_t m = 0; m <= k + 1; ++m) {
        auto ti = TheoremInstance::at_threshold(k, k, m, p, 1);
        auto b = index_lower_bound_deleted_join(ti);
        ASSERT_TRUE(b.lower);
        EXPECT_EQ(*b.lower, (k + 1) * (ti.r() - 1) + m);
        EXPECT_GT(*b.lower, prev);
        prev = *b.lower;
      }
    }
}

TEST(IndexBounds, InvalidInstanceThrows) {
  TheoremInstance ti{2, 2, 0, 4, 1, {10, 10, 10}};
  EXPECT_THROW(index_lower_bound_deleted_join(ti), std::invalid_argument);
  TheoremInstance wrong_count{2, 2, 0, 7, 1, {10, 10}};
  EXPECT_THROW(index_lower_bound_deleted_product(wrong_count), std::invalid_argument);
}

TEST(Verdict, LargeClassExampleHoldsWithEquality) {
  TheoremInstance ti{8, 7, 6, 7, 1, {13, 13, 13, 13, 13, 13, 10, 10}};
  auto v = volovikov_condition(ti);
  EXPECT_TRUE(v.applicable);
  EXPECT_EQ(v.q, 6);
  EXPECT_EQ(v.required_index, 48);
  EXPECT_EQ(v.achieved_lower_bound, 48);
  EXPECT_EQ(v.promised_faces, 6);
  EXPECT_FALSE(v.upgrade);
  EXPECT_NE(condition(v, "index_inequality").detail.find("equality"), std::string::npos);
}

TEST(Verdict, NoLargeClassExample) {
  TheoremInstance ti{2, 2, 0, 7, 1, {10, 10, 10}};
  auto v = volovikov_condition(ti);
  EXPECT_TRUE(v.applicable);
  EXPECT_EQ(v.required_index, 12);
  EXPECT_EQ(v.achieved_lower_bound, 12);
  EXPECT_EQ(v.promised_faces, 6);
}

TEST(Verdict, MultiplicityThreeIsCoveredAtFour) {
  TheoremInstance ti{2, 2, 0, 2, 2, {4, 4, 4}};
  auto v = volovikov_condition(ti);
  EXPECT_EQ(v.q, 3);
  EXPECT_TRUE(condition(v, "coincidence_multiplicity").passed);
  EXPECT_TRUE(v.applicable);
}

TEST(Verdict, MultiplicityOneIsTrivial) {
  TheoremInstance ti{2, 2, 3, 2, 1, {3, 3, 3}};
  auto v = volovikov_condition(ti);
  EXPECT_EQ(v.q, 1);
  EXPECT_TRUE(condition(v, "coincidence_multiplicity").passed);
  EXPECT_TRUE(v.applicable);
}

TEST(Verdict, ConnectednessIsAnAssumption) {
  auto v = volovikov_condition(TheoremInstance{2, 2, 0, 7, 1, {10, 10, 10}});
  const auto& c = condition(v, "configuration_space_connected");
  EXPECT_TRUE(c.assumption);
  EXPECT_TRUE(c.passed);
}

TEST(Verdict, NeverApplicableWhenSizesShort) {
  auto v = volovikov_condition(TheoremInstance{2, 2, 0, 7, 1, {10, 9, 10}});
  EXPECT_FALSE(v.applicable);
  EXPECT_FALSE(condition(v, "size_thresholds").passed);
  EXPECT_FALSE(v.achieved_lower_bound);
}

TEST(Verdict, NeverApplicableWhenTooFewLargeClasses) {
  auto ti = TheoremInstance::at_threshold(3, 2, 1, 3, 1);
  auto v = volovikov_condition(ti);
  EXPECT_FALSE(v.applicable);
  EXPECT_FALSE(condition(v, "large_class_count").passed);
}

TEST(Verdict, NeverApplicableForBadParameters) {
  EXPECT_FALSE(volovikov_condition(TheoremInstance{2, 3, 0, 3, 1, {5, 5, 5, 5}}).applicable);
  EXPECT_FALSE(volovikov_condition(TheoremInstance{2, 2, 0, 6, 1, {9, 9, 9}}).applicable);
  EXPECT_FALSE(volovikov_condition(TheoremInstance{2, 2, 4, 3, 1, {9, 9, 9}}).applicable);
}

TEST(Verdict, ApplicableAtEveryThresholdInstance) {
  // With m = (d-k)(r-1) the achieved bound meets the requirement exactly.
  for (std::int64_t d = 1; d <= 4; ++d)
    for (std::int64_t k = 1; k <= d; ++k)
      for (auto [p, n] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
        auto r = static_cast<std::int64_t>(checked_pow(p, n));
        const std::int64_t m = (d - k) * (r - 1);
        if (m > k + 1) continue;
        auto v = volovikov_condition(TheoremInstance::at_threshold(d, k, m, p, n));
        EXPECT_TRUE(v.applicable) << d << " " << k << " " << m << " r=" << r;
        EXPECT_EQ(v.achieved_lower_bound, v.required_index);
        EXPECT_EQ(v.promised_faces, r - 1);
      }
}

TEST(Upgrade, ExcessLargeClassesGiveAllFaces) {
  auto ti = TheoremInstance::at_threshold(1, 1, 1, 3, 1);
  auto up = strict_inequality_note(ti);
  ASSERT_TRUE(up);
  EXPECT_EQ(up->faces, 3);
  auto v = volovikov_condition(ti);
  EXPECT_EQ(v.promised_faces, 3);
}

TEST(Upgrade, NoneAtTheBoundary) {
  EXPECT_FALSE(strict_inequality_note(TheoremInstance{8, 7, 6, 7, 1, {13, 13, 13, 13, 13, 13, 10, 10}}));
  EXPECT_FALSE(strict_inequality_note(TheoremInstance{2, 2, 0, 7, 1, {10, 10, 10}}));
}

TEST(Upgrade, OneMoreLargeClass) {
  TheoremInstance ti{8, 7, 7, 7, 1, {13, 13, 13, 13, 13, 13, 13, 10}};
  auto up = strict_inequality_note(ti);
  ASSERT_TRUE(up);
  EXPECT_EQ(up->faces, 7);
  EXPECT_EQ(volovikov_condition(ti).promised_faces, 7);
}

TEST(Upgrade, RequiresThresholds) {
  TheoremInstance ti{1, 1, 1, 3, 1, {4, 2}};
  EXPECT_FALSE(strict_inequality_note(ti));
}
