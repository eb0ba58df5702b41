#include <random>

#include <gtest/gtest.h>

#include "lpi/errors.hpp"
#include "lpi/refinement.hpp"

using namespace lpi;

namespace {

SparseSet random_set(std::mt19937_64& rng, std::int64_t w, std::int64_t h, unsigned percent) {
  std::vector<LatticePoint> pts;
  for (std::int64_t x = 0; x < w; ++x)
    for (std::int64_t y = 0; y < h; ++y)
      if (rng() % 100 < percent) pts.push_back({x, y});
  return SparseSet(2, std::move(pts));
}

SparseSet negated_image(const Curve& c, std::int64_t N) {
  std::vector<LatticePoint> pts;
  for (const auto& g : c.samples(N)) pts.push_back(-g);
  return SparseSet(c.dim(), std::move(pts));
}

}  // namespace

TEST(Refinement, PropertiesOnRandomSets) {
  std::mt19937_64 rng(5);
  const Curve c = Curve::moment(2);
  for (int t = 0; t < 10; ++t) {
    const SparseSet E = random_set(rng, 12, 80, 35), F = random_set(rng, 12, 80, 35);
    const Refinement r = refine(E, F, c, 8, 3);
    ASSERT_EQ(r.E.size(), 4u);
    for (const auto& ch : check_refinement(r)) EXPECT_TRUE(ch.ok) << ch.name << ": " << ch.detail;
    for (int j = 1; j <= 3; ++j) {
      EXPECT_GE(r.mass_F[j] * 2, r.mass_E[j - 1]);
      EXPECT_GE(r.mass_E[j] * 2, r.mass_F[j]);
    }
  }
}

TEST(Refinement, Constants) {
  EXPECT_EQ(Refinement::c_alpha(1), mpq_class(1, 2));
  EXPECT_EQ(Refinement::c_beta(1), mpq_class(1, 4));
  EXPECT_EQ(Refinement::c_alpha(2), mpq_class(1, 8));
  EXPECT_EQ(Refinement::retention_F(2), mpq_class(1, 8));
  EXPECT_EQ(Refinement::retention_E(2), mpq_class(1, 16));
}

TEST(Refinement, RejectsEmptyOrDisjoint) {
  const Curve c = Curve::moment(2);
  const SparseSet E(2, {{0, 0}}), far(2, {{100, 100}});
  EXPECT_THROW(refine(SparseSet(2), E, c, 4, 1), HypothesisError);
  EXPECT_THROW(refine(E, far, c, 4, 1), HypothesisError);
}

TEST(Slices, MembersAndPruning) {
  const Curve c = Curve::moment(2);
  const std::int64_t N = 6;
  const SparseSet E = negated_image(c, N), F(2, {LatticePoint(2)});
  const Refinement r = refine(E, F, c, N, 1);
  const LatticePoint y = -c.at(3);
  const Slice b = slice_members(y, {}, Direction::B, r);
  EXPECT_EQ(b.members, (std::vector<std::int64_t>{3}));
  const Slice a = slice_members(y, {3}, Direction::A, r);
  EXPECT_EQ(a.members.size(), 6u);
  std::vector<std::int64_t> removed;
  const Slice p = prune_last_slice(y, a, r, &removed);
  EXPECT_EQ(removed, (std::vector<std::int64_t>{3}));
  EXPECT_EQ(p.members.size(), 5u);
  EXPECT_EQ(psi(y, {3, 1}, c), -c.at(1));
  EXPECT_THROW(slice_members(y, {}, Direction::A, r), HypothesisError);
  EXPECT_THROW(slice_members(y, {7}, Direction::A, r), HypothesisError);
  EXPECT_THROW(slice_members({5, 5}, {}, Direction::B, r), HypothesisError);
}

TEST(Tower, StructuredWitness) {
  const Curve c = Curve::moment(2);
  for (std::int64_t N : {4, 9, 16}) {
    const SparseSet E = negated_image(c, N), F(2, {LatticePoint(2)});
    const Refinement r = refine(E, F, c, N, 1);
    EXPECT_EQ(r.alpha[0], N);
    std::int64_t total = 0;
    for (const auto& y : r.E.back()) {
      const Tower t = build_tower(y, r, 1'000'000);
      EXPECT_EQ(t.size, N - 1);
      EXPECT_EQ(t.images.count(y), 0u);
      EXPECT_EQ(multiplicity(t.images).m, 1);
      total += t.size;
    }
    EXPECT_EQ(total, N * (N - 1));
  }
}

TEST(Tower, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(9);
  const Curve c = Curve::moment(2);
  const SparseSet E = random_set(rng, 20, 260, 40), F = random_set(rng, 20, 260, 40);
  const Refinement r = refine(E, F, c, 16, 2);
  const LatticePoint y = r.E.back().points()[r.E.back().size() / 2];
  const Tower a = build_tower(y, r, 10'000'000, 1), b = build_tower(y, r, 10'000'000, 4);
  EXPECT_EQ(a.size, b.size);
  EXPECT_EQ(a.images, b.images);
  EXPECT_EQ(a.min_a, b.min_a);
  const Tower cut1 = build_tower(y, r, 50, 1), cut4 = build_tower(y, r, 50, 4);
  EXPECT_TRUE(cut1.budget_hit);
  EXPECT_EQ(cut1.size, cut4.size);
  EXPECT_EQ(cut1.images, cut4.images);
}

TEST(Multiplicity, PicksSmallestWitnessOnTies) {
  std::map<LatticePoint, std::int64_t> m = {{{2, 2}, 3}, {{1, 5}, 3}, {{0, 0}, 1}};
  const auto r = multiplicity(m);
  EXPECT_EQ(r.m, 3);
  EXPECT_EQ(r.witness, (LatticePoint{1, 5}));
  EXPECT_THROW(multiplicity({}), HypothesisError);
}

TEST(Subcritical, ReportOnRandomInstance) {
  std::mt19937_64 rng(21);
  const Curve c = Curve::moment(2);
  const SparseSet E = random_set(rng, 24, 300, 35), F = random_set(rng, 24, 300, 35);
  for (int k : {1, 2}) {
    const auto rep = verify_subcritical_instance(E, F, c, 16, k);
    EXPECT_EQ(rep.matches_theorem_case, k == 2);
    EXPECT_FALSE(rep.trivial_regime);
    EXPECT_TRUE(rep.ok()) << rep.to_text();
    ASSERT_NE(rep.chosen(), nullptr);
    EXPECT_NE(rep.to_json().find("\"ok\":true"), std::string::npos);
  }
}

TEST(Subcritical, TrivialRegimes) {
  const Curve c = Curve::moment(2);
  const SparseSet E(2, {{0, 0}}), far(2, {{100, 100}});
  const auto zero = verify_subcritical_instance(E, far, c, 4, 1);
  EXPECT_TRUE(zero.trivial_regime);
  EXPECT_EQ(zero.trivial_reason, "alpha = 0");
  EXPECT_TRUE(zero.ok());
  // alpha = 1 <= 2r
  const SparseSet F(2, {{1, 1}});
  const auto small = verify_subcritical_instance(E, F, c, 4, 1);
  EXPECT_TRUE(small.trivial_regime);
  EXPECT_FALSE(verify_subcritical_instance(E, F, c, 4, 3).matches_theorem_case);
}
