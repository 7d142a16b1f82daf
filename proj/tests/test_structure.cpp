#include <gtest/gtest.h>

#include "gabor/error.hpp"
#include "gabor/structure.hpp"
#include "support.hpp"

using namespace gabor;
using namespace testsupport;

TEST(ModulationMatrix, EntriesAreExponentialSums) {
  const std::size_t n = 10;
  const ResidueSet l{0, 3, 7};
  const auto m = modulation_matrix(n, l);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex want = 0.0;
      for (auto ell : l) want += expi(static_cast<double>(ell) * (static_cast<double>(i) - static_cast<double>(j)) / n);
      EXPECT_LE(std::abs(m(i, j) - want), 1e-13);
    }
  EXPECT_TRUE(is_circulant(m));
  EXPECT_TRUE(is_hermitian(m));
}

TEST(ModulationMatrix, FullGroupIsScaledIdentity) {
  EXPECT_LE(max_entry_diff(modulation_matrix(7, full_group(7)), ComplexMatrix::identity(7).scaled(7.0)), 1e-13);
}

TEST(ModulationMatrix, SubgroupSupportIsMultiplesOfOrder) {
  for (std::size_t n : {6u, 12u, 24u})
    for (auto r : divisors_of(n)) {
      const auto m = modulation_matrix(n, subgroup_of_order(n, r));
      const auto support = diagonal_support(m);
      ResidueSet want;
      for (std::size_t d = 0; d < n; d += r) want.push_back(d);
      EXPECT_EQ(support.residues, want) << n << " " << r;
      for (std::size_t d = 0; d < n; ++d) EXPECT_NEAR(m(d, 0).real(), subgroup_exponential_sum(n, r, static_cast<long long>(d)), 1e-12);
    }
}

TEST(TranslationMatrix, MatchesDefinition) {
  Rng rng(kSeed);
  const std::size_t n = 9;
  const auto g = random_vector(n, rng);
  const ResidueSet k{1, 4, 8};
  const auto t = translation_matrix(n, g, k);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex want = 0.0;
      for (auto s : k) want += g[(i + n - s) % n] * std::conj(g[(j + n - s) % n]);
      EXPECT_LE(std::abs(t(i, j) - want), 1e-13);
    }
  EXPECT_THROW(translation_matrix(8, g, k), GaborError);
}

TEST(TranslationMatrix, SubgroupGivesBlockCirculant) {
  Rng rng(kSeed + 1);
  const auto g = random_vector(12, rng);
  const auto t = translation_matrix(12, g, subgroup_of_order(12, 4));
  EXPECT_TRUE(is_block_circulant(t, 3));
  EXPECT_FALSE(is_block_circulant(t, 2));
  EXPECT_THROW(is_block_circulant(t, 5), GaborError);
}

// Property: S = M_L ⊙ T_K agrees with Σ f f* on random systems.
TEST(FrameOperatorFactored, MatchesOuterProductSum) {
  Rng rng(kSeed + 2);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 4 + t % 20;
    const auto g = random_unit_vector(n, rng);
    const auto l = random_subset(n, rng);
    const auto k = random_subset(n, rng);
    EXPECT_LE(max_entry_diff(frame_operator_factored(GaborSystem(g, l, k)), oracle_frame_operator(g, l, k)), 1e-12);
  }
}

TEST(DetectSubgroup, RecognizesExactlyCyclicSubgroups) {
  EXPECT_EQ(detect_subgroup(ResidueSet{0, 4, 8}, 12).order, 3u);
  EXPECT_EQ(detect_subgroup(ResidueSet{8, 4, 0}, 12).generator, 4u);
  EXPECT_TRUE(detect_subgroup(ResidueSet{0}, 12).is_subgroup);
  EXPECT_FALSE(detect_subgroup(ResidueSet{0, 4}, 12).is_subgroup);
  EXPECT_FALSE(detect_subgroup(ResidueSet{1, 5, 9}, 12).is_subgroup);
  EXPECT_FALSE(detect_subgroup(ResidueSet{}, 12).is_subgroup);
  // Exhaustive over small N: closure under addition decides membership.
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t mask = 1; mask < (1u << n); ++mask) {
      ResidueSet a;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) a.push_back(i);
      bool closed = true;
      for (auto x : a)
        for (auto y : a) closed = closed && std::binary_search(a.begin(), a.end(), (x + y) % n);
      EXPECT_EQ(detect_subgroup(a, n).is_subgroup, closed) << n << " " << mask;
    }
}

TEST(DiagonalSupport, WrappedResidues) {
  // Nonzero at (0,2) and (3,1): residues 2 and (1-3) mod 4 = 2; plus main diagonal entry (1,1).
  std::vector<Complex> e(16);
  e[0 * 4 + 2] = 1.0;
  e[3 * 4 + 1] = 1.0;
  e[1 * 4 + 1] = 1e-11;
  const ComplexMatrix a(4, 4, e);
  const auto s = diagonal_support(a);
  EXPECT_EQ(s.residues, (ResidueSet{2}));
  EXPECT_TRUE(s.contains(2));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(diagonal_support(a, ToleranceConfig{1e-12, 1e-9}).residues, (ResidueSet{0, 2}));
}

TEST(SubgroupExponentialSum, RejectsNonDivisor) {
  EXPECT_THROW(subgroup_exponential_sum(12, 5, 1), GaborError);
  EXPECT_EQ(subgroup_exponential_sum(12, 4, -8), 4.0);
  EXPECT_EQ(subgroup_exponential_sum(12, 4, 6), 0.0);
}
