#include <gtest/gtest.h>

#include "gabor/error.hpp"
#include "gabor/gabor_system.hpp"
#include "support.hpp"

using namespace gabor;
using namespace testsupport;

TEST(Residues, CanonicalizeSortsDeduplicatesAndWraps) {
  const std::vector<std::int64_t> raw{5, -1, 17, 0, 5, -12};
  EXPECT_EQ(canonical_residues(raw, 12), (ResidueSet{0, 5, 11}));
  EXPECT_THROW(canonical_residues(raw, 0), GaborError);
}

TEST(Residues, SubgroupsAndFullGroup) {
  EXPECT_EQ(cyclic_subgroup(12, 4), (ResidueSet{0, 3, 6, 9}));
  EXPECT_EQ(cyclic_subgroup(12, 1), (ResidueSet{0}));
  EXPECT_EQ(full_group(5), (ResidueSet{0, 1, 2, 3, 4}));
  EXPECT_THROW(cyclic_subgroup(12, 5), GaborError);
}

TEST(GaborSystem, ValidatesInputs) {
  const ComplexVector g{1.0, 0.0, 0.0, 0.0};
  const ResidueSet all{0, 1, 2, 3};
  EXPECT_THROW(GaborSystem(ComplexVector{}, all, all), GaborError);
  EXPECT_THROW(GaborSystem(ComplexVector(4), all, all), GaborError);
  EXPECT_THROW(GaborSystem(g, ResidueSet{}, all), GaborError);
  EXPECT_THROW(GaborSystem(g, all, ResidueSet{}), GaborError);
  const GaborSystem sys(g, ResidueSet{6, 1, 2}, ResidueSet{3, 7});
  EXPECT_EQ(sys.modulations(), (ResidueSet{1, 2}));
  EXPECT_EQ(sys.translations(), (ResidueSet{3}));
  EXPECT_EQ(sys.size(), 2u);
}

TEST(TimeFrequencyShift, MatchesDefinition) {
  Rng rng(kSeed);
  const auto g = random_vector(9, rng);
  for (std::size_t l = 0; l < 9; ++l)
    for (std::size_t k = 0; k < 9; ++k) EXPECT_LE(max_entry_diff(time_frequency_shift(g, l, k), oracle_tf_shift(g, l, k)), 1e-14);
  EXPECT_THROW(time_frequency_shift(g, 9, 0), GaborError);
}

TEST(TimeFrequencyShift, CommutationRelation) {
  // T_k M_l = ζ^(-lk) M_l T_k
  Rng rng(kSeed + 1);
  const std::size_t n = 10;
  const auto g = random_vector(n, rng);
  const std::size_t l = 3, k = 4;
  auto tm = time_frequency_shift(g, l, 0);
  std::rotate(tm.rbegin(), tm.rbegin() + k, tm.rend());
  const auto mt = time_frequency_shift(g, l, k);
  const Complex phase = expi(-static_cast<double>(l * k) / n);
  for (std::size_t j = 0; j < n; ++j) EXPECT_LE(std::abs(tm[j] - phase * mt[j]), 1e-13);
}

TEST(Synthesize, EnumerationOrderTranslationsOuter) {
  Rng rng(kSeed + 2);
  const auto g = random_vector(6, rng);
  const GaborSystem sys(g, ResidueSet{0, 2, 5}, ResidueSet{1, 4});
  const auto frame = synthesize(sys);
  ASSERT_EQ(frame.size(), 6u);
  std::size_t i = 0;
  for (std::size_t k : {1u, 4u})
    for (std::size_t l : {0u, 2u, 5u}) EXPECT_LE(max_entry_diff(frame[i++], oracle_tf_shift(g, l, k)), 1e-14);
}

TEST(FrameOperator, BruteForceMatchesOracle) {
  Rng rng(kSeed + 3);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 3 + t;
    const auto g = random_vector(n, rng);
    const auto l = random_subset(n, rng);
    const auto k = random_subset(n, rng);
    const auto s = frame_operator_bruteforce(GaborSystem(g, l, k));
    EXPECT_LE(max_entry_diff(s, oracle_frame_operator(g, l, k)), 1e-12);
    EXPECT_TRUE(is_hermitian(s));
  }
}

TEST(FrameBounds, TightFrameForFullLattice) {
  // The full lattice is tight with bound N‖g‖².
  Rng rng(kSeed + 4);
  const auto g = random_unit_vector(8, rng);
  const auto v = frame_bounds(frame_operator_bruteforce(GaborSystem(g, full_group(8), full_group(8))));
  EXPECT_TRUE(v.is_frame);
  EXPECT_NEAR(v.lower_bound, 8.0, 1e-12);
  EXPECT_NEAR(v.upper_bound, 8.0, 1e-12);
  EXPECT_NEAR(v.condition_number(), 1.0, 1e-12);
}

TEST(FrameBounds, TooFewVectorsIsNotAFrame) {
  Rng rng(kSeed + 5);
  const auto g = random_vector(8, rng);
  const auto v = frame_bounds(frame_operator_bruteforce(GaborSystem(g, ResidueSet{0, 1}, ResidueSet{0, 3, 5})));
  EXPECT_FALSE(v.is_frame);
  EXPECT_EQ(v.lower_bound, 0.0);
  EXPECT_TRUE(std::isinf(v.condition_number()));
}

TEST(FourierDual, SwapsSetsAndTransformsWindow) {
  Rng rng(kSeed + 6);
  const auto g = random_vector(12, rng);
  const GaborSystem sys(g, ResidueSet{0, 4, 8}, ResidueSet{1, 2});
  const auto dual = fourier_dual(sys);
  EXPECT_EQ(dual.modulations(), sys.translations());
  EXPECT_EQ(dual.translations(), sys.modulations());
  EXPECT_LE(max_entry_diff(dual.window(), oracle_dft(g)), 1e-12);
  // Unitary equivalence: the two frame operators share a spectrum.
  const auto a = oracle_eigenvalues(frame_operator_bruteforce(sys));
  const auto b = oracle_eigenvalues(frame_operator_bruteforce(dual));
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-10);
}

TEST(SupportPrecheck, WindowSupportBound) {
  ComplexVector g(12);
  g[0] = 1.0;
  g[1] = 2.0;
  const auto r = support_frame_precheck(GaborSystem(g, full_group(12), cyclic_subgroup(12, 4)));
  EXPECT_EQ(r.verdict, PrecheckVerdict::CannotBeFrame);
  EXPECT_EQ(r.window_support, 2u);
  EXPECT_FALSE(r.reason.empty());
  // 3·4 = 12 is not below N: inconclusive.
  g[5] = 1.0;
  EXPECT_EQ(support_frame_precheck(GaborSystem(g, full_group(12), cyclic_subgroup(12, 4))).verdict,
            PrecheckVerdict::Inconclusive);
}

TEST(SupportPrecheck, SpectrumSupportBound) {
  // A pure frequency has one nonzero DFT coefficient.
  ComplexVector g(8);
  for (std::size_t j = 0; j < 8; ++j) g[j] = expi(3.0 * j / 8.0);
  const auto r = support_frame_precheck(GaborSystem(g, cyclic_subgroup(8, 4), full_group(8)));
  EXPECT_EQ(r.spectrum_support, 1u);
  EXPECT_EQ(r.verdict, PrecheckVerdict::CannotBeFrame);
}

// Property: whenever the precheck says "cannot", the eigenvalue verdict agrees.
TEST(SupportPrecheck, NeverContradictsEigenvalues) {
  Rng rng(kSeed + 7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 4 + t % 9;
    auto g = random_vector(n, rng);
    for (std::size_t j = 0; j < n; ++j)
      if (std::bernoulli_distribution(0.6)(rng)) g[j] = 0.0;
    if (support_size(g, 0.0) == 0) g[0] = 1.0;
    const GaborSystem sys(g, random_subset(n, rng), random_subset(n, rng, 0.3));
    if (support_frame_precheck(sys).verdict == PrecheckVerdict::CannotBeFrame) {
      EXPECT_LE(oracle_eigenvalues(oracle_frame_operator(g, sys.modulations(), sys.translations())).front(), 1e-10);
    }
  }
}
