#include <gtest/gtest.h>

#include "gabor/cyclotomic.hpp"
#include "gabor/error.hpp"
#include "support.hpp"

using namespace gabor;
using namespace testsupport;

namespace {

IntPolynomial poly(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  for (auto x : c) v.emplace_back(x);
  return IntPolynomial(v);
}

Complex evaluate(const ResidueSet& set, Complex z) {
  Complex acc = 0.0;
  for (auto a : set) acc += std::pow(z, static_cast<int>(a));
  return acc;
}

std::size_t gcd(std::size_t a, std::size_t b) { return b == 0 ? a : gcd(b, a % b); }

// Tries every subset of size n/|A|.
bool brute_force_tiles(const ResidueSet& a, std::size_t n) {
  if (n % a.size() != 0) return false;
  const std::size_t want = n / a.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != want) continue;
    std::vector<bool> hit(n, false);
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b)
      if (mask >> b & 1u)
        for (auto x : a) {
          const auto s = (x + b) % n;
          if (hit[s]) {
            ok = false;
            break;
          }
          hit[s] = true;
        }
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(IntPolynomial, TrimsAndCompares) {
  EXPECT_EQ(poly({1, 2, 0, 0}), poly({1, 2}));
  EXPECT_EQ(poly({0, 0}).degree(), -1);
  EXPECT_TRUE(IntPolynomial().is_zero());
  EXPECT_EQ(IntPolynomial::x_pow_minus_one(3), poly({-1, 0, 0, 1}));
  EXPECT_EQ(IntPolynomial::monomial(2, 5), poly({0, 0, 5}));
  EXPECT_EQ(poly({1, 1}) * poly({-1, 1}), poly({-1, 0, 1}));
  EXPECT_EQ(poly({1, 2}) - poly({1, 2}), IntPolynomial());
  EXPECT_EQ(poly({3, 0, -1}).to_string(), "-x^2 + 3");
  EXPECT_EQ(poly({0, 2}).coefficient(7), BigInt(0));
}

TEST(Divide, ExactAndInexact) {
  const auto r = divide(poly({-1, 0, 0, 0, 1}), poly({1, 1}));
  EXPECT_TRUE(r.integral);
  EXPECT_TRUE(r.remainder.is_zero());
  EXPECT_EQ(r.quotient, poly({-1, 1, -1, 1}));
  const auto s = divide(poly({1, 0, 1}), poly({1, 1}));
  EXPECT_FALSE(s.remainder.is_zero());
  EXPECT_FALSE(divide(poly({1, 0, 1}), poly({0, 2})).integral);
  EXPECT_THROW(divide(poly({1}), IntPolynomial()), GaborError);
}

TEST(Cyclotomic, KnownPolynomials) {
  EXPECT_EQ(cyclotomic(1), poly({-1, 1}));
  EXPECT_EQ(cyclotomic(2), poly({1, 1}));
  EXPECT_EQ(cyclotomic(6), poly({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), poly({1, 0, -1, 0, 1}));
  // Φ_105 is the first with a coefficient outside {-1, 0, 1}.
  const auto c105 = cyclotomic(105);
  EXPECT_EQ(c105.degree(), 48);
  EXPECT_EQ(c105.coefficient(7), BigInt(-2));
  EXPECT_THROW(cyclotomic(0), GaborError);
}

TEST(Cyclotomic, DegreeIsTotientAndProductIsZnMinusOne) {
  for (std::size_t n = 1; n <= 60; ++n) {
    EXPECT_EQ(static_cast<std::size_t>(cyclotomic(n).degree()), euler_totient(n)) << n;
    IntPolynomial prod = IntPolynomial::monomial(0);
    for (auto d : divisors(n)) prod = prod * cyclotomic(d);
    EXPECT_EQ(prod, IntPolynomial::x_pow_minus_one(n)) << n;
  }
}

TEST(Cyclotomic, RootsArePrimitive) {
  for (std::size_t n : {5u, 8u, 9u, 15u}) {
    const auto phi = cyclotomic(n);
    const auto& c = phi.coefficients();
    for (std::size_t k = 1; k <= n; ++k) {
      Complex acc = 0.0;
      for (std::size_t i = 0; i < c.size(); ++i) acc += c[i].convert_to<double>() * expi(static_cast<double>(i * k) / n);
      if (gcd(k, n) == 1) EXPECT_LE(std::abs(acc), 1e-9) << n << " " << k;
      else EXPECT_GT(std::abs(acc), 1e-6) << n << " " << k;
    }
  }
}

TEST(Arithmetic, DivisorsAndTotient) {
  EXPECT_EQ(divisors(36), (std::vector<std::size_t>{1, 2, 3, 4, 6, 9, 12, 18, 36}));
  EXPECT_EQ(divisors(1), (std::vector<std::size_t>{1}));
  EXPECT_EQ(euler_totient(36), 12u);
  EXPECT_EQ(euler_totient(1), 1u);
  EXPECT_EQ(euler_totient(97), 96u);
}

TEST(DivisorSet, WorkedExample) {
  const ResidueSet l{0, 1, 2, 3};
  EXPECT_EQ(characteristic_poly(l).to_string(), "x^3 + x^2 + x + 1");
  EXPECT_EQ(divisor_set(36, l), (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(predicted_zero_diagonals(36, l), (ResidueSet{9, 18, 27}));
}

// Property: Φ_d | P_L exactly iff P_L vanishes at a primitive d-th root.
TEST(DivisorSet, AgreesWithRootEvaluation) {
  Rng rng(kSeed);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 2 + t % 30;
    const auto l = random_subset(n, rng, 0.4);
    const auto set = divisor_set(n, l);
    for (auto d : divisors(n)) {
      if (d == 1) continue;
      const bool vanishes = std::abs(evaluate(l, expi(1.0 / d))) <= 1e-9;
      EXPECT_EQ(std::binary_search(set.begin(), set.end(), d), vanishes) << n << " " << d;
    }
  }
}

TEST(PredictedZeros, SubgroupModulationsPredictAllZeros) {
  // L of order r vanishes off the multiples of r, and the prediction finds all of them.
  for (std::size_t n : {8u, 12u, 18u})
    for (auto r : divisors_of(n)) {
      const auto l = subgroup_of_order(n, r);
      ResidueSet want;
      for (std::size_t d = 0; d < n; ++d)
        if (d % r != 0) want.push_back(d);
      EXPECT_EQ(predicted_zero_diagonals(n, l), want) << n << " " << r;
    }
}

TEST(Tiling, FindsComplementsAndRejectsNonTiles) {
  const auto c = find_tiling_complement(ResidueSet{0, 1, 2}, 12);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (ResidueSet{0, 3, 6, 9}));
  EXPECT_FALSE(find_tiling_complement(ResidueSet{0, 1, 3}, 6).has_value());
  EXPECT_FALSE(find_tiling_complement(ResidueSet{0, 1, 2}, 10).has_value());
  EXPECT_THROW(find_tiling_complement(ResidueSet{0}, 65), GaborError);
}

// Property: the search agrees with exhaustive enumeration and every
// returned complement really tiles.
TEST(Tiling, AgreesWithBruteForce) {
  Rng rng(kSeed + 1);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = 2 + t % 13;
    auto a = random_subset(n, rng, 0.35);
    if (a.front() != 0) a.insert(a.begin(), 0);
    const auto c = find_tiling_complement(a, n);
    EXPECT_EQ(c.has_value(), brute_force_tiles(a, n)) << n;
    if (!c) continue;
    std::vector<int> count(n, 0);
    for (auto x : a)
      for (auto b : *c) ++count[(x + b) % n];
    for (auto v : count) EXPECT_EQ(v, 1);
  }
}

TEST(Interlace, WorkedExampleWitnesses) {
  const ResidueSet l{0, 1, 2, 3};
  const auto w = interlace_witnesses(36, 9, l);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(w[0], std::optional<std::size_t>(4));
  EXPECT_EQ(w[1], std::optional<std::size_t>(2));
  EXPECT_EQ(w[2], std::optional<std::size_t>(4));
  EXPECT_TRUE(interlace_diagonality_check(36, 9, l));
  EXPECT_FALSE(interlace_diagonality_check(36, 9, ResidueSet{0, 1, 2}));
}

// Property: a witness d for j means jp is a predicted zero diagonal.
TEST(Interlace, WitnessesImplyPredictedZeros) {
  Rng rng(kSeed + 2);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 12 + 6 * (t % 5);
    const auto l = random_subset(n, rng, 0.3);
    for (auto p : divisors(n)) {
      if (p == 1 || p == n) continue;
      const auto w = interlace_witnesses(n, p, l);
      const auto zeros = predicted_zero_diagonals(n, l);
      for (std::size_t j = 1; j < n / p; ++j)
        if (w[j - 1]) EXPECT_TRUE(std::binary_search(zeros.begin(), zeros.end(), j * p)) << n << " " << p << " " << j;
    }
  }
}
