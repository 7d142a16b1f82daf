#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gabor/gabor_system.hpp"

namespace gabor {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial over Z, coefficients in ascending degree with trailing
/// zeros stripped. The zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial monomial(std::size_t degree, BigInt coefficient = 1);
  /// z^n - 1
  static IntPolynomial x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  BigInt coefficient(std::size_t i) const;

  IntPolynomial operator+(const IntPolynomial& rhs) const;
  IntPolynomial operator-(const IntPolynomial& rhs) const;
  IntPolynomial operator*(const IntPolynomial& rhs) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct DivisionResult {
  IntPolynomial quotient;
  IntPolynomial remainder;
  /// False when long division in Z[x] stopped because a leading coefficient
  /// did not divide; the remainder is then the partial one.
  bool integral = true;
};

/// Long division in Z[x]. Throws InvalidArgument for a zero divisor.
DivisionResult divide(const IntPolynomial& dividend, const IntPolynomial& divisor);

/// Φ_n, obtained as (z^n - 1) / Π_(d|n, d<n) Φ_d by exact division.
IntPolynomial cyclotomic(std::size_t n);

/// P_A(z) = Σ_(a∈A) z^a
IntPolynomial characteristic_poly(std::span<const std::size_t> set);

/// True iff `divisor` divides `p` exactly in Z[x].
bool divides_exactly(const IntPolynomial& divisor, const IntPolynomial& p);

std::size_t euler_totient(std::size_t n);
std::vector<std::size_t> divisors(std::size_t n);

/// {d > 1 : d | N and Φ_d | P_L}
std::vector<std::size_t> divisor_set(std::size_t n, std::span<const std::size_t> modulations);

/// Wrapped diagonals forced to vanish: ±sN/d mod N over d in the divisor
/// set and 1 <= s < d with gcd(s, d) = 1.
ResidueSet predicted_zero_diagonals(std::size_t n, std::span<const std::size_t> modulations);

/// Largest N accepted by the tiling search.
inline constexpr std::size_t kMaxTilingSize = 64;

/// Depth-first search for B with Z_N = A ⊕ B. Returns nullopt when |A| does
/// not divide N or no complement exists. Throws SizeLimit for N > 64.
std::optional<ResidueSet> find_tiling_complement(std::span<const std::size_t> set, std::size_t n);

/// For each j = 1..N/p - 1, the smallest d in the divisor set with jpd/N an
/// integer coprime to d (nullopt when none exists).
std::vector<std::optional<std::size_t>> interlace_witnesses(std::size_t n, std::size_t p,
                                                            std::span<const std::size_t> modulations);

/// True iff every j = 1..N/p - 1 has a witness. Candidates d for which
/// jpd/N is not an integer are skipped.
bool interlace_diagonality_check(std::size_t n, std::size_t p, std::span<const std::size_t> modulations);

}  // namespace gabor
