#include "gabor/cyclotomic.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>

#include "gabor/error.hpp"

namespace gabor {

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::size_t degree, BigInt coefficient) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::size_t n) {
  std::vector<BigInt> c(n + 1);
  c[0] = -1;
  c[n] += 1;
  return IntPolynomial(std::move(c));
}

BigInt IntPolynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

IntPolynomial IntPolynomial::operator+(const IntPolynomial& rhs) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) + rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& rhs) const {
  std::vector<BigInt> c(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coefficient(i) - rhs.coefficient(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> c(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPolynomial(std::move(c));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) out << mag;
    if (i > 0) out << "x";
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

DivisionResult divide(const IntPolynomial& dividend, const IntPolynomial& divisor) {
  if (divisor.is_zero()) throw GaborError(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const auto& d = divisor.coefficients();
  const std::size_t dd = d.size() - 1;
  const BigInt& lead = d.back();
  std::vector<BigInt> rem = dividend.coefficients();
  std::vector<BigInt> quo(rem.size() >= d.size() ? rem.size() - dd : 0);
  DivisionResult r;
  while (!rem.empty() && rem.size() >= d.size()) {
    const BigInt& top = rem.back();
    if (top % lead != 0) {
      r.integral = false;
      break;
    }
    const BigInt q = top / lead;
    const std::size_t shift = rem.size() - d.size();
    quo[shift] = q;
    for (std::size_t i = 0; i <= dd; ++i) rem[shift + i] -= q * d[i];
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
  }
  r.quotient = IntPolynomial(std::move(quo));
  r.remainder = IntPolynomial(std::move(rem));
  return r;
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t euler_totient(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPolynomial cyclotomic(std::size_t n) {
  if (n == 0) throw GaborError(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  // Build Φ_d for every d | n in increasing order; each d's proper divisors
  // are themselves divisors of n, so they are already in the table.
  std::map<std::size_t, IntPolynomial> table;
  for (auto d : divisors(n)) {
    IntPolynomial denom = IntPolynomial::monomial(0);
    for (const auto& [e, phi] : table)
      if (d % e == 0) denom = denom * phi;
    auto res = divide(IntPolynomial::x_pow_minus_one(d), denom);
    if (!res.integral || !res.remainder.is_zero())
      throw GaborError(ErrorCode::ContractViolation, "cyclotomic division left a remainder");
    table.emplace(d, std::move(res.quotient));
  }
  return table.at(n);
}

IntPolynomial characteristic_poly(std::span<const std::size_t> set) {
  if (set.empty()) return {};
  const std::size_t top = *std::max_element(set.begin(), set.end());
  std::vector<BigInt> c(top + 1);
  for (auto a : set) c[a] = 1;
  return IntPolynomial(std::move(c));
}

bool divides_exactly(const IntPolynomial& divisor, const IntPolynomial& p) {
  const auto r = divide(p, divisor);
  return r.integral && r.remainder.is_zero();
}

std::vector<std::size_t> divisor_set(std::size_t n, std::span<const std::size_t> modulations) {
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "N must be positive");
  const auto pl = characteristic_poly(canonical_residues(modulations, n));
  std::vector<std::size_t> out;
  for (auto d : divisors(n))
    if (d > 1 && divides_exactly(cyclotomic(d), pl)) out.push_back(d);
  return out;
}

ResidueSet predicted_zero_diagonals(std::size_t n, std::span<const std::size_t> modulations) {
  ResidueSet out;
  for (auto d : divisor_set(n, modulations)) {
    const std::size_t step = n / d;
    for (std::size_t s = 1; s < d; ++s) {
      if (std::gcd(s, d) != 1) continue;
      const std::size_t idx = (s * step) % n;
      out.push_back(idx);
      out.push_back((n - idx) % n);
    }
  }
  return canonical_residues(out, n);
}

namespace {

bool tile_dfs(const ResidueSet& a, std::size_t n, std::uint64_t covered, std::uint64_t full, ResidueSet& chosen) {
  if (covered == full) return true;
  std::size_t u = 0;
  while (covered >> u & 1U) ++u;
  // The smallest uncovered residue u must be a + b for some a in A.
  for (auto elem : a) {
    const std::size_t b = (u + n - elem) % n;
    std::uint64_t mask = 0;
    bool clash = false;
    for (auto x : a) {
      const std::uint64_t bit = std::uint64_t{1} << ((x + b) % n);
      if ((covered | mask) & bit) {
        clash = true;
        break;
      }
      mask |= bit;
    }
    if (clash) continue;
    chosen.push_back(b);
    if (tile_dfs(a, n, covered | mask, full, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<ResidueSet> find_tiling_complement(std::span<const std::size_t> set, std::size_t n) {
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "N must be positive");
  if (n > kMaxTilingSize) throw GaborError(ErrorCode::SizeLimit, "tiling search is limited to N <= 64");
  const auto a = canonical_residues(set, n);
  if (a.empty() || n % a.size() != 0) return std::nullopt;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  ResidueSet chosen;
  if (!tile_dfs(a, n, 0, full, chosen)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<std::optional<std::size_t>> interlace_witnesses(std::size_t n, std::size_t p,
                                                            std::span<const std::size_t> modulations) {
  if (p <= 1 || n % p != 0) throw GaborError(ErrorCode::InvalidArgument, "p must be a divisor of N greater than 1");
  const auto dset = divisor_set(n, modulations);
  const std::size_t m = n / p;
  std::vector<std::optional<std::size_t>> out;
  for (std::size_t j = 1; j < m; ++j) {
    std::optional<std::size_t> witness;
    for (auto d : dset) {
      const std::size_t num = j * p * d;
      if (num % n != 0) continue;
      if (std::gcd(num / n, d) == 1) {
        witness = d;
        break;
      }
    }
    out.push_back(witness);
  }
  return out;
}

bool interlace_diagonality_check(std::size_t n, std::size_t p, std::span<const std::size_t> modulations) {
  const auto w = interlace_witnesses(n, p, modulations);
  return std::all_of(w.begin(), w.end(), [](const auto& x) { return x.has_value(); });
}

}  // namespace gabor
