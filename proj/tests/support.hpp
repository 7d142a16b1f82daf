#pragma once

// Seeded generators and brute-force oracles shared by the test binaries.
// Oracles are written straight from the defining sums and do not call into
// the library's numerics.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gabor/numerics.hpp"

namespace testsupport {

using gabor::Complex;
using gabor::ComplexMatrix;
using gabor::ComplexVector;
using Rng = std::mt19937_64;

inline constexpr std::uint64_t kSeed = 20240917;

inline ComplexVector random_vector(std::size_t n, Rng& rng) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexVector v(n);
  for (auto& z : v) z = {dist(rng), dist(rng)};
  return v;
}

/// Gaussian window rescaled to unit norm.
inline ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  auto v = random_vector(n, rng);
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  s = std::sqrt(s);
  for (auto& z : v) z /= s;
  return v;
}

/// Nonempty subset of Z_n, each element kept with probability `density`.
inline std::vector<std::size_t> random_subset(std::size_t n, Rng& rng, double density = 0.5) {
  std::bernoulli_distribution keep(density);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (keep(rng)) out.push_back(i);
  if (out.empty()) out.push_back(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  return out;
}

inline std::vector<std::size_t> divisors_of(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

/// {0, N/d, 2N/d, ...}: the subgroup of Z_n of order d.
inline std::vector<std::size_t> subgroup_of_order(std::size_t n, std::size_t d) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(i * (n / d));
  return out;
}

inline Complex expi(double turns) { return std::polar(1.0, 2.0 * std::numbers::pi * turns); }

/// M_l T_k g evaluated entrywise: e^(2πi l j / N) g[(j - k) mod N].
inline ComplexVector oracle_tf_shift(const ComplexVector& g, std::size_t l, std::size_t k) {
  const std::size_t n = g.size();
  ComplexVector out(n);
  for (std::size_t j = 0; j < n; ++j)
    out[j] = expi(static_cast<double>((l * j) % n) / static_cast<double>(n)) * g[(j + n - k % n) % n];
  return out;
}

/// Σ_(k, l) f f* over the whole system, k outer and l inner.
inline ComplexMatrix oracle_frame_operator(const ComplexVector& g, const std::vector<std::size_t>& mods,
                                           const std::vector<std::size_t>& trans) {
  const std::size_t n = g.size();
  std::vector<Complex> s(n * n);
  for (auto k : trans)
    for (auto l : mods) {
      const auto f = oracle_tf_shift(g, l, k);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s[i * n + j] += f[i] * std::conj(f[j]);
    }
  return ComplexMatrix(n, n, std::move(s));
}

/// Unitary DFT by the defining sum.
inline ComplexVector oracle_dft(const ComplexVector& x) {
  const std::size_t n = x.size();
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += x[j] * expi(-static_cast<double>((j * k) % n) / static_cast<double>(n));
    out[k] = acc / std::sqrt(static_cast<double>(n));
  }
  return out;
}

inline ComplexMatrix oracle_dft_matrix(std::size_t n) {
  return ComplexMatrix::generate(n, n, [n](std::size_t i, std::size_t j) {
    return expi(-static_cast<double>((i * j) % n) / static_cast<double>(n)) / std::sqrt(static_cast<double>(n));
  });
}

/// Gaussian elimination with partial pivoting.
inline ComplexVector oracle_solve(const ComplexMatrix& a, ComplexVector b) {
  const std::size_t n = a.rows();
  std::vector<Complex> m(a.entries().begin(), a.entries().end());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r * n + c]) > std::abs(m[piv * n + c])) piv = r;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[c * n + j], m[piv * n + j]);
      std::swap(b[c], b[piv]);
    }
    for (std::size_t r = c + 1; r < n; ++r) {
      const Complex f = m[r * n + c] / m[c * n + c];
      for (std::size_t j = c; j < n; ++j) m[r * n + j] -= f * m[c * n + j];
      b[r] -= f * b[c];
    }
  }
  ComplexVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Complex acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= m[i * n + j] * x[j];
    x[i] = acc / m[i * n + i];
  }
  return x;
}

/// Eigenvalues through the general (non-Hermitian) complex solver, real
/// parts sorted ascending.
inline std::vector<double> oracle_eigenvalues(const ComplexMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.rows());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < n; ++i) out.push_back(solver.eigenvalues()(i).real());
  std::sort(out.begin(), out.end());
  return out;
}

inline double max_entry_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

inline double max_entry_diff(const ComplexVector& a, const ComplexVector& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double l2(const ComplexVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

inline double l2_diff(const ComplexVector& a, const ComplexVector& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

inline double max_off_diag(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

/// Dense permutation matrix with (Px)[t] = x[perm[t]].
inline ComplexMatrix permutation_matrix(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  return ComplexMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return Complex(perm[i] == j ? 1.0 : 0.0); });
}

/// Naive matrix product, used where the library's own product is under test.
inline ComplexMatrix oracle_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return ComplexMatrix::generate(a.rows(), b.cols(), [&](std::size_t i, std::size_t j) {
    Complex acc = 0.0;
    for (std::size_t t = 0; t < a.cols(); ++t) acc += a(i, t) * b(t, j);
    return acc;
  });
}

inline ComplexMatrix oracle_adjoint(const ComplexMatrix& a) {
  return ComplexMatrix::generate(a.cols(), a.rows(), [&](std::size_t i, std::size_t j) { return std::conj(a(j, i)); });
}

}  // namespace testsupport
