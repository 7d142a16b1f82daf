#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gabor {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Absolute and relative thresholds shared by every numerical predicate.
/// `rel_tol` is scaled by the largest entry magnitude of the operand.
struct ToleranceConfig {
  double zero_tol = 1e-10;
  double rel_tol = 1e-9;
};

/// Dense row-major complex matrix. Values are immutable once built; every
/// operation returns a new matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> values);
  /// Builds a matrix by evaluating `f(i, j)` for every entry.
  template <typename F>
  static ComplexMatrix generate(std::size_t rows, std::size_t cols, F&& f) {
    std::vector<Complex> e(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) e[i * cols + j] = f(i, j);
    return ComplexMatrix(rows, cols, std::move(e));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const Complex> entries() const noexcept { return entries_; }
  ComplexVector column(std::size_t j) const;
  ComplexVector diagonal_entries() const;

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix scaled(Complex factor) const;
  ComplexVector apply(std::span<const Complex> x) const;

  double max_abs() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// ζ_N^m = exp(2πi·m/N), with m reduced mod N before forming the angle.
Complex root_of_unity(std::size_t n, long long m);

/// Normalized DFT, x̂_k = N^(-1/2) Σ_j x_j ζ_N^(-kj). Direct O(N²) summation.
ComplexVector dft(std::span<const Complex> v);
ComplexVector inverse_dft(std::span<const Complex> v);
ComplexMatrix dft_matrix(std::size_t n);

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b);

/// All eigenvalues in nondecreasing order. Throws ContractViolation for
/// non-Hermitian input.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const ToleranceConfig& cfg = {});

/// Returns U* A U. Throws ContractViolation when U is not unitary.
ComplexMatrix conjugate_by_unitary(const ComplexMatrix& u, const ComplexMatrix& a,
                                   const ToleranceConfig& cfg = {});

/// Solves A x = b for Hermitian positive definite A (Cholesky).
ComplexVector solve_hermitian(const ComplexMatrix& a, std::span<const Complex> b,
                              const ToleranceConfig& cfg = {});
/// Column-wise solve for several right-hand sides with a single factorization.
ComplexMatrix solve_hermitian(const ComplexMatrix& a, const ComplexMatrix& b,
                              const ToleranceConfig& cfg = {});

/// Dense inverse of a square block. Hermitian blocks are inverted through
/// Cholesky, others through partial-pivot LU. Throws NotInvertible when the
/// smallest |eigenvalue| is at or below zero_tol.
ComplexMatrix invert_square(const ComplexMatrix& a, const ToleranceConfig& cfg = {});

// Predicates and small helpers.
bool is_hermitian(const ComplexMatrix& a, const ToleranceConfig& cfg = {});
bool is_unitary(const ComplexMatrix& u, const ToleranceConfig& cfg = {});
bool is_circulant(const ComplexMatrix& a, const ToleranceConfig& cfg = {});
bool is_diagonal(const ComplexMatrix& a, double tol);
double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b);
double max_off_diagonal(const ComplexMatrix& a);

Complex inner(std::span<const Complex> x, std::span<const Complex> y);
double norm(std::span<const Complex> x);
double max_abs_difference(std::span<const Complex> x, std::span<const Complex> y);
bool all_finite(std::span<const Complex> x);

}  // namespace gabor
