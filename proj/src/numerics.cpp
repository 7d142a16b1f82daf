#include "gabor/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "gabor/error.hpp"

namespace gabor {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidDimension: return "invalid dimension";
    case ErrorCode::InvalidIndex: return "invalid index";
    case ErrorCode::InvalidSet: return "invalid set";
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::ContractViolation: return "contract violation";
    case ErrorCode::NotInvertible: return "not invertible";
    case ErrorCode::NotAFrame: return "not a frame";
    case ErrorCode::NoBlockStructure: return "no block structure";
    case ErrorCode::NotBlockCirculant: return "not block-circulant";
    case ErrorCode::DimensionalConstraint: return "dimensional constraint";
    case ErrorCode::SizeLimit: return "size limit";
    case ErrorCode::Parse: return "parse error";
  }
  return "error";
}

namespace {

using EigenMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using EigenColMatrix = Eigen::MatrixXcd;

Eigen::Map<const EigenMatrix> as_eigen(const ComplexMatrix& a) {
  return {a.entries().data(), static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols())};
}

ComplexMatrix from_eigen(const EigenColMatrix& m) {
  return ComplexMatrix::generate(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()),
                                 [&](std::size_t i, std::size_t j) {
                                   return m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                                 });
}

double scaled_tol(const ComplexMatrix& a, const ToleranceConfig& cfg) {
  return std::max(cfg.zero_tol, cfg.rel_tol * a.max_abs());
}

void require_square(const ComplexMatrix& a, const char* what) {
  if (!a.is_square() || a.rows() == 0)
    throw GaborError(ErrorCode::InvalidDimension, std::string(what) + " requires a nonempty square matrix");
}

// Twiddle table w[m] = ζ_n^(sign·m), m = 0..n-1.
std::vector<Complex> twiddles(std::size_t n, int sign) {
  std::vector<Complex> w(n);
  for (std::size_t m = 0; m < n; ++m) w[m] = root_of_unity(n, sign * static_cast<long long>(m));
  return w;
}

ComplexVector dft_impl(std::span<const Complex> v, int sign) {
  const std::size_t n = v.size();
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "dft of an empty vector");
  const auto w = twiddles(n, sign);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j < n; ++j) acc += v[j] * w[(k * j) % n];
    out[k] = acc * scale;
  }
  return out;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw GaborError(ErrorCode::InvalidDimension, "entry count does not match rows*cols");
  if (!all_finite(entries_)) throw GaborError(ErrorCode::InvalidArgument, "matrix has non-finite entries");
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  return generate(n, n, [](std::size_t i, std::size_t j) { return i == j ? Complex{1.0} : Complex{}; });
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> values) {
  return generate(values.size(), values.size(),
                  [&](std::size_t i, std::size_t j) { return i == j ? values[i] : Complex{}; });
}

ComplexVector ComplexMatrix::column(std::size_t j) const {
  ComplexVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

ComplexVector ComplexMatrix::diagonal_entries() const {
  ComplexVector d(std::min(rows_, cols_));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = (*this)(i, i);
  return d;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  return generate(cols_, rows_, [&](std::size_t i, std::size_t j) { return std::conj((*this)(j, i)); });
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw GaborError(ErrorCode::InvalidDimension, "matrix product shape mismatch");
  std::vector<Complex> out(rows_ * rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex* row = out.data() + i * rhs.cols_;
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex a = (*this)(i, k);
      if (a == Complex{}) continue;
      const Complex* b = rhs.entries_.data() + k * rhs.cols_;
      for (std::size_t j = 0; j < rhs.cols_; ++j) row[j] += a * b[j];
    }
  }
  return ComplexMatrix(rows_, rhs.cols_, std::move(out));
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw GaborError(ErrorCode::InvalidDimension, "matrix sum shape mismatch");
  std::vector<Complex> out(entries_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += rhs.entries_[i];
  return ComplexMatrix(rows_, cols_, std::move(out));
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw GaborError(ErrorCode::InvalidDimension, "matrix difference shape mismatch");
  std::vector<Complex> out(entries_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs.entries_[i];
  return ComplexMatrix(rows_, cols_, std::move(out));
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
  std::vector<Complex> out(entries_);
  for (auto& e : out) e *= factor;
  return ComplexMatrix(rows_, cols_, std::move(out));
}

ComplexVector ComplexMatrix::apply(std::span<const Complex> x) const {
  if (x.size() != cols_) throw GaborError(ErrorCode::InvalidDimension, "matrix-vector shape mismatch");
  ComplexVector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Complex acc{};
    const Complex* row = entries_.data() + i * cols_;
    for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

double ComplexMatrix::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& e : entries_) m = std::max(m, std::abs(e));
  return m;
}

Complex root_of_unity(std::size_t n, long long m) {
  const auto nn = static_cast<long long>(n);
  long long r = m % nn;
  if (r < 0) r += nn;
  if (r == 0) return {1.0, 0.0};
  if (2 * r == nn) return {-1.0, 0.0};
  if (4 * r == nn) return {0.0, 1.0};
  if (4 * r == 3 * nn) return {0.0, -1.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(nn);
  return std::polar(1.0, angle);
}

ComplexVector dft(std::span<const Complex> v) { return dft_impl(v, -1); }

ComplexVector inverse_dft(std::span<const Complex> v) { return dft_impl(v, +1); }

ComplexMatrix dft_matrix(std::size_t n) {
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "dft_matrix of size 0");
  const auto w = twiddles(n, -1);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  return ComplexMatrix::generate(n, n, [&](std::size_t k, std::size_t j) { return w[(k * j) % n] * scale; });
}

ComplexMatrix kronecker(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  return ComplexMatrix::generate(a.rows() * br, a.cols() * bc, [&](std::size_t i, std::size_t j) {
    return a(i / br, j / bc) * b(i % br, j % bc);
  });
}

ComplexMatrix hadamard(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw GaborError(ErrorCode::InvalidDimension, "hadamard product shape mismatch");
  std::vector<Complex> out(a.entries().begin(), a.entries().end());
  const auto be = b.entries();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= be[i];
  return ComplexMatrix(a.rows(), a.cols(), std::move(out));
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const ToleranceConfig& cfg) {
  require_square(a, "hermitian_eigenvalues");
  if (!is_hermitian(a, cfg)) throw GaborError(ErrorCode::ContractViolation, "matrix is not Hermitian");
  const EigenColMatrix m = as_eigen(a);
  Eigen::SelfAdjointEigenSolver<EigenColMatrix> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw GaborError(ErrorCode::InvalidArgument, "Hermitian eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end());
  return out;
}

ComplexMatrix conjugate_by_unitary(const ComplexMatrix& u, const ComplexMatrix& a, const ToleranceConfig& cfg) {
  require_square(u, "conjugate_by_unitary");
  if (a.rows() != u.rows() || a.cols() != u.cols())
    throw GaborError(ErrorCode::InvalidDimension, "conjugate_by_unitary size mismatch");
  if (!is_unitary(u, cfg)) throw GaborError(ErrorCode::ContractViolation, "conjugating matrix is not unitary");
  return u.adjoint() * a * u;
}

ComplexMatrix solve_hermitian(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg) {
  require_square(a, "solve_hermitian");
  if (b.rows() != a.rows()) throw GaborError(ErrorCode::InvalidDimension, "right-hand side length mismatch");
  if (!is_hermitian(a, cfg)) throw GaborError(ErrorCode::ContractViolation, "matrix is not Hermitian");
  const EigenColMatrix m = as_eigen(a);
  Eigen::LLT<EigenColMatrix> llt(m);
  if (llt.info() != Eigen::Success)
    throw GaborError(ErrorCode::NotInvertible, "matrix is not positive definite");
  // Cholesky pivots bound the smallest eigenvalue from above; a tiny pivot
  // means the matrix is numerically singular.
  const auto diag = llt.matrixLLT().diagonal();
  for (Eigen::Index i = 0; i < diag.size(); ++i)
    if (std::norm(diag(i)) <= cfg.zero_tol)
      throw GaborError(ErrorCode::NotInvertible, "matrix is numerically singular");
  const EigenColMatrix rhs = as_eigen(b);
  return from_eigen(llt.solve(rhs));
}

ComplexVector solve_hermitian(const ComplexMatrix& a, std::span<const Complex> b, const ToleranceConfig& cfg) {
  const ComplexMatrix rhs(b.size(), 1, std::vector<Complex>(b.begin(), b.end()));
  return solve_hermitian(a, rhs, cfg).column(0);
}

ComplexMatrix invert_square(const ComplexMatrix& a, const ToleranceConfig& cfg) {
  require_square(a, "invert_square");
  const EigenColMatrix m = as_eigen(a);
  if (a.rows() == 1) {
    if (std::abs(m(0, 0)) <= cfg.zero_tol) throw GaborError(ErrorCode::NotInvertible, "singular 1x1 block");
    return ComplexMatrix(1, 1, {1.0 / m(0, 0)});
  }
  double min_abs_eig = 0.0;
  if (is_hermitian(a, cfg)) {
    Eigen::SelfAdjointEigenSolver<EigenColMatrix> es(m, Eigen::EigenvaluesOnly);
    min_abs_eig = es.eigenvalues().cwiseAbs().minCoeff();
  } else {
    Eigen::ComplexEigenSolver<EigenColMatrix> es(m, false);
    min_abs_eig = es.eigenvalues().cwiseAbs().minCoeff();
  }
  if (min_abs_eig <= cfg.zero_tol) throw GaborError(ErrorCode::NotInvertible, "singular block");
  const auto n = static_cast<Eigen::Index>(a.rows());
  const EigenColMatrix inv = m.partialPivLu().solve(EigenColMatrix::Identity(n, n));
  return from_eigen(inv);
}

bool is_hermitian(const ComplexMatrix& a, const ToleranceConfig& cfg) {
  if (!a.is_square()) return false;
  const double tol = scaled_tol(a, cfg);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (std::abs(a(i, j) - std::conj(a(j, i))) > tol) return false;
  return true;
}

bool is_unitary(const ComplexMatrix& u, const ToleranceConfig& cfg) {
  if (!u.is_square()) return false;
  const auto gram = u.adjoint() * u;
  return max_abs_difference(gram, ComplexMatrix::identity(u.rows())) <= std::max(cfg.zero_tol, cfg.rel_tol);
}

bool is_circulant(const ComplexMatrix& a, const ToleranceConfig& cfg) {
  if (!a.is_square()) return false;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a((i + 1) % n, (j + 1) % n) - a(i, j)) > cfg.zero_tol) return false;
  return true;
}

bool is_diagonal(const ComplexMatrix& a, double tol) { return max_off_diagonal(a) <= tol; }

double max_abs_difference(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw GaborError(ErrorCode::InvalidDimension, "comparison shape mismatch");
  return max_abs_difference(a.entries(), b.entries());
}

double max_off_diagonal(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

Complex inner(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw GaborError(ErrorCode::InvalidDimension, "inner product length mismatch");
  Complex acc{};
  for (std::size_t j = 0; j < x.size(); ++j) acc += x[j] * std::conj(y[j]);
  return acc;
}

double norm(std::span<const Complex> x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs_difference(std::span<const Complex> x, std::span<const Complex> y) {
  if (x.size() != y.size()) throw GaborError(ErrorCode::InvalidDimension, "comparison length mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) m = std::max(m, std::abs(x[i] - y[i]));
  return m;
}

bool all_finite(std::span<const Complex> x) {
  return std::all_of(x.begin(), x.end(),
                     [](const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

}  // namespace gabor
