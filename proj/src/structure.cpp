#include "gabor/structure.hpp"

#include <algorithm>
#include <cmath>

#include "gabor/error.hpp"

namespace gabor {

bool DiagonalSupport::contains(std::size_t d) const {
  return std::binary_search(residues.begin(), residues.end(), d);
}

ComplexMatrix modulation_matrix(std::size_t n, std::span<const std::size_t> modulations) {
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "modulation matrix of size 0");
  if (modulations.empty()) throw GaborError(ErrorCode::InvalidSet, "modulation set is empty");
  const auto set = canonical_residues(modulations, n);
  // First column m[d] = P_L(ζ_N^d); M_L[i,j] = m[(i - j) mod N].
  ComplexVector m(n);
  for (std::size_t d = 0; d < n; ++d) {
    Complex acc{};
    for (auto ell : set) acc += root_of_unity(n, static_cast<long long>((ell * d) % n));
    m[d] = acc;
  }
  return ComplexMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return m[(i + n - j) % n]; });
}

ComplexMatrix translation_matrix(std::size_t n, std::span<const Complex> g, std::span<const std::size_t> translations) {
  if (g.size() != n) throw GaborError(ErrorCode::InvalidDimension, "window length differs from N");
  if (translations.empty()) throw GaborError(ErrorCode::InvalidSet, "translation set is empty");
  const auto set = canonical_residues(translations, n);
  std::vector<Complex> t(n * n);
  for (auto k : set) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex gi = g[(i + n - k) % n];
      if (gi == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) t[i * n + j] += gi * std::conj(g[(j + n - k) % n]);
    }
  }
  return ComplexMatrix(n, n, std::move(t));
}

ComplexMatrix frame_operator_factored(const GaborSystem& sys) {
  const std::size_t n = sys.dimension();
  return hadamard(modulation_matrix(n, sys.modulations()), translation_matrix(n, sys.window(), sys.translations()));
}

SubgroupInfo detect_subgroup(std::span<const std::size_t> set, std::size_t n) {
  if (n == 0 || set.empty()) return {};
  const auto canon = canonical_residues(set, n);
  const std::size_t order = canon.size();
  if (n % order != 0) return {};
  if (canon != cyclic_subgroup(n, order)) return {};
  return {true, order, n / order};
}

DiagonalSupport diagonal_support(const ComplexMatrix& a, const ToleranceConfig& cfg) {
  if (!a.is_square()) throw GaborError(ErrorCode::InvalidDimension, "diagonal support of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!hit[(j + n - i) % n] && std::abs(a(i, j)) > cfg.zero_tol) hit[(j + n - i) % n] = true;
  DiagonalSupport s{n, {}};
  for (std::size_t d = 0; d < n; ++d)
    if (hit[d]) s.residues.push_back(d);
  return s;
}

double subgroup_exponential_sum(std::size_t n, std::size_t r, long long d) {
  if (r == 0 || n % r != 0) throw GaborError(ErrorCode::InvalidArgument, "r must divide N");
  return d % static_cast<long long>(r) == 0 ? static_cast<double>(r) : 0.0;
}

bool is_block_circulant(const ComplexMatrix& a, std::size_t block_size, const ToleranceConfig& cfg) {
  if (!a.is_square()) throw GaborError(ErrorCode::InvalidDimension, "block-circulant test on a non-square matrix");
  const std::size_t n = a.rows();
  if (block_size == 0 || n % block_size != 0)
    throw GaborError(ErrorCode::InvalidArgument, "block size must divide the matrix size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(a((i + block_size) % n, (j + block_size) % n) - a(i, j)) > cfg.zero_tol) return false;
  return true;
}

}  // namespace gabor
