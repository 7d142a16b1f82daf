#include "gabor/windows.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "gabor/error.hpp"

namespace gabor {

FamilyStyle parse_family_style(std::string_view name) {
  if (name == "basis") return FamilyStyle::Basis;
  if (name == "fourier") return FamilyStyle::Fourier;
  throw GaborError(ErrorCode::InvalidArgument, "unknown family style '" + std::string(name) + "'");
}

std::string_view to_string(FamilyStyle style) { return style == FamilyStyle::Basis ? "basis" : "fourier"; }

ComplexVector interlace_window(const InterlaceSpec& spec, const ToleranceConfig& cfg) {
  const std::size_t n = spec.n, p = spec.p;
  if (p <= 1 || n == 0 || n % p != 0) throw GaborError(ErrorCode::InvalidArgument, "p must be a divisor of N with p > 1");
  const std::size_t m = n / p;
  if (m > p)
    throw GaborError(ErrorCode::DimensionalConstraint,
                     "need N/p <= p (N <= p^2) to fit N/p orthogonal vectors in C^p");
  if (spec.family.size() != m)
    throw GaborError(ErrorCode::InvalidArgument, "family must hold exactly N/p vectors");
  for (const auto& h : spec.family) {
    if (h.size() != p) throw GaborError(ErrorCode::InvalidDimension, "family vectors must have length p");
    if (norm(h) <= cfg.zero_tol) throw GaborError(ErrorCode::ContractViolation, "family contains a zero vector");
  }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (std::abs(inner(spec.family[a], spec.family[b])) > cfg.zero_tol)
        throw GaborError(ErrorCode::ContractViolation,
                         "family vectors " + std::to_string(a) + " and " + std::to_string(b) + " are not orthogonal");
  ComplexVector g(n);
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < p; ++l) g[k + l * m] = spec.family[k][l];
  return g;
}

std::vector<ComplexVector> default_orthogonal_family(std::size_t m, std::size_t p, FamilyStyle style) {
  if (m == 0 || p == 0) throw GaborError(ErrorCode::InvalidArgument, "family sizes must be positive");
  if (m > p) throw GaborError(ErrorCode::DimensionalConstraint, "cannot fit more than p orthogonal vectors in C^p");
  std::vector<ComplexVector> out;
  out.reserve(m);
  if (style == FamilyStyle::Basis) {
    for (std::size_t k = 0; k < m; ++k) {
      ComplexVector e(p);
      e[k] = 1.0;
      out.push_back(std::move(e));
    }
    return out;
  }
  const auto f = dft_matrix(p);
  for (std::size_t k = 0; k < m; ++k) out.push_back(f.column(k));
  return out;
}

bool interlace_is_diagonal(std::size_t n, std::size_t p, std::size_t r) {
  if (p <= 1 || n == 0 || n % p != 0 || r == 0 || n % r != 0)
    throw GaborError(ErrorCode::InvalidArgument, "p and r must divide N, with p > 1");
  return std::gcd(p, n / r) == 1;
}

namespace {

FullSamplingCheck sampled_energy(std::span<const Complex> v, std::span<const std::size_t> shifts,
                                 const ToleranceConfig& cfg) {
  const std::size_t n = v.size();
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "empty window");
  const auto set = canonical_residues(shifts, n);
  FullSamplingCheck out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (auto k : set) acc += std::norm(v[(i + n - k) % n]);
    out.diagonal[i] = static_cast<double>(n) * acc;
  }
  out.is_frame = !set.empty() &&
                 std::all_of(out.diagonal.begin(), out.diagonal.end(), [&](double x) { return x > cfg.zero_tol; });
  return out;
}

}  // namespace

FullSamplingCheck full_modulation_frame_check(std::span<const Complex> g, std::span<const std::size_t> translations,
                                              const ToleranceConfig& cfg) {
  return sampled_energy(g, translations, cfg);
}

FullSamplingCheck full_translation_frame_check(std::span<const Complex> g, std::span<const std::size_t> modulations,
                                               const ToleranceConfig& cfg) {
  if (g.empty()) throw GaborError(ErrorCode::InvalidDimension, "empty window");
  const auto ghat = dft(g);
  return sampled_energy(ghat, modulations, cfg);
}

}  // namespace gabor
