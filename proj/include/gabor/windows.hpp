#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "gabor/gabor_system.hpp"
#include "gabor/numerics.hpp"

namespace gabor {

enum class FamilyStyle { Basis, Fourier };

FamilyStyle parse_family_style(std::string_view name);
std::string_view to_string(FamilyStyle style);

/// Inputs of the interlaced window g[k + lM] = h_k[l], where p > 1 is the
/// order of the translation subgroup and M = N / p is the number of vectors.
struct InterlaceSpec {
  std::size_t n = 0;
  std::size_t p = 0;
  std::vector<ComplexVector> family;  // M vectors of length p

  std::size_t m() const { return p == 0 ? 0 : n / p; }
};

/// Validates the inputs (p | N, p > 1, M <= p, every h_k of length p, nonzero
/// and pairwise orthogonal at zero_tol) and interlaces the family.
ComplexVector interlace_window(const InterlaceSpec& spec, const ToleranceConfig& cfg = {});

/// Basis: e_0..e_(M-1) of C^p. Fourier: the first M columns of the p-point
/// DFT matrix, every entry nonzero.
std::vector<ComplexVector> default_orthogonal_family(std::size_t m, std::size_t p, FamilyStyle style);

/// gcd(p, N/r) == 1
bool interlace_is_diagonal(std::size_t n, std::size_t p, std::size_t r);

struct FullSamplingCheck {
  bool is_frame = false;
  std::vector<double> diagonal;  // eigenvalues of S (or of F S F*), index-aligned
};

/// L = Z_N: S is diagonal with entries N Σ_(k∈K) |g[i-k]|².
FullSamplingCheck full_modulation_frame_check(std::span<const Complex> g, std::span<const std::size_t> translations,
                                              const ToleranceConfig& cfg = {});

/// K = Z_N: F S F* is diagonal with entries N Σ_(ℓ∈L) |ĝ[j-ℓ]|².
FullSamplingCheck full_translation_frame_check(std::span<const Complex> g, std::span<const std::size_t> modulations,
                                               const ToleranceConfig& cfg = {});

}  // namespace gabor
