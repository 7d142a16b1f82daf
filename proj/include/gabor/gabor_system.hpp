#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gabor/numerics.hpp"

namespace gabor {

/// Sorted, duplicate-free residues in [0, N).
using ResidueSet = std::vector<std::size_t>;

/// Reduces arbitrary integers mod N and returns them sorted and unique.
ResidueSet canonical_residues(std::span<const std::int64_t> raw, std::size_t n);
ResidueSet canonical_residues(std::span<const std::size_t> raw, std::size_t n);
/// {0, 1, ..., n-1}
ResidueSet full_group(std::size_t n);
/// The cyclic subgroup of Z_n of the given order, generated by n / order.
ResidueSet cyclic_subgroup(std::size_t n, std::size_t order);

/// A finite Gabor system G(g, L x K) on C^N.
///
/// Frame vectors are enumerated translation-major: k runs over K in ascending
/// order on the outside, ℓ over L in ascending order on the inside. Index
/// i of `synthesize` is therefore (position of k) * |L| + (position of ℓ).
class GaborSystem {
 public:
  /// Validates and canonicalizes: L and K are reduced mod N, sorted and
  /// deduplicated; g must have length N, finite entries and be nonzero.
  GaborSystem(ComplexVector window, std::span<const std::size_t> modulations,
              std::span<const std::size_t> translations);

  std::size_t dimension() const noexcept { return window_.size(); }
  const ComplexVector& window() const noexcept { return window_; }
  const ResidueSet& modulations() const noexcept { return modulations_; }
  const ResidueSet& translations() const noexcept { return translations_; }
  std::size_t size() const noexcept { return modulations_.size() * translations_.size(); }

 private:
  ComplexVector window_;
  ResidueSet modulations_;
  ResidueSet translations_;
};

struct FrameVerdict {
  bool is_frame = false;
  double lower_bound = 0.0;
  double upper_bound = 0.0;

  double condition_number() const;
};

enum class PrecheckVerdict { CannotBeFrame, Inconclusive };

struct PrecheckResult {
  PrecheckVerdict verdict = PrecheckVerdict::Inconclusive;
  std::size_t window_support = 0;
  std::size_t spectrum_support = 0;
  std::string reason;  // empty when inconclusive
};

/// (M_ℓ T_k g)[j] = ζ_N^(ℓj) g[j - k mod N]
ComplexVector time_frequency_shift(std::span<const Complex> g, std::size_t ell, std::size_t k);

std::vector<ComplexVector> synthesize(const GaborSystem& sys);

/// S = Σ_(ℓ,k) (M_ℓ T_k g)(M_ℓ T_k g)*, accumulated term by term.
ComplexMatrix frame_operator_bruteforce(const GaborSystem& sys);

/// Optimal frame bounds from the extreme eigenvalues of S. Tiny negative
/// eigenvalues are roundoff and are clamped to zero.
FrameVerdict frame_bounds(const ComplexMatrix& s, const ToleranceConfig& cfg = {});

/// G(ĝ, K x L): the image of the system under the unitary DFT.
GaborSystem fourier_dual(const GaborSystem& sys);

/// Support counting test: fewer than N/|K| nonzero window entries, or fewer
/// than N/|L| nonzero DFT entries, rules out the frame property. Entries with
/// magnitude at or below zero_tol count as zero.
PrecheckResult support_frame_precheck(const GaborSystem& sys, const ToleranceConfig& cfg = {});

std::size_t support_size(std::span<const Complex> v, double zero_tol);

}  // namespace gabor
