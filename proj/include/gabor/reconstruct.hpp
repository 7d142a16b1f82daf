#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gabor/blockdiag.hpp"
#include "gabor/gabor_system.hpp"
#include "gabor/numerics.hpp"

namespace gabor {

/// Canonical dual frame S⁻¹ f_i, in the enumeration order of `synthesize`.
/// Throws NotAFrameError when S is singular.
std::vector<ComplexVector> canonical_dual(const GaborSystem& sys, const ToleranceConfig& cfg = {});

/// Precomputed blockwise reconstruction for one Gabor frame.
///
/// With S = U* B U, a signal is recovered in transformed coordinates as
/// y = Σ_i ⟨y, U f_i⟩ B⁻¹(U f_i), y = U x, and mapped back by U*.
/// Building costs O(N |Λ|) plus one dense inversion per block; each
/// reconstruction costs O(N |Λ|) plus one block-sized product per block.
/// The plan is immutable and may be shared between threads.
class ReconstructionPlan {
 public:
  /// Throws NotAFrameError (naming the block) when some block is singular.
  static ReconstructionPlan build(const GaborSystem& sys, const ToleranceConfig& cfg = {}, Route route = Route::Auto,
                                  std::size_t threads = 1);

  const GaborSystem& system() const noexcept { return system_; }
  const BlockDiagonalization& blockdiag() const noexcept { return blockdiag_; }
  const BlockDiagonalization& inverse_blocks() const noexcept { return inverse_; }
  const std::vector<ComplexVector>& transformed_frame() const noexcept { return transformed_frame_; }

  ComplexVector reconstruct(std::span<const Complex> x) const;

 private:
  ReconstructionPlan(GaborSystem sys, BlockDiagonalization bd, BlockDiagonalization inv,
                     std::vector<ComplexVector> transformed);

  GaborSystem system_;
  BlockDiagonalization blockdiag_;
  BlockDiagonalization inverse_;
  std::vector<ComplexVector> transformed_frame_;
};

ReconstructionPlan build_plan(const GaborSystem& sys, const ToleranceConfig& cfg = {}, Route route = Route::Auto);
ComplexVector reconstruct(const ReconstructionPlan& plan, std::span<const Complex> x);

/// Σ_i ⟨x, f_i⟩ S⁻¹ f_i with a dense Hermitian solve on S = F F*.
ComplexVector reconstruct_dense_oracle(const GaborSystem& sys, std::span<const Complex> x,
                                       const ToleranceConfig& cfg = {});

}  // namespace gabor
