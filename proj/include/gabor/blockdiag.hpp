#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "gabor/gabor_system.hpp"
#include "gabor/numerics.hpp"
#include "gabor/structure.hpp"

namespace gabor {

enum class TransformKind { Identity, Permutation, BlockFourier };

/// Describes the unitary U with diag(blocks) = U A U*.
///
/// Permutation: row t of U is e_(permutation[t]), so (Ux)[t] = x[permutation[t]].
/// BlockFourier: U = W_m ⊗ I_k with W_m[a,b] = ζ_m^(ab) / √m.
struct TransformDescriptor {
  TransformKind kind = TransformKind::Identity;
  std::vector<std::size_t> permutation;
  std::size_t m = 1;
  std::size_t k = 1;

  static TransformDescriptor identity(std::size_t n);
  static TransformDescriptor interlaced(std::size_t n, std::size_t ell);
  static TransformDescriptor block_fourier(std::size_t m, std::size_t k);

  std::size_t dimension() const;
  std::string_view name() const;
};

/// Blocks appear contiguously in the transformed coordinates, in order.
struct BlockDiagonalization {
  TransformDescriptor transform;
  std::vector<ComplexMatrix> blocks;
  std::size_t ell = 0;

  std::size_t dimension() const;
  std::vector<std::size_t> block_sizes() const;
};

enum class Route { Auto, Permutation, BlockFourier, Dense };

Route parse_route(std::string_view name);
std::string_view to_string(Route route);

ComplexVector apply_transform(const TransformDescriptor& t, std::span<const Complex> x);
ComplexVector apply_transform_adjoint(const TransformDescriptor& t, std::span<const Complex> x);
/// U A U* computed column by column through the fast transform.
ComplexMatrix conjugate_transform(const TransformDescriptor& t, const ComplexMatrix& a);
/// Materializes U as a dense matrix. Intended for verification only.
ComplexMatrix realize(const TransformDescriptor& t);

ComplexMatrix assemble_block_diagonal(std::span<const ComplexMatrix> blocks);
/// U* diag(blocks) U: the matrix the decomposition stands for.
ComplexMatrix reassemble(const BlockDiagonalization& bd);
/// diag(blocks) applied to a vector already expressed in transformed coordinates.
ComplexVector apply_blocks(const BlockDiagonalization& bd, std::span<const Complex> y);

/// gcd of N and every residue in the support, with gcd(N, 0) = N.
std::size_t gcd_block_count(const DiagonalSupport& support);

/// Permutation route driven by the measured diagonal support of A. Blocks
/// are b^(s)_(i,j) = a_(iℓ+s, jℓ+s). Throws NoBlockStructure when ℓ = 1.
BlockDiagonalization permutation_blockdiag(const ComplexMatrix& a, const ToleranceConfig& cfg = {});
/// Permutation route with a prescribed block count ℓ | N. Entries linking
/// different residue classes mod ℓ must vanish (NoBlockStructure otherwise).
BlockDiagonalization permutation_blockdiag(const ComplexMatrix& a, std::size_t ell, const ToleranceConfig& cfg = {});

/// Block Fourier route for an mk x mk block-circulant A with k x k blocks
/// B_0..B_(m-1) in its first block column: D_ℓ = Σ_j ζ_m^(jℓ) B_j.
BlockDiagonalization block_fourier_blockdiag(const ComplexMatrix& a, std::size_t m, std::size_t k,
                                             const ToleranceConfig& cfg = {});

/// Picks the cheapest explicit route for S_G:
///   L = Z_N           -> identity transform, N 1x1 blocks
///   L subgroup, |L|>1 -> permutation with ℓ = |L|
///   K subgroup, |K|>1 -> block Fourier with m = |K|, k = N/|K|
///   otherwise         -> permutation on the measured support (single block when ℓ = 1)
/// An explicit route overrides the preference and throws when the structure is absent.
BlockDiagonalization block_equivalence_route(const GaborSystem& sys, const ToleranceConfig& cfg = {},
                                             Route route = Route::Auto);
BlockDiagonalization block_equivalence_route(const GaborSystem& sys, const ComplexMatrix& frame_operator,
                                             const ToleranceConfig& cfg = {}, Route route = Route::Auto);

/// Blockwise inverse with the same transform. Blocks are independent and are
/// inverted on up to `threads` workers (0 = hardware concurrency). Throws
/// NotAFrameError naming the first singular block.
BlockDiagonalization invert_blockdiag(const BlockDiagonalization& bd, const ToleranceConfig& cfg = {},
                                      std::size_t threads = 1);

}  // namespace gabor
