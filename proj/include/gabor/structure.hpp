#pragma once

#include <cstddef>
#include <span>

#include "gabor/gabor_system.hpp"
#include "gabor/numerics.hpp"

namespace gabor {

struct SubgroupInfo {
  bool is_subgroup = false;
  std::size_t order = 0;      // |A| when is_subgroup, else 0
  std::size_t generator = 0;  // N / order when is_subgroup, else 0
};

/// Wrapped diagonals of an N x N matrix that are not identically zero.
/// Residue d stands for every entry a_ij with (j - i) mod N == d.
struct DiagonalSupport {
  std::size_t n = 0;
  ResidueSet residues;

  bool contains(std::size_t d) const;
};

/// M_L[i,j] = Σ_(ℓ∈L) ζ_N^(ℓ(i-j)). Circulant and Hermitian.
ComplexMatrix modulation_matrix(std::size_t n, std::span<const std::size_t> modulations);

/// T_K[i,j] = Σ_(k∈K) g[i-k] conj(g[j-k]). Hermitian positive semidefinite.
ComplexMatrix translation_matrix(std::size_t n, std::span<const Complex> g, std::span<const std::size_t> translations);

/// S_G = M_L ⊙ T_K.
ComplexMatrix frame_operator_factored(const GaborSystem& sys);

/// True iff A equals the cyclic subgroup of Z_N of order |A|.
SubgroupInfo detect_subgroup(std::span<const std::size_t> set, std::size_t n);

DiagonalSupport diagonal_support(const ComplexMatrix& a, const ToleranceConfig& cfg = {});

/// Σ_(ℓ∈⟨N/r⟩) ζ_N^(ℓd) in closed form: r when r | d, 0 otherwise.
double subgroup_exponential_sum(std::size_t n, std::size_t r, long long d);

/// A[i+M, j+M] == A[i, j] (indices mod N) for block size M.
bool is_block_circulant(const ComplexMatrix& a, std::size_t block_size, const ToleranceConfig& cfg = {});

}  // namespace gabor
