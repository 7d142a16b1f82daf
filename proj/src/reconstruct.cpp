#include "gabor/reconstruct.hpp"

#include <string>

#include "gabor/error.hpp"
#include "gabor/structure.hpp"

namespace gabor {

namespace {

ComplexMatrix columns_of(const std::vector<ComplexVector>& vs, std::size_t n) {
  return ComplexMatrix::generate(n, vs.size(), [&](std::size_t i, std::size_t j) { return vs[j][i]; });
}

// Solves S z = rhs, translating a singular S into the not-a-frame error.
ComplexMatrix frame_solve(const ComplexMatrix& s, const ComplexMatrix& rhs, const ToleranceConfig& cfg) {
  const auto verdict = frame_bounds(s, cfg);
  if (!verdict.is_frame)
    throw NotAFrameError("frame operator is singular (lower frame bound " + std::to_string(verdict.lower_bound) + ")");
  try {
    return solve_hermitian(s, rhs, cfg);
  } catch (const GaborError& e) {
    if (e.code() == ErrorCode::NotInvertible) throw NotAFrameError(e.what());
    throw;
  }
}

}  // namespace

std::vector<ComplexVector> canonical_dual(const GaborSystem& sys, const ToleranceConfig& cfg) {
  const std::size_t n = sys.dimension();
  const auto frame = synthesize(sys);
  const auto duals = frame_solve(frame_operator_factored(sys), columns_of(frame, n), cfg);
  std::vector<ComplexVector> out;
  out.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i) out.push_back(duals.column(i));
  return out;
}

ReconstructionPlan::ReconstructionPlan(GaborSystem sys, BlockDiagonalization bd, BlockDiagonalization inv,
                                       std::vector<ComplexVector> transformed)
    : system_(std::move(sys)),
      blockdiag_(std::move(bd)),
      inverse_(std::move(inv)),
      transformed_frame_(std::move(transformed)) {}

ReconstructionPlan ReconstructionPlan::build(const GaborSystem& sys, const ToleranceConfig& cfg, Route route,
                                             std::size_t threads) {
  auto bd = block_equivalence_route(sys, cfg, route);
  auto inv = invert_blockdiag(bd, cfg, threads);
  std::vector<ComplexVector> transformed;
  transformed.reserve(sys.size());
  for (const auto& f : synthesize(sys)) transformed.push_back(apply_transform(bd.transform, f));
  return ReconstructionPlan(sys, std::move(bd), std::move(inv), std::move(transformed));
}

ComplexVector ReconstructionPlan::reconstruct(std::span<const Complex> x) const {
  const std::size_t n = system_.dimension();
  if (x.size() != n) throw GaborError(ErrorCode::InvalidDimension, "signal length differs from N");
  const auto y = apply_transform(blockdiag_.transform, x);
  // Σ_i ⟨y, Uf_i⟩ B⁻¹(Uf_i) = B⁻¹ Σ_i ⟨y, Uf_i⟩ Uf_i
  ComplexVector acc(n);
  for (const auto& uf : transformed_frame_) {
    const Complex c = inner(y, uf);
    for (std::size_t j = 0; j < n; ++j) acc[j] += c * uf[j];
  }
  return apply_transform_adjoint(blockdiag_.transform, apply_blocks(inverse_, acc));
}

ReconstructionPlan build_plan(const GaborSystem& sys, const ToleranceConfig& cfg, Route route) {
  return ReconstructionPlan::build(sys, cfg, route);
}

ComplexVector reconstruct(const ReconstructionPlan& plan, std::span<const Complex> x) { return plan.reconstruct(x); }

ComplexVector reconstruct_dense_oracle(const GaborSystem& sys, std::span<const Complex> x, const ToleranceConfig& cfg) {
  const std::size_t n = sys.dimension();
  if (x.size() != n) throw GaborError(ErrorCode::InvalidDimension, "signal length differs from N");
  ComplexVector analysis(n);
  for (const auto& f : synthesize(sys)) {
    const Complex c = inner(x, f);
    for (std::size_t j = 0; j < n; ++j) analysis[j] += c * f[j];
  }
  const ComplexMatrix rhs(n, 1, std::move(analysis));
  return frame_solve(frame_operator_bruteforce(sys), rhs, cfg).column(0);
}

}  // namespace gabor
