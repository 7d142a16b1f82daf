#include "gabor/gabor_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gabor/error.hpp"

namespace gabor {

namespace {

void sort_unique(ResidueSet& r) {
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
}

}  // namespace

ResidueSet canonical_residues(std::span<const std::int64_t> raw, std::size_t n) {
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "residues modulo 0");
  const auto nn = static_cast<std::int64_t>(n);
  ResidueSet out;
  out.reserve(raw.size());
  for (auto v : raw) {
    auto r = v % nn;
    if (r < 0) r += nn;
    out.push_back(static_cast<std::size_t>(r));
  }
  sort_unique(out);
  return out;
}

ResidueSet canonical_residues(std::span<const std::size_t> raw, std::size_t n) {
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "residues modulo 0");
  ResidueSet out;
  out.reserve(raw.size());
  for (auto v : raw) out.push_back(v % n);
  sort_unique(out);
  return out;
}

ResidueSet full_group(std::size_t n) {
  ResidueSet out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = i;
  return out;
}

ResidueSet cyclic_subgroup(std::size_t n, std::size_t order) {
  if (order == 0 || n % order != 0)
    throw GaborError(ErrorCode::InvalidArgument, "subgroup order must divide N");
  const std::size_t step = n / order;
  ResidueSet out(order);
  for (std::size_t i = 0; i < order; ++i) out[i] = i * step;
  return out;
}

GaborSystem::GaborSystem(ComplexVector window, std::span<const std::size_t> modulations,
                         std::span<const std::size_t> translations)
    : window_(std::move(window)) {
  const std::size_t n = window_.size();
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "window must have positive length");
  if (!all_finite(window_)) throw GaborError(ErrorCode::InvalidArgument, "window has non-finite entries");
  if (std::all_of(window_.begin(), window_.end(), [](const Complex& v) { return v == Complex{}; }))
    throw GaborError(ErrorCode::InvalidArgument, "window must be nonzero");
  if (modulations.empty()) throw GaborError(ErrorCode::InvalidSet, "modulation set is empty");
  if (translations.empty()) throw GaborError(ErrorCode::InvalidSet, "translation set is empty");
  modulations_ = canonical_residues(modulations, n);
  translations_ = canonical_residues(translations, n);
}

double FrameVerdict::condition_number() const {
  if (lower_bound <= 0.0) return std::numeric_limits<double>::infinity();
  return upper_bound / lower_bound;
}

ComplexVector time_frequency_shift(std::span<const Complex> g, std::size_t ell, std::size_t k) {
  const std::size_t n = g.size();
  if (n == 0) throw GaborError(ErrorCode::InvalidDimension, "empty window");
  if (ell >= n || k >= n) throw GaborError(ErrorCode::InvalidIndex, "time-frequency index out of range");
  ComplexVector out(n);
  for (std::size_t j = 0; j < n; ++j)
    out[j] = root_of_unity(n, static_cast<long long>((ell * j) % n)) * g[(j + n - k) % n];
  return out;
}

std::vector<ComplexVector> synthesize(const GaborSystem& sys) {
  std::vector<ComplexVector> out;
  out.reserve(sys.size());
  for (auto k : sys.translations())
    for (auto ell : sys.modulations()) out.push_back(time_frequency_shift(sys.window(), ell, k));
  return out;
}

ComplexMatrix frame_operator_bruteforce(const GaborSystem& sys) {
  const std::size_t n = sys.dimension();
  std::vector<Complex> s(n * n);
  for (const auto& v : synthesize(sys))
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s[i * n + j] += v[i] * std::conj(v[j]);
  return ComplexMatrix(n, n, std::move(s));
}

FrameVerdict frame_bounds(const ComplexMatrix& s, const ToleranceConfig& cfg) {
  const auto ev = hermitian_eigenvalues(s, cfg);
  FrameVerdict v;
  v.lower_bound = std::max(0.0, ev.front());
  v.upper_bound = std::max(v.lower_bound, ev.back());
  v.is_frame = v.lower_bound > cfg.zero_tol;
  return v;
}

GaborSystem fourier_dual(const GaborSystem& sys) {
  return GaborSystem(dft(sys.window()), sys.translations(), sys.modulations());
}

std::size_t support_size(std::span<const Complex> v, double zero_tol) {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [&](const Complex& x) { return std::abs(x) > zero_tol; }));
}

PrecheckResult support_frame_precheck(const GaborSystem& sys, const ToleranceConfig& cfg) {
  const std::size_t n = sys.dimension();
  PrecheckResult r;
  r.window_support = support_size(sys.window(), cfg.zero_tol);
  r.spectrum_support = support_size(dft(sys.window()), cfg.zero_tol);
  // |supp| < N/|K|  <=>  |supp|·|K| < N, kept in integers.
  if (r.window_support * sys.translations().size() < n) {
    r.verdict = PrecheckVerdict::CannotBeFrame;
    r.reason = "window has " + std::to_string(r.window_support) + " nonzero entries, fewer than N/|K| = " +
               std::to_string(n) + "/" + std::to_string(sys.translations().size());
  } else if (r.spectrum_support * sys.modulations().size() < n) {
    r.verdict = PrecheckVerdict::CannotBeFrame;
    r.reason = "DFT of window has " + std::to_string(r.spectrum_support) +
               " nonzero entries, fewer than N/|L| = " + std::to_string(n) + "/" +
               std::to_string(sys.modulations().size());
  }
  return r;
}

}  // namespace gabor
