#include "gabor/blockdiag.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "gabor/error.hpp"

namespace gabor {

TransformDescriptor TransformDescriptor::identity(std::size_t n) {
  TransformDescriptor t;
  t.kind = TransformKind::Identity;
  t.m = 1;
  t.k = n;
  return t;
}

TransformDescriptor TransformDescriptor::interlaced(std::size_t n, std::size_t ell) {
  if (ell == 0 || n % ell != 0) throw GaborError(ErrorCode::InvalidArgument, "block count must divide N");
  TransformDescriptor t;
  t.kind = TransformKind::Permutation;
  t.permutation.resize(n);
  const std::size_t size = n / ell;
  // Class s = {s, s+ℓ, s+2ℓ, ...} occupies positions [s·size, (s+1)·size).
  for (std::size_t s = 0; s < ell; ++s)
    for (std::size_t i = 0; i < size; ++i) t.permutation[s * size + i] = i * ell + s;
  return t;
}

TransformDescriptor TransformDescriptor::block_fourier(std::size_t m, std::size_t k) {
  if (m == 0 || k == 0) throw GaborError(ErrorCode::InvalidArgument, "block Fourier factors must be positive");
  TransformDescriptor t;
  t.kind = TransformKind::BlockFourier;
  t.m = m;
  t.k = k;
  return t;
}

std::size_t TransformDescriptor::dimension() const {
  return kind == TransformKind::Permutation ? permutation.size() : m * k;
}

std::string_view TransformDescriptor::name() const {
  switch (kind) {
    case TransformKind::Identity: return "identity";
    case TransformKind::Permutation: return "permutation";
    case TransformKind::BlockFourier: return "block-fourier";
  }
  return "identity";
}

std::size_t BlockDiagonalization::dimension() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  return n;
}

std::vector<std::size_t> BlockDiagonalization::block_sizes() const {
  std::vector<std::size_t> s;
  s.reserve(blocks.size());
  for (const auto& b : blocks) s.push_back(b.rows());
  return s;
}

Route parse_route(std::string_view name) {
  if (name == "auto") return Route::Auto;
  if (name == "permutation") return Route::Permutation;
  if (name == "block-fourier") return Route::BlockFourier;
  if (name == "dense") return Route::Dense;
  throw GaborError(ErrorCode::InvalidArgument, "unknown route '" + std::string(name) + "'");
}

std::string_view to_string(Route route) {
  switch (route) {
    case Route::Auto: return "auto";
    case Route::Permutation: return "permutation";
    case Route::BlockFourier: return "block-fourier";
    case Route::Dense: return "dense";
  }
  return "auto";
}

namespace {

ComplexVector block_fourier_apply(std::size_t m, std::size_t k, std::span<const Complex> x, int sign) {
  ComplexVector out(m * k);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  std::vector<Complex> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = root_of_unity(m, sign * static_cast<long long>(i));
  for (std::size_t a = 0; a < m; ++a) {
    Complex* dst = out.data() + a * k;
    for (std::size_t b = 0; b < m; ++b) {
      const Complex c = w[(a * b) % m] * scale;
      const Complex* src = x.data() + b * k;
      for (std::size_t t = 0; t < k; ++t) dst[t] += c * src[t];
    }
  }
  return out;
}

void require_length(const TransformDescriptor& t, std::span<const Complex> x) {
  if (x.size() != t.dimension()) throw GaborError(ErrorCode::InvalidDimension, "vector length differs from transform size");
}

std::size_t resolve_threads(std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

}  // namespace

ComplexVector apply_transform(const TransformDescriptor& t, std::span<const Complex> x) {
  require_length(t, x);
  switch (t.kind) {
    case TransformKind::Identity: return {x.begin(), x.end()};
    case TransformKind::Permutation: {
      ComplexVector y(x.size());
      for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[t.permutation[i]];
      return y;
    }
    case TransformKind::BlockFourier: return block_fourier_apply(t.m, t.k, x, +1);
  }
  return {x.begin(), x.end()};
}

ComplexVector apply_transform_adjoint(const TransformDescriptor& t, std::span<const Complex> x) {
  require_length(t, x);
  switch (t.kind) {
    case TransformKind::Identity: return {x.begin(), x.end()};
    case TransformKind::Permutation: {
      ComplexVector y(x.size());
      for (std::size_t i = 0; i < y.size(); ++i) y[t.permutation[i]] = x[i];
      return y;
    }
    case TransformKind::BlockFourier: return block_fourier_apply(t.m, t.k, x, -1);
  }
  return {x.begin(), x.end()};
}

ComplexMatrix conjugate_transform(const TransformDescriptor& t, const ComplexMatrix& a) {
  const std::size_t n = t.dimension();
  if (a.rows() != n || a.cols() != n) throw GaborError(ErrorCode::InvalidDimension, "matrix size differs from transform size");
  // C = U A (columns), then U A U* = (U C*)*.
  std::vector<ComplexVector> ua(n);
  for (std::size_t j = 0; j < n; ++j) ua[j] = apply_transform(t, a.column(j));
  std::vector<ComplexVector> uc(n);  // columns of U C*
  for (std::size_t i = 0; i < n; ++i) {
    ComplexVector c_star_col(n);
    for (std::size_t j = 0; j < n; ++j) c_star_col[j] = std::conj(ua[j][i]);
    uc[i] = apply_transform(t, c_star_col);
  }
  return ComplexMatrix::generate(n, n, [&](std::size_t i, std::size_t j) { return std::conj(uc[i][j]); });
}

ComplexMatrix realize(const TransformDescriptor& t) {
  switch (t.kind) {
    case TransformKind::Identity: return ComplexMatrix::identity(t.dimension());
    case TransformKind::Permutation: {
      const auto& p = t.permutation;
      return ComplexMatrix::generate(p.size(), p.size(), [&](std::size_t i, std::size_t j) {
        return p[i] == j ? Complex{1.0} : Complex{};
      });
    }
    case TransformKind::BlockFourier:
      return kronecker(dft_matrix(t.m).adjoint(), ComplexMatrix::identity(t.k));
  }
  return ComplexMatrix::identity(t.dimension());
}

ComplexMatrix assemble_block_diagonal(std::span<const ComplexMatrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  std::vector<Complex> e(n * n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) e[(off + i) * n + off + j] = b(i, j);
    off += b.rows();
  }
  return ComplexMatrix(n, n, std::move(e));
}

ComplexMatrix reassemble(const BlockDiagonalization& bd) {
  const auto u = realize(bd.transform);
  return u.adjoint() * assemble_block_diagonal(bd.blocks) * u;
}

ComplexVector apply_blocks(const BlockDiagonalization& bd, std::span<const Complex> y) {
  if (y.size() != bd.dimension()) throw GaborError(ErrorCode::InvalidDimension, "vector length differs from block sum");
  ComplexVector out(y.size());
  std::size_t off = 0;
  for (const auto& b : bd.blocks) {
    const auto part = b.apply(y.subspan(off, b.cols()));
    std::copy(part.begin(), part.end(), out.begin() + static_cast<std::ptrdiff_t>(off));
    off += b.rows();
  }
  return out;
}

std::size_t gcd_block_count(const DiagonalSupport& support) {
  if (!support.contains(0))
    throw GaborError(ErrorCode::ContractViolation, "main diagonal is not in the support");
  std::size_t g = support.n;
  for (auto d : support.residues) g = std::gcd(g, d);
  return g;
}

BlockDiagonalization permutation_blockdiag(const ComplexMatrix& a, std::size_t ell, const ToleranceConfig& cfg) {
  if (!a.is_square() || a.rows() == 0) throw GaborError(ErrorCode::InvalidDimension, "permutation route needs a square matrix");
  const std::size_t n = a.rows();
  if (ell == 0 || n % ell != 0) throw GaborError(ErrorCode::InvalidArgument, "block count must divide N");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i % ell != j % ell && std::abs(a(i, j)) > cfg.zero_tol)
        throw GaborError(ErrorCode::NoBlockStructure,
                         "entry (" + std::to_string(i) + "," + std::to_string(j) + ") links different classes mod " +
                             std::to_string(ell));
  const std::size_t size = n / ell;
  BlockDiagonalization bd;
  bd.transform = TransformDescriptor::interlaced(n, ell);
  bd.ell = ell;
  bd.blocks.reserve(ell);
  for (std::size_t s = 0; s < ell; ++s)
    bd.blocks.push_back(ComplexMatrix::generate(size, size, [&](std::size_t i, std::size_t j) {
      return a(i * ell + s, j * ell + s);
    }));
  return bd;
}

BlockDiagonalization permutation_blockdiag(const ComplexMatrix& a, const ToleranceConfig& cfg) {
  const std::size_t ell = gcd_block_count(diagonal_support(a, cfg));
  if (ell == 1) throw GaborError(ErrorCode::NoBlockStructure, "diagonal support has gcd 1 with N");
  return permutation_blockdiag(a, ell, cfg);
}

BlockDiagonalization block_fourier_blockdiag(const ComplexMatrix& a, std::size_t m, std::size_t k,
                                             const ToleranceConfig& cfg) {
  if (!a.is_square() || m == 0 || k == 0 || m * k != a.rows())
    throw GaborError(ErrorCode::InvalidArgument, "block Fourier route needs m*k equal to the matrix size");
  if (!is_block_circulant(a, k, cfg))
    throw GaborError(ErrorCode::NotBlockCirculant, "matrix is not block-circulant with " + std::to_string(k) + "x" +
                                                       std::to_string(k) + " blocks");
  std::vector<Complex> w(m);
  for (std::size_t i = 0; i < m; ++i) w[i] = root_of_unity(m, static_cast<long long>(i));
  BlockDiagonalization bd;
  bd.transform = TransformDescriptor::block_fourier(m, k);
  bd.ell = m;
  bd.blocks.reserve(m);
  for (std::size_t ell = 0; ell < m; ++ell) {
    std::vector<Complex> d(k * k);
    for (std::size_t j = 0; j < m; ++j) {
      const Complex c = w[(j * ell) % m];
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t s = 0; s < k; ++s) d[r * k + s] += c * a(j * k + r, s);
    }
    bd.blocks.emplace_back(k, k, std::move(d));
  }
  return bd;
}

BlockDiagonalization block_equivalence_route(const GaborSystem& sys, const ToleranceConfig& cfg, Route route) {
  return block_equivalence_route(sys, frame_operator_factored(sys), cfg, route);
}

BlockDiagonalization block_equivalence_route(const GaborSystem& sys, const ComplexMatrix& s,
                                             const ToleranceConfig& cfg, Route route) {
  const std::size_t n = sys.dimension();
  if (s.rows() != n || s.cols() != n) throw GaborError(ErrorCode::InvalidDimension, "frame operator size mismatch");
  const auto l_info = detect_subgroup(sys.modulations(), n);
  const auto k_info = detect_subgroup(sys.translations(), n);

  auto single_block = [&] {
    BlockDiagonalization bd;
    bd.transform = TransformDescriptor::identity(n);
    bd.blocks = {s};
    bd.ell = 1;
    return bd;
  };

  switch (route) {
    case Route::Dense: return single_block();
    case Route::Permutation:
      if (l_info.is_subgroup && l_info.order > 1) return permutation_blockdiag(s, l_info.order, cfg);
      return permutation_blockdiag(s, cfg);
    case Route::BlockFourier:
      if (!k_info.is_subgroup)
        throw GaborError(ErrorCode::NotBlockCirculant, "translation set is not a subgroup of Z_N");
      return block_fourier_blockdiag(s, k_info.order, n / k_info.order, cfg);
    case Route::Auto: break;
  }

  if (l_info.is_subgroup && l_info.order == n) {
    BlockDiagonalization bd;
    bd.transform = TransformDescriptor::identity(n);
    bd.ell = n;
    for (std::size_t i = 0; i < n; ++i) bd.blocks.emplace_back(1, 1, std::vector<Complex>{s(i, i)});
    return bd;
  }
  if (l_info.is_subgroup && l_info.order > 1) return permutation_blockdiag(s, l_info.order, cfg);
  if (k_info.is_subgroup && k_info.order > 1) return block_fourier_blockdiag(s, k_info.order, n / k_info.order, cfg);
  const std::size_t ell = gcd_block_count(diagonal_support(s, cfg));
  if (ell > 1) return permutation_blockdiag(s, ell, cfg);
  return single_block();
}

BlockDiagonalization invert_blockdiag(const BlockDiagonalization& bd, const ToleranceConfig& cfg, std::size_t threads) {
  const std::size_t count = bd.blocks.size();
  std::vector<ComplexMatrix> inv(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t b = next++; b < count; b = next++) {
      try {
        inv[b] = invert_square(bd.blocks[b], cfg);
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::min(resolve_threads(threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  for (std::size_t b = 0; b < count; ++b) {
    if (!errors[b]) continue;
    try {
      std::rethrow_exception(errors[b]);
    } catch (const GaborError& e) {
      if (e.code() == ErrorCode::NotInvertible)
        throw NotAFrameError("block " + std::to_string(b) + " is singular", b);
      throw;
    }
  }

  BlockDiagonalization out;
  out.transform = bd.transform;
  out.blocks = std::move(inv);
  out.ell = bd.ell;
  return out;
}

}  // namespace gabor
