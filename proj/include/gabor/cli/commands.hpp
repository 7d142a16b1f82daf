#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gabor/blockdiag.hpp"
#include "gabor/windows.hpp"

namespace gabor::cli {

/// Stable exit codes for scripting.
inline constexpr int kExitFrame = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNotAFrame = 2;
inline constexpr int kExitResidual = 3;

inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct CommonOptions {
  std::string input;
  std::string output;
  std::uint64_t seed = kDefaultSeed;
  double zero_tol = 1e-10;
  Route route = Route::Auto;
  std::string format = "json";
  std::size_t threads = 1;  // from GABOR_BLOCKS_THREADS, 0 = auto

  ToleranceConfig tolerance() const;
};

struct AnalyzeOptions {
  std::string matrix_out;  // optional CSV dump of S
};

struct WindowOptions {
  std::size_t n = 0;
  std::size_t p = 0;
  std::optional<std::size_t> r;  // defaults to N (L = Z_N)
  FamilyStyle family = FamilyStyle::Fourier;
};

struct ReconstructOptions {
  std::string signals;     // JSON-lines file; random signals when empty
  std::size_t count = 4;   // random signals to draw when no file is given
  double threshold = 1e-8; // relative residual above which the exit code is 3
  bool skip_oracle = false;
};

struct BenchOptions {
  std::vector<std::size_t> sizes{64, 256, 1024};
  std::vector<Route> routes{Route::Permutation, Route::BlockFourier, Route::Dense};
  std::size_t repetitions = 5;
};

/// Residue set given on the command line (zeros, tile).
struct SetOptions {
  std::size_t n = 0;
  std::vector<std::int64_t> set;
};

int cmd_analyze(const CommonOptions& common, const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_window(const CommonOptions& common, const WindowOptions& opts, std::ostream& out, std::ostream& err);
int cmd_reconstruct(const CommonOptions& common, const ReconstructOptions& opts, std::ostream& out, std::ostream& err);
int cmd_bench(const CommonOptions& common, const BenchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_blocks(const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_zeros(const CommonOptions& common, const SetOptions& opts, std::ostream& out, std::ostream& err);
int cmd_tile(const CommonOptions& common, const SetOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gabor::cli
