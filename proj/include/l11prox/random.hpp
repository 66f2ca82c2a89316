#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "l11prox/matrix.hpp"

namespace l11prox {

/// Seedable generator with a fully specified output stream: std::mt19937_64
/// (whose sequence the standard pins down) with hand-written conversions, so
/// a seed reproduces the same draws on every conforming toolchain.
///
///   uniform01   = (next() >> 11) * 2^-53, in [0, 1)
///   uniform(a,b)= a + (b - a) * uniform01
///   gaussian    = Box-Muller on two uniform01 draws u1, u2:
///                 sqrt(-2 ln(1 - u1)) * cos(2 pi u2); the sine half is
///                 discarded.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform01();
  double uniform(double lo, double hi);
  double gaussian();
  /// Uniform integer in [lo, hi].
  std::size_t index(std::size_t lo, std::size_t hi);

 private:
  std::mt19937_64 engine_;
};

enum class Distribution { kGaussian, kUniform };

/// Throws std::invalid_argument for anything other than "gaussian" or "uniform".
Distribution parse_distribution(std::string_view name);

/// n x m matrix with i.i.d. entries: standard normal, or uniform on [-1, 1].
/// Entries are drawn column by column.
Matrix random_matrix(std::size_t n, std::size_t m, Distribution dist, Rng& rng);

/// Adds a deterministic offset of at most `scale` to every entry, growing
/// with its linear index and following the entry's sign, to break ties among
/// magnitudes.
void add_index_jitter(Matrix& x, double scale = 1e-7);

}  // namespace l11prox
