#pragma once

#include <cstdint>
#include <vector>

#include "subres/subresultant.hpp"

namespace subres {

/* SplitMix64 (Steele/Lea/Vigna). Chosen over std::mt19937_64 +
 * uniform_int_distribution because the standard leaves the distribution
 * implementation-defined; this keeps seeds portable across toolchains. */
class SplitMix64 {
  std::uint64_t s_;

 public:
  explicit SplitMix64(std::uint64_t seed) : s_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (s_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d649bb133111ebULL;
    return z ^ (z >> 31);
  }

  /* Uniform in [lo, hi] by modulo; the bias is irrelevant here and the
   * result depends only on the seed. */
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

/* Random polynomial of exact degree d: coefficients uniform in
 * [-bound, bound], leading coefficient uniform in [1, bound]. */
Poly random_poly(SplitMix64& rng, std::size_t d, long bound = 99);

/* Random standard system with the given exact degrees (d[0] minimal
 * required): F_0 monic, other coefficients as in random_poly. */
PolySystem random_system(const std::vector<std::size_t>& d, std::uint64_t seed,
                         long bound = 99);

}  // namespace subres
