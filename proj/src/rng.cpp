#include "subres/rng.hpp"

#include <stdexcept>

namespace subres {

Poly random_poly(SplitMix64& rng, std::size_t d, long bound) {
  if (bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
  std::vector<Int> c(d + 1);
  for (std::size_t j = 0; j < d; ++j) c[j] = rng.range(-bound, bound);
  c[d] = rng.range(1, bound);
  return Poly(std::move(c));
}

PolySystem random_system(const std::vector<std::size_t>& d, std::uint64_t seed, long bound) {
  if (d.size() < 2) throw std::invalid_argument("system needs at least two degrees");
  SplitMix64 rng(seed);
  std::vector<Poly> polys;
  polys.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    Poly p = random_poly(rng, d[i], bound);
    if (i == 0) {
      std::vector<Int> c = p.coeffs();
      c.back() = 1;
      p = Poly(std::move(c));
    }
    polys.push_back(std::move(p));
  }
  return PolySystem::standard(std::move(polys));
}

}  // namespace subres
