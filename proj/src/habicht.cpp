#include "subres/habicht.hpp"

#include <stdexcept>

namespace subres {

HabichtParams derive_params(const std::vector<std::size_t>& d, const DeltaIndex& w0,
                            std::size_t k, std::size_t i) {
  if (d.size() != w0.size() + 1)
    throw std::invalid_argument("degree vector must have n+1 entries");
  if (k < 1) throw std::invalid_argument("step width k must be >= 1");
  if (i > w0.size()) throw std::invalid_argument("unit index i out of range");

  HabichtParams p;
  p.d = d;
  p.w0 = w0;
  p.k = k;
  p.i = i;
  p.v = constant_index(w0.size(), static_cast<int>(k)).plus_unit(i);
  p.u = w0 + p.v;
  /* |v + e_i| + k - 2; i == 0 adds nothing twice */
  p.epsilon = static_cast<unsigned long>(p.v.plus_unit(i).sum()) + k - 2;
  if (static_cast<std::size_t>(p.u.sum()) > d[0])
    throw std::invalid_argument("target index weight exceeds deg F_0");
  return p;
}

Poly identity_lhs(const PolySystem& f, const HabichtParams& p) {
  Int r = subresultant(f, p.w0).principal;
  return subresultant(f, p.u).r_poly.scaled(int_pow(r, p.epsilon));
}

std::vector<Poly> inner_cluster(const PolySystem& f, const DeltaIndex& w0) {
  std::vector<Poly> g;
  g.reserve(f.n() + 1);
  for (std::size_t j = 0; j <= f.n(); ++j)
    g.push_back(subresultant(f, w0.plus_unit(j)).r_poly);
  return g;
}

namespace {

/* Generic degree of cluster member j: d0 - |w0| for j == 0, one less
 * otherwise. Returns the positions that miss it. */
std::vector<std::size_t> cluster_degree_drops(const std::vector<Poly>& g,
                                              const PolySystem& f, const DeltaIndex& w0) {
  const std::size_t top = f.deg(0) - static_cast<std::size_t>(w0.sum());
  std::vector<std::size_t> drops;
  for (std::size_t j = 0; j < g.size(); ++j) {
    const std::size_t want = j == 0 ? top : top - 1;
    if (g[j].is_zero() || g[j].degree() != want) drops.push_back(j);
  }
  return drops;
}

}  // namespace

Poly identity_rhs(const PolySystem& f, const HabichtParams& p) {
  std::vector<Poly> g = inner_cluster(f, p.w0);
  if (!cluster_degree_drops(g, f, p.w0).empty())
    throw std::domain_error("inner subresultant lost its generic degree");
  return subresultant(PolySystem(std::move(g)), p.v).r_poly;
}

VerificationReport verify_identity(const PolySystem& f, const HabichtParams& p) {
  if (!f.is_standard())
    throw std::invalid_argument("system must be standard (deg F_0 minimal, F_0 monic)");
  if (p.d != f.degrees()) throw std::invalid_argument("params derived for different degrees");

  VerificationReport rep;
  rep.params = p;
  std::vector<Poly> g = inner_cluster(f, p.w0);
  rep.degree_drops = cluster_degree_drops(g, f, p.w0);
  if (!rep.degree_drops.empty()) return rep;

  rep.lhs = identity_lhs(f, p);
  rep.rhs = subresultant(PolySystem(std::move(g)), p.v).r_poly;
  rep.equal = *rep.lhs == *rep.rhs;
  return rep;
}

std::vector<VerificationReport> verify_induction_equations(const PolySystem& f,
                                                           const DeltaIndex& w0,
                                                           std::size_t j) {
  std::vector<VerificationReport> reps;
  reps.reserve(f.n() + 1);
  for (std::size_t i = 0; i <= f.n(); ++i)
    reps.push_back(verify_identity(f, derive_params(f.degrees(), w0, j, i)));
  return reps;
}

}  // namespace subres
