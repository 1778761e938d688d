#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subres/poly.hpp"

namespace subres {

/* Multi-index delta = (delta_1,...,delta_n) over the non-distinguished
 * polynomials of a system. Componentwise non-negative. */
struct DeltaIndex {
  std::vector<int> v;

  DeltaIndex() = default;
  explicit DeltaIndex(std::vector<int> comps);

  std::size_t size() const { return v.size(); }
  int operator[](std::size_t i) const { return v[i]; }
  int sum() const;
  bool all_zero() const;
  /* true iff every component is >= 1 */
  bool interior() const;

  DeltaIndex operator+(const DeltaIndex& o) const;
  /* delta + e_i with e_0 = 0 (i == 0 leaves the index unchanged). */
  DeltaIndex plus_unit(std::size_t i) const;
  DeltaIndex minus_unit(std::size_t i) const;

  bool operator==(const DeltaIndex& o) const { return v == o.v; }
  bool operator!=(const DeltaIndex& o) const { return v != o.v; }
  bool operator<(const DeltaIndex& o) const { return v < o.v; }

  /* "(a,b,c)" */
  std::string str() const;
};

/* Constant index (k,...,k) of length n. */
DeltaIndex constant_index(std::size_t n, int k);

/* System F = (F_0,...,F_n), n >= 1, every member nonzero. F_0 is the
 * distinguished polynomial the subresultants live against. */
class PolySystem {
  std::vector<Poly> f_;
  std::vector<std::size_t> d_;

 public:
  explicit PolySystem(std::vector<Poly> polys);

  /* Additionally enforces the standing shape of the main identities:
   * deg F_0 minimal among all degrees and F_0 monic. */
  static PolySystem standard(std::vector<Poly> polys);

  std::size_t n() const { return f_.size() - 1; }
  const Poly& poly(std::size_t i) const { return f_[i]; }
  const std::vector<Poly>& polys() const { return f_; }
  std::size_t deg(std::size_t i) const { return d_[i]; }
  const std::vector<std::size_t>& degrees() const { return d_; }

  bool is_standard() const;
};

/* All delta with |delta| <= d0, n components: grade |delta| descending,
 * lexicographically descending within a grade. */
std::vector<DeltaIndex> enumerate_index_set(std::size_t d0, std::size_t n);

/* Number of columns of the coefficient matrix of the shifted families
 * x^(delta_i - 1) F_i ... x^0 F_i over i = 1..n (blocks with delta_i == 0
 * are absent): max over contributing i of (delta_i - 1 + d_i) + 1, and 0
 * when delta == 0. */
std::size_t col_count(const PolySystem& f, const DeltaIndex& delta);

/* Block size of the F_0 shifts: c(delta) - d0 when c(delta) >= d0, else 1.
 * The all-zero delta takes the else branch (c == 0), so R = F_0. */
std::size_t delta0(const PolySystem& f, const DeltaIndex& delta);

struct SubresultantValue {
  Poly r_poly;      /* R_delta, degree <= d0 - |delta| */
  Int principal;    /* r_delta = coefficient of x^(d0 - |delta|) */
  std::size_t d0_block;  /* the delta_0 used */
};

/* delta-subresultant R_delta(F) = dp of the coefficient matrix of
 *   x^(delta_0 - 1) F_0,...,F_0, x^(delta_1 - 1) F_1,...,F_1, ...
 * Requires |delta| <= deg F_0 and delta.size() == n. */
SubresultantValue subresultant(const PolySystem& f, const DeltaIndex& delta);

/* Two-polynomial k-subresultant, deg F_0 = d0 <= d1 = deg F_1:
 *   0 < k <= d0: dp of (x^(d1-(d0-k)-1) F_0,...,F_0, x^(k-1) F_1,...,F_1)
 *   k == 0 (needs d0 != d1): lc(F_0)^(d1-d0-1) * F_0.
 * Coincides with subresultant() on the 1-index system (F_0, F_1). */
SubresultantValue subres_two(const Poly& f0, const Poly& f1, std::size_t k);

/* R_delta rewritten inside the ideal of the system:
 *   R_delta = sum_i sum_{j < block_i} coeff[i][j] * x^j * F_i
 * with block_0 = delta_0 and block_i = delta_i. coeff[i][j] indexes the
 * shift x^j (ascending). For i >= 1 with delta_i > 0 the top coefficient
 * satisfies coeff[i][delta_i - 1] = (-1)^(sigma_i + 1) r_(delta - e_i),
 * sigma_i = delta_i + ... + delta_n. */
struct IdealDecomposition {
  std::size_t d0_block = 0;
  std::vector<std::vector<Int>> coeff;
};

IdealDecomposition ideal_membership_decompose(const PolySystem& f, const DeltaIndex& delta);

}  // namespace subres
