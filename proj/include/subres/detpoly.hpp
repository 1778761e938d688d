#pragma once

#include <cstddef>
#include <vector>

#include "subres/poly.hpp"

namespace subres {

/* Dense row-major integer matrix. */
class CoeffMatrix {
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;

 public:
  CoeffMatrix() = default;
  CoeffMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  /* Submatrix keeping all rows and the listed columns, in order. */
  CoeffMatrix select_columns(const std::vector<std::size_t>& cols) const;

  bool operator==(const CoeffMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
};

/* Exact determinant by fraction-free (Bareiss) elimination with row
 * pivoting; every division is exact. Throws if the matrix is not square. */
Int det_bareiss(const CoeffMatrix& m);

/* Independent determinant oracle: recursive cofactor expansion along the
 * first row. Rejects matrices larger than max_size (cost is factorial). */
Int det_cofactor(const CoeffMatrix& m, std::size_t max_size = 10);

/* Determinant polynomial of a p x q matrix M with p <= q:
 *   dp(M) = sum_{j=0}^{q-p} det[M_1 ... M_{p-1} M_{q-j}] x^j
 * where M_k is the k-th column (1-based). Throws if p > q. */
Poly dp(const CoeffMatrix& m);

/* Principal coefficient of dp(M): the determinant of the leading p x p
 * block, i.e. the coefficient of x^(q-p). May be zero while dp(M) is not. */
Int pcdp(const CoeffMatrix& m);

/* Coefficient matrix of a nonzero polynomial family (P_1,...,P_t):
 * t x (m+1) with m = max degree; row i lists P_i's coefficients from x^m
 * down to x^0. Throws on an empty family or a zero member. */
CoeffMatrix build_cm(const std::vector<Poly>& polys);

/* dp/pcdp composed over build_cm. dp_list requires t <= m+1. */
Poly dp_list(const std::vector<Poly>& polys);
Int pcdp_list(const std::vector<Poly>& polys);

/* Expresses dp(P_1,...,P_t) = sum_i c_i P_i and returns (c_1,...,c_t):
 *   c_i = 1                      if t == 1,
 *   c_i = 0                      if every other degree is < deg P_i,
 *   c_i = (-1)^(t+i) pcdp(P_1,...,P_{i-1},P_{i+1},...,P_t)  otherwise
 * (i 1-based). Same preconditions as dp_list. */
std::vector<Int> dp_linear_combination(const std::vector<Poly>& polys);

/* Verdict of the two-block determinant-polynomial identity on a concrete
 * pair of families P (t1 rows, max degree m1) and Q (t2 rows, max degree
 * m2 <= m1 - t1 + 1):
 *   case 1 (m2 == m1-t1+1):                 dp(P,Q) == dp(dp(P), Q)
 *   case 2 (m2 == m1-t1, or t2 == 1 below): dp(P,Q) == pcdp(P) * dp(Q)
 *   case 3 (m2 <  m1-t1 and t2 >= 2):       dp(P,Q) == 0
 * `degenerate` marks case-1 instances where dp(P) lost degree (its shape
 * no longer matches the nested evaluation; equality is then not implied). */
struct BlockLemmaReport {
  int case_tag = 0;
  Poly lhs, rhs;
  bool equal = false;
  bool degenerate = false;
};

/* Throws if the hypotheses (t1,t2 >= 1, m1 >= m2, t1+t2 <= m1+1,
 * m2 <= m1-t1+1) fail, or if case 1 hits dp(P) == 0. */
BlockLemmaReport check_block_lemma(const std::vector<Poly>& p,
                                   const std::vector<Poly>& q);

}  // namespace subres
