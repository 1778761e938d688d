#include "subres/detpoly.hpp"

#include <stdexcept>
#include <utility>

namespace subres {

CoeffMatrix CoeffMatrix::select_columns(const std::vector<std::size_t>& cols) const {
  CoeffMatrix s(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] >= cols_) throw std::out_of_range("column index out of range");
      s.at(i, j) = at(i, cols[j]);
    }
  return s;
}

Int det_bareiss(const CoeffMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;  /* empty product */

  CoeffMatrix w = m;
  int sign = 1;
  Int prev = 1;  /* pivot of the previous step; divisions by it are exact */
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (w.at(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && w.at(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = k; j < n; ++j) std::swap(w.at(k, j), w.at(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
      w.at(i, k) = 0;
    }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

namespace {

Int det_cofactor_rec(const CoeffMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
  if (cols.size() == 1) return m.at(row, cols[0]);
  Int acc = 0;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (m.at(row, cols[j]) == 0) continue;
    std::size_t cj = cols[j];
    cols.erase(cols.begin() + j);
    Int minor = det_cofactor_rec(m, cols, row + 1);
    cols.insert(cols.begin() + j, cj);
    if (minor == 0) continue;
    Int term = m.at(row, cj) * minor;
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

}  // namespace

Int det_cofactor(const CoeffMatrix& m, std::size_t max_size) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() > max_size) throw std::invalid_argument("cofactor expansion capped at max_size");
  if (m.rows() == 0) return 1;
  std::vector<std::size_t> cols(m.cols());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
  return det_cofactor_rec(m, cols, 0);
}

Poly dp(const CoeffMatrix& m) {
  const std::size_t p = m.rows(), q = m.cols();
  if (p == 0) throw std::invalid_argument("dp of empty matrix");
  if (p > q) throw std::invalid_argument("dp requires at least as many columns as rows");

  std::vector<std::size_t> cols(p);
  for (std::size_t k = 0; k + 1 < p; ++k) cols[k] = k;

  std::vector<Int> c(q - p + 1);
  for (std::size_t j = 0; j <= q - p; ++j) {
    cols[p - 1] = q - 1 - j;  /* column q-j, 1-based */
    c[j] = det_bareiss(m.select_columns(cols));
  }
  return Poly(std::move(c));
}

Int pcdp(const CoeffMatrix& m) {
  const std::size_t p = m.rows(), q = m.cols();
  if (p == 0) throw std::invalid_argument("pcdp of empty matrix");
  if (p > q) throw std::invalid_argument("pcdp requires at least as many columns as rows");
  std::vector<std::size_t> cols(p);
  for (std::size_t k = 0; k < p; ++k) cols[k] = k;
  return det_bareiss(m.select_columns(cols));
}

CoeffMatrix build_cm(const std::vector<Poly>& polys) {
  if (polys.empty()) throw std::invalid_argument("coefficient matrix of empty family");
  std::size_t m = 0;
  for (const Poly& p : polys) {
    if (p.is_zero()) throw std::invalid_argument("coefficient matrix of family with zero member");
    m = std::max(m, p.degree());
  }
  CoeffMatrix cm(polys.size(), m + 1);
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j <= m; ++j) cm.at(i, j) = polys[i].coeff(m - j);
  return cm;
}

Poly dp_list(const std::vector<Poly>& polys) { return dp(build_cm(polys)); }

Int pcdp_list(const std::vector<Poly>& polys) { return pcdp(build_cm(polys)); }

std::vector<Int> dp_linear_combination(const std::vector<Poly>& polys) {
  const std::size_t t = polys.size();
  if (t == 0) throw std::invalid_argument("linear combination over empty family");
  if (t == 1) return {Int(1)};
  if (t > build_cm(polys).cols())
    throw std::invalid_argument("linear combination requires t <= m+1");

  std::vector<Int> c(t);
  std::vector<Poly> rest;
  rest.reserve(t - 1);
  for (std::size_t i = 0; i < t; ++i) {
    bool others_below = true;
    for (std::size_t j = 0; j < t && others_below; ++j)
      if (j != i && polys[j].degree() >= polys[i].degree()) others_below = false;
    if (others_below) {
      c[i] = 0;
      continue;
    }
    rest.clear();
    for (std::size_t j = 0; j < t; ++j)
      if (j != i) rest.push_back(polys[j]);
    Int v = pcdp_list(rest);
    /* sign (-1)^(t+i) with i 1-based */
    c[i] = ((t + i + 1) % 2 == 0) ? v : Int(-v);
  }
  return c;
}

BlockLemmaReport check_block_lemma(const std::vector<Poly>& p, const std::vector<Poly>& q) {
  const std::size_t t1 = p.size(), t2 = q.size();
  if (t1 == 0 || t2 == 0) throw std::invalid_argument("block lemma needs two nonempty families");
  CoeffMatrix cp = build_cm(p), cq = build_cm(q);
  const std::size_t m1 = cp.cols() - 1, m2 = cq.cols() - 1;
  if (m2 > m1) throw std::invalid_argument("block lemma requires m1 >= m2");
  if (t1 + t2 > m1 + 1) throw std::invalid_argument("block lemma requires t1+t2 <= m1+1");
  if (m2 + t1 > m1 + 1) throw std::invalid_argument("block lemma requires m2 <= m1-t1+1");

  std::vector<Poly> all(p);
  all.insert(all.end(), q.begin(), q.end());

  BlockLemmaReport rep;
  rep.lhs = dp_list(all);
  if (m2 == m1 - t1 + 1) {
    rep.case_tag = 1;
    Poly u = dp_list(p);
    if (u.is_zero()) throw std::domain_error("block lemma case 1: dp of first block vanished");
    rep.degenerate = u.degree() < m2;
    std::vector<Poly> nested;
    nested.reserve(1 + t2);
    nested.push_back(std::move(u));
    nested.insert(nested.end(), q.begin(), q.end());
    rep.rhs = dp_list(nested);
  } else if (m2 == m1 - t1 || t2 == 1) {
    rep.case_tag = 2;
    rep.rhs = dp_list(q).scaled(pcdp_list(p));
  } else {
    rep.case_tag = 3;
    rep.rhs = Poly();
  }
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace subres
