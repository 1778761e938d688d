#include <doctest.h>

#include <stdexcept>

#include "subres/detpoly.hpp"
#include "subres/rng.hpp"

using namespace subres;

namespace {

CoeffMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, long bound = 99) {
  CoeffMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.range(-bound, bound);
  return m;
}

/* family of t nonzero polynomials whose maximum degree is exactly m */
std::vector<Poly> random_family(SplitMix64& rng, std::size_t t, std::size_t m) {
  std::vector<Poly> fam;
  fam.push_back(random_poly(rng, m));
  for (std::size_t i = 1; i < t; ++i)
    fam.push_back(random_poly(rng, static_cast<std::size_t>(rng.range(0, static_cast<long>(m)))));
  return fam;
}

Poly sum_scaled(const std::vector<Poly>& fam, const std::vector<Int>& c) {
  Poly acc;
  for (std::size_t i = 0; i < fam.size(); ++i) acc = acc + fam[i].scaled(c[i]);
  return acc;
}

}  // namespace

TEST_CASE("determinants: fixed small cases") {
  CoeffMatrix m2(2, 2);
  m2.at(0, 0) = 3; m2.at(0, 1) = 7;
  m2.at(1, 0) = 1; m2.at(1, 1) = 5;
  CHECK(det_bareiss(m2) == 8);
  CHECK(det_cofactor(m2) == 8);

  CoeffMatrix id(4, 4);
  for (std::size_t i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(det_bareiss(id) == 1);

  /* duplicated rows are singular and exercise the pivot search */
  CoeffMatrix sing(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    sing.at(0, j) = Int(static_cast<long>(j) + 1);
    sing.at(2, j) = Int(static_cast<long>(j) + 1);
    sing.at(1, j) = Int(2 * static_cast<long>(j));
  }
  CHECK(det_bareiss(sing) == 0);
  CHECK(det_cofactor(sing) == 0);

  CHECK(det_bareiss(CoeffMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det_bareiss(CoeffMatrix(2, 3)), std::invalid_argument);
  SplitMix64 rng(0);
  CHECK_THROWS_AS(det_cofactor(random_matrix(rng, 11, 11)), std::invalid_argument);
}

TEST_CASE("zero pivot with nonzero determinant needs a row swap") {
  CoeffMatrix m(3, 3);
  m.at(0, 0) = 0; m.at(0, 1) = 2; m.at(0, 2) = 1;
  m.at(1, 0) = 1; m.at(1, 1) = 0; m.at(1, 2) = 4;
  m.at(2, 0) = 5; m.at(2, 1) = 6; m.at(2, 2) = 0;
  CHECK(det_bareiss(m) == det_cofactor(m));
  CHECK(det_bareiss(m) == 46);
}

TEST_CASE("bareiss agrees with cofactor expansion on seeded matrices") {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.range(1, 8));
    CoeffMatrix m = random_matrix(rng, n, n);
    CHECK(det_bareiss(m) == det_cofactor(m));
  }
}

TEST_CASE("dp of a one-row matrix rebuilds the polynomial") {
  SplitMix64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    Poly p = random_poly(rng, static_cast<std::size_t>(rng.range(0, 7)));
    CHECK(dp_list({p}) == p);
  }
}

TEST_CASE("dp of a square matrix is the constant det") {
  SplitMix64 rng(5);
  CoeffMatrix m = random_matrix(rng, 4, 4);
  Poly d = dp(m);
  CHECK(d == Poly::constant(det_bareiss(m)));
}

TEST_CASE("dp coefficients match the defining minors") {
  /* 3x5 with entry (r,c) = r+c (1-based): every minor is singular */
  CoeffMatrix flat(3, 5);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 5; ++c) flat.at(r, c) = Int(static_cast<long>(r + c) + 2);

  SplitMix64 rng(6);
  CoeffMatrix rnd = random_matrix(rng, 3, 5);

  for (const CoeffMatrix& m : {flat, rnd}) {
    Poly d = dp(m);
    for (std::size_t j = 0; j <= 2; ++j) {
      CoeffMatrix minor = m.select_columns({0, 1, 4 - j});
      CHECK(d.coeff(j) == det_cofactor(minor));
    }
  }
  CHECK(dp(flat).is_zero());
}

TEST_CASE("dp degree bound and principal coefficient") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t p = static_cast<std::size_t>(rng.range(1, 5));
    std::size_t q = p + static_cast<std::size_t>(rng.range(0, 4));
    CoeffMatrix m = random_matrix(rng, p, q);
    Poly d = dp(m);
    if (!d.is_zero()) CHECK(d.degree() <= q - p);
    CHECK(pcdp(m) == d.coeff(q - p));
  }
}

TEST_CASE("swapping two of the first p-1 columns negates every coefficient") {
  SplitMix64 rng(8);
  CoeffMatrix m = random_matrix(rng, 4, 7);
  CoeffMatrix swapped = m.select_columns({2, 1, 0, 3, 4, 5, 6});  /* swap columns 1 and 3 */
  CHECK(dp(swapped) == -dp(m));
}

TEST_CASE("dp rejects more rows than columns") {
  SplitMix64 rng(9);
  CHECK_THROWS_AS(dp(random_matrix(rng, 3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(dp(CoeffMatrix(0, 0)), std::invalid_argument);
}

TEST_CASE("coefficient matrix layout: descending powers, left-aligned rows") {
  /* degrees (3,3,2): the lower-degree row is padded with a leading zero */
  Poly p1(std::vector<Int>{-5, 1, 0, 2});
  Poly p2(std::vector<Int>{0, 0, -1, 1});
  Poly p3(std::vector<Int>{7, 0, 3});
  CoeffMatrix cm = build_cm({p1, p2, p3});
  REQUIRE(cm.rows() == 3);
  REQUIRE(cm.cols() == 4);
  CHECK(cm.at(0, 0) == 2);  CHECK(cm.at(0, 1) == 0);
  CHECK(cm.at(0, 2) == 1);  CHECK(cm.at(0, 3) == -5);
  CHECK(cm.at(1, 0) == 1);  CHECK(cm.at(1, 1) == -1);
  CHECK(cm.at(2, 0) == 0);  CHECK(cm.at(2, 1) == 3);
  CHECK(cm.at(2, 2) == 0);  CHECK(cm.at(2, 3) == 7);

  CHECK_THROWS_AS(build_cm({}), std::invalid_argument);
  CHECK_THROWS_AS(build_cm({p1, Poly()}), std::invalid_argument);
}

TEST_CASE("dp_list rejects families taller than wide") {
  std::vector<Poly> fam(4, Poly(std::vector<Int>{1, 1, 1}));  /* 4 rows, 3 columns */
  CHECK_THROWS_AS(dp_list(fam), std::invalid_argument);
  CHECK_THROWS_AS(dp_linear_combination(fam), std::invalid_argument);
}

TEST_CASE("dp is a combination of the family with the stated coefficients") {
  SplitMix64 rng(10);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t m = static_cast<std::size_t>(rng.range(1, 6));
    std::size_t t = static_cast<std::size_t>(rng.range(1, static_cast<long>(m) + 1));
    std::vector<Poly> fam = random_family(rng, t, m);
    std::vector<Int> c = dp_linear_combination(fam);
    REQUIRE(c.size() == t);
    CHECK(sum_scaled(fam, c) == dp_list(fam));
  }
}

TEST_CASE("combination coefficient vanishes for a unique highest-degree member") {
  Poly high(std::vector<Int>{1, 2, 3, 4, 1});           /* degree 4 */
  Poly low1(std::vector<Int>{5, -1});                   /* degree 1 */
  Poly low2(std::vector<Int>{0, 0, 7});                 /* degree 2 */
  std::vector<Int> c = dp_linear_combination({high, low1, low2});
  CHECK(c[0] == 0);
  CHECK(sum_scaled({high, low1, low2}, c) == dp_list({high, low1, low2}));
  CHECK(dp_linear_combination({high}) == std::vector<Int>{Int(1)});
}

TEST_CASE("block identity case 1: nested dp") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> p = random_family(rng, 2, 4);
    std::vector<Poly> q = random_family(rng, 2, 3);  /* m2 == m1 - t1 + 1 */
    BlockLemmaReport rep = check_block_lemma(p, q);
    CHECK(rep.case_tag == 1);
    if (!rep.degenerate) CHECK(rep.equal);
  }
}

TEST_CASE("block identity case 2: principal coefficient factors out") {
  SplitMix64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> p = random_family(rng, 2, 4);
    std::vector<Poly> q2 = random_family(rng, 2, 2);  /* m2 == m1 - t1 */
    BlockLemmaReport rep = check_block_lemma(p, q2);
    CHECK(rep.case_tag == 2);
    CHECK(rep.equal);

    std::vector<Poly> q1 = random_family(rng, 1, 1);  /* single row far below */
    rep = check_block_lemma(random_family(rng, 2, 5), q1);
    CHECK(rep.case_tag == 2);
    CHECK(rep.equal);
  }
}

TEST_CASE("block identity case 3: the determinant polynomial collapses") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Poly> p = random_family(rng, 2, 5);
    std::vector<Poly> q = random_family(rng, 2, 2);  /* m2 < m1 - t1, t2 >= 2 */
    BlockLemmaReport rep = check_block_lemma(p, q);
    CHECK(rep.case_tag == 3);
    CHECK(rep.rhs.is_zero());
    CHECK(rep.equal);
  }
}

TEST_CASE("block identity rejects out-of-hypothesis shapes") {
  SplitMix64 rng(14);
  std::vector<Poly> p3 = random_family(rng, 3, 4);
  std::vector<Poly> q_high = random_family(rng, 2, 3);  /* m2 > m1 - t1 + 1 */
  CHECK_THROWS_AS(check_block_lemma(p3, q_high), std::invalid_argument);
  CHECK_THROWS_AS(check_block_lemma({}, q_high), std::invalid_argument);
  /* m2 > m1 */
  CHECK_THROWS_AS(check_block_lemma(random_family(rng, 1, 2), random_family(rng, 1, 3)),
                  std::invalid_argument);
  /* too many rows: t1 + t2 > m1 + 1 */
  std::vector<Poly> wide = random_family(rng, 3, 3);
  std::vector<Poly> wide2 = random_family(rng, 2, 1);
  CHECK_THROWS_AS(check_block_lemma(wide, wide2), std::invalid_argument);
}
