#include "subres/subresultant.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "subres/detpoly.hpp"

namespace subres {

DeltaIndex::DeltaIndex(std::vector<int> comps) : v(std::move(comps)) {
  if (v.empty()) throw std::invalid_argument("empty multi-index");
  for (int x : v)
    if (x < 0) throw std::invalid_argument("negative multi-index component");
}

int DeltaIndex::sum() const {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

bool DeltaIndex::all_zero() const {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

bool DeltaIndex::interior() const {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 1; });
}

DeltaIndex DeltaIndex::operator+(const DeltaIndex& o) const {
  if (v.size() != o.v.size()) throw std::invalid_argument("multi-index size mismatch");
  DeltaIndex r(*this);
  for (std::size_t i = 0; i < v.size(); ++i) r.v[i] += o.v[i];
  return r;
}

DeltaIndex DeltaIndex::plus_unit(std::size_t i) const {
  DeltaIndex r(*this);
  if (i == 0) return r;
  if (i > v.size()) throw std::out_of_range("unit vector index out of range");
  ++r.v[i - 1];
  return r;
}

DeltaIndex DeltaIndex::minus_unit(std::size_t i) const {
  DeltaIndex r(*this);
  if (i == 0) return r;
  if (i > v.size()) throw std::out_of_range("unit vector index out of range");
  if (r.v[i - 1] == 0) throw std::domain_error("multi-index component would go negative");
  --r.v[i - 1];
  return r;
}

std::string DeltaIndex::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

DeltaIndex constant_index(std::size_t n, int k) {
  return DeltaIndex(std::vector<int>(n, k));
}

PolySystem::PolySystem(std::vector<Poly> polys) : f_(std::move(polys)) {
  if (f_.size() < 2) throw std::invalid_argument("system needs at least two polynomials");
  d_.reserve(f_.size());
  for (std::size_t i = 0; i < f_.size(); ++i) {
    if (f_[i].is_zero()) throw std::invalid_argument("zero polynomial in system");
    d_.push_back(f_[i].degree());
  }
}

bool PolySystem::is_standard() const {
  for (std::size_t i = 1; i < d_.size(); ++i)
    if (d_[i] < d_[0]) return false;
  return f_[0].leading() == 1;
}

PolySystem PolySystem::standard(std::vector<Poly> polys) {
  PolySystem f(std::move(polys));
  for (std::size_t i = 1; i <= f.n(); ++i)
    if (f.deg(i) < f.deg(0))
      throw std::invalid_argument("first polynomial must have minimal degree");
  if (f.poly(0).leading() != 1)
    throw std::invalid_argument("first polynomial must be monic");
  return f;
}

std::vector<DeltaIndex> enumerate_index_set(std::size_t d0, std::size_t n) {
  if (n == 0) throw std::invalid_argument("index set needs n >= 1");
  std::vector<DeltaIndex> out;
  std::vector<int> cur(n);
  /* fill `cur` with every composition of `grade` into n parts, lex descending */
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos + 1 == n) {
      cur[pos] = left;
      out.push_back(DeltaIndex(cur));
      return;
    }
    for (int x = left; x >= 0; --x) {
      cur[pos] = x;
      self(self, pos + 1, left - x);
    }
  };
  for (int grade = static_cast<int>(d0); grade >= 0; --grade) rec(rec, 0, grade);
  return out;
}

namespace {

void require_valid_index(const PolySystem& f, const DeltaIndex& delta) {
  if (delta.size() != f.n()) throw std::invalid_argument("multi-index size must equal n");
  if (delta.sum() < 0 || static_cast<std::size_t>(delta.sum()) > f.deg(0))
    throw std::invalid_argument("multi-index weight exceeds deg F_0");
}

/* The defining family: delta_0 shifts of F_0, then delta_i shifts of each
 * F_i, each block in descending shift order x^(b-1),...,x^0. */
std::vector<Poly> defining_family(const PolySystem& f, const DeltaIndex& delta,
                                  std::size_t d0_block) {
  std::vector<Poly> fam;
  for (std::size_t j = d0_block; j-- > 0;) fam.push_back(f.poly(0).shifted(j));
  for (std::size_t i = 1; i <= f.n(); ++i)
    for (std::size_t j = static_cast<std::size_t>(delta[i - 1]); j-- > 0;)
      fam.push_back(f.poly(i).shifted(j));
  return fam;
}

}  // namespace

std::size_t col_count(const PolySystem& f, const DeltaIndex& delta) {
  require_valid_index(f, delta);
  std::size_t c = 0;
  for (std::size_t i = 1; i <= f.n(); ++i)
    if (delta[i - 1] > 0)
      c = std::max(c, static_cast<std::size_t>(delta[i - 1]) - 1 + f.deg(i) + 1);
  return c;
}

std::size_t delta0(const PolySystem& f, const DeltaIndex& delta) {
  const std::size_t c = col_count(f, delta);
  if (c == 0) return 1;  /* delta == 0: the family degenerates to F_0 alone */
  return c >= f.deg(0) ? c - f.deg(0) : 1;
}

SubresultantValue subresultant(const PolySystem& f, const DeltaIndex& delta) {
  require_valid_index(f, delta);
  const std::size_t b0 = delta0(f, delta);
  std::vector<Poly> fam = defining_family(f, delta, b0);

  SubresultantValue val;
  val.d0_block = b0;
  val.r_poly = dp_list(fam);
  val.principal = val.r_poly.coeff(f.deg(0) - static_cast<std::size_t>(delta.sum()));
  return val;
}

SubresultantValue subres_two(const Poly& f0, const Poly& f1, std::size_t k) {
  if (f0.is_zero() || f1.is_zero()) throw std::invalid_argument("zero polynomial in system");
  const std::size_t d0 = f0.degree(), d1 = f1.degree();
  if (d0 > d1) throw std::invalid_argument("first polynomial must have minimal degree");
  if (k > d0) throw std::invalid_argument("subresultant index exceeds deg F_0");

  SubresultantValue val;
  val.d0_block = d1 - d0 + k;
  if (k == 0) {
    if (d0 == d1)
      throw std::invalid_argument("0-subresultant needs distinct degrees");
    val.r_poly = f0.scaled(int_pow(f0.leading(), d1 - d0 - 1));
  } else {
    std::vector<Poly> fam;
    for (std::size_t j = d1 - d0 + k; j-- > 0;) fam.push_back(f0.shifted(j));
    for (std::size_t j = k; j-- > 0;) fam.push_back(f1.shifted(j));
    val.r_poly = dp_list(fam);
  }
  val.principal = val.r_poly.coeff(d0 - k);
  return val;
}

IdealDecomposition ideal_membership_decompose(const PolySystem& f, const DeltaIndex& delta) {
  require_valid_index(f, delta);
  const std::size_t b0 = delta0(f, delta);
  std::vector<Poly> fam = defining_family(f, delta, b0);
  std::vector<Int> c = dp_linear_combination(fam);

  /* fam lists each block's shifts descending, so walk c in the same order */
  IdealDecomposition dec;
  dec.d0_block = b0;
  dec.coeff.resize(f.n() + 1);
  std::size_t pos = 0;
  for (std::size_t i = 0; i <= f.n(); ++i) {
    const std::size_t block = i == 0 ? b0 : static_cast<std::size_t>(delta[i - 1]);
    dec.coeff[i].assign(block, Int(0));
    for (std::size_t j = block; j-- > 0;) dec.coeff[i][j] = c[pos++];
  }
  return dec;
}

}  // namespace subres
