#include "subres/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace subres {

namespace {
const Int kZero = 0;
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Int v) {
  Poly p;
  if (v != 0) p.c_.push_back(std::move(v));
  return p;
}

Poly Poly::monomial(Int v, std::size_t j) {
  Poly p;
  if (v != 0) {
    p.c_.assign(j, kZero);
    p.c_.push_back(std::move(v));
  }
  return p;
}

std::size_t Poly::degree() const {
  if (c_.empty()) throw std::domain_error("degree of zero polynomial");
  return c_.size() - 1;
}

const Int& Poly::coeff(std::size_t j) const {
  return j < c_.size() ? c_[j] : kZero;
}

const Int& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (Int& v : r.c_) v = -v;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), kZero);
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = c_[j];
  for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[j] += o.c_[j];
  r.trim();
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, kZero);
  for (std::size_t a = 0; a < c_.size(); ++a)
    for (std::size_t b = 0; b < o.c_.size(); ++b) r.c_[a + b] += c_[a] * o.c_[b];
  r.trim();  /* cannot trigger over Z, kept for safety */
  return r;
}

Poly Poly::shifted(std::size_t j) const {
  if (c_.empty()) return Poly();
  Poly r;
  r.c_.assign(j, kZero);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Poly Poly::scaled(const Int& v) const {
  if (v == 0) return Poly();
  Poly r(*this);
  for (Int& x : r.c_) x *= v;
  return r;
}

Poly Poly::divided_exact(const Int& v) const {
  if (v == 0) throw std::domain_error("division by zero");
  Poly r(*this);
  for (Int& x : r.c_) {
    if (x % v != 0) throw std::domain_error("inexact coefficient division");
    x /= v;
  }
  return r;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = c_.size(); j-- > 0;) {
    const Int& v = c_[j];
    if (v == 0) continue;
    Int a = abs(v);
    if (first) {
      if (v < 0) os << "-";
      first = false;
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    if (a != 1 || j == 0) os << a.get_str();
    if (j > 0) {
      os << "x";
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

Int int_pow(const Int& v, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), v.get_mpz_t(), e);
  return r;
}

}  // namespace subres
