#pragma once

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace lines {

inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }

// Dense univariate polynomial over a commutative coefficient ring R.
// Coefficients are stored low degree first; the representation is always
// normalized (no stored leading zeros). deg(0) = -1 stands in for the
// "minus infinity" degree of the zero polynomial.
template <class R>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<R> c) : c_(std::move(c)) { normalize(); }
  static UniPoly constant(const R& a) { return UniPoly(std::vector<R>{a}); }
  // x^k with the given leading coefficient
  static UniPoly monomial(const R& a, int k) {
    std::vector<R> c(static_cast<size_t>(k) + 1);
    for (int i = 0; i < k; ++i) c[i] = zero_like(a);
    c[k] = a;
    return UniPoly(std::move(c));
  }

  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const R& lc() const {
    if (c_.empty()) throw std::domain_error("lc of zero polynomial");
    return c_.back();
  }
  R coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return R{};
    return c_[i];
  }
  const std::vector<R>& coeffs() const { return c_; }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<R> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size() && i < b.c_.size()) c[i] = a.c_[i] + b.c_[i];
      else if (i < a.c_.size()) c[i] = a.c_[i];
      else c[i] = b.c_[i];
    }
    return UniPoly(std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
  UniPoly operator-() const {
    std::vector<R> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero_poly() || b.is_zero_poly()) return UniPoly();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const R& s) {
    std::vector<R> c(a.c_.size());
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i] * s;
    return UniPoly(std::move(c));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<R> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * scalar_of_int(static_cast<long>(i), c_[i]);
    return UniPoly(std::move(c));
  }

  R eval(const R& x) const {
    if (c_.empty()) return R{};
    R r = c_.back();
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) r = r * x + c_[i];
    return r;
  }

  UniPoly monic() const {
    if (is_zero_poly()) return *this;
    R s = inv(lc());
    return *this * s;
  }

  // field division: a = q b + r, deg r < deg b
  static std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero_poly()) throw std::domain_error("polynomial division by zero");
    UniPoly r = a;
    if (r.deg() < b.deg()) return {UniPoly(), r};
    std::vector<R> q(static_cast<size_t>(r.deg() - b.deg()) + 1, zero_like(b.lc()));
    R li = inv(b.lc());
    while (!r.is_zero_poly() && r.deg() >= b.deg()) {
      int k = r.deg() - b.deg();
      R f = r.lc() * li;
      q[k] = f;
      std::vector<R> rc = r.c_;
      for (int i = 0; i <= b.deg(); ++i) rc[i + k] = rc[i + k] - f * b.c_[i];
      rc.pop_back();  // leading term cancels exactly
      r = UniPoly(std::move(rc));
    }
    return {UniPoly(std::move(q)), r};
  }

  // pseudo remainder: lc(b)^(deg a - deg b + 1) * a mod b, ring ops only
  static UniPoly prem(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero_poly()) throw std::domain_error("pseudo division by zero");
    UniPoly r = a;
    int e = a.deg() - b.deg() + 1;
    if (e <= 0) return r;
    const R& d = b.lc();
    while (!r.is_zero_poly() && r.deg() >= b.deg()) {
      int k = r.deg() - b.deg();
      R t = r.lc();
      std::vector<R> rc(r.c_.size(), zero_like(d));
      for (size_t i = 0; i < r.c_.size(); ++i) rc[i] = r.c_[i] * d;
      for (int i = 0; i <= b.deg(); ++i) rc[i + k] = rc[i + k] - t * b.c_[i];
      rc.pop_back();
      r = UniPoly(std::move(rc));
      --e;
    }
    if (e > 0) {
      R f = one_like(d);
      for (int i = 0; i < e; ++i) f = f * d;
      r = r * f;
    }
    return r;
  }

  UniPoly shifted(int k) const {  // multiply by x^k
    if (is_zero_poly()) return *this;
    std::vector<R> c(c_.size() + static_cast<size_t>(k), zero_like(c_[0]));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return UniPoly(std::move(c));
  }

 private:
  void normalize() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

// Monic gcd by the Euclidean algorithm; right choice over finite and number
// fields. Over Q use gcd_q (subresultant sequence) instead, see zpoly.hpp.
template <class F>
UniPoly<F> gcd_euclid(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero_poly()) {
    auto [q, r] = UniPoly<F>::divrem(a, b);
    (void)q;
    a = std::move(b);
    b = r.is_zero_poly() ? r : r.monic();
  }
  return a.is_zero_poly() ? a : a.monic();
}

// Subresultant sequence resultant (returns the classical resultant with rows
// of `a` on top of the Sylvester matrix). Works over any ring with exact
// division; `exact_div` must be provided for R.
template <class R>
R resultant_prs(UniPoly<R> a, UniPoly<R> b) {
  using P = UniPoly<R>;
  if (a.is_zero_poly() || b.is_zero_poly()) return R{};
  R one = one_like(a.lc());
  int sign = 1;
  if (a.deg() < b.deg()) {
    if ((a.deg() & 1) && (b.deg() & 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.deg() == 0) {
    R r = one;
    for (int i = 0; i < a.deg(); ++i) r = r * b.lc();
    return sign < 0 ? -r : r;
  }
  R g = one, h = one;
  while (true) {
    int da = a.deg(), db = b.deg();
    int delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    P r = P::prem(a, b);
    if (r.is_zero_poly()) return R{};  // common factor, resultant vanishes
    R denom = g;
    for (int i = 0; i < delta; ++i) denom = denom * h;
    a = b;
    std::vector<R> rc;
    rc.reserve(static_cast<size_t>(r.deg()) + 1);
    for (int i = 0; i <= r.deg(); ++i) rc.push_back(exact_div(r.coeff(i), denom));
    b = P(std::move(rc));
    g = a.lc();
    // h = g^delta * h^(1-delta)
    if (delta == 0) {
      // h unchanged
    } else {
      R gp = one;
      for (int i = 0; i < delta; ++i) gp = gp * g;
      R hp = one;
      for (int i = 0; i < delta - 1; ++i) hp = hp * h;
      h = (delta == 1) ? gp : exact_div(gp, hp);
    }
    if (b.deg() == 0) {
      // res = sign * lc(b)^deg(a) / h^(deg(a)-1)
      R num = one;
      for (int i = 0; i < a.deg(); ++i) num = num * b.lc();
      R den = one;
      for (int i = 0; i < a.deg() - 1; ++i) den = den * h;
      R res = exact_div(num, den);
      return sign < 0 ? -res : res;
    }
  }
}

// x^e mod g over a field, by square and multiply on residues.
template <class F>
UniPoly<F> pow_x_mod(uint64_t e, const UniPoly<F>& g) {
  if (g.deg() < 1) throw std::domain_error("pow_x_mod needs deg >= 1");
  F one = one_like(g.lc());
  UniPoly<F> r = UniPoly<F>::constant(one);
  UniPoly<F> base = UniPoly<F>::monomial(one, 1);
  base = UniPoly<F>::divrem(base, g).second;
  while (e) {
    if (e & 1) r = UniPoly<F>::divrem(r * base, g).second;
    base = UniPoly<F>::divrem(base * base, g).second;
    e >>= 1;
  }
  return r;
}

}  // namespace lines
