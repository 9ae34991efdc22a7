#pragma once

#include <memory>
#include <sstream>
#include <string>

#include "rational.hpp"
#include "upoly.hpp"

namespace lines {

// extended euclid over a field: returns (g, s, t) with s a + t b = g, g monic
template <class F>
struct XGcd {
  UniPoly<F> g, s, t;
};

template <class F>
XGcd<F> xgcd_poly(UniPoly<F> a, UniPoly<F> b) {
  UniPoly<F> s0, s1, t0, t1;
  F one{};
  if (!a.is_zero_poly()) one = one_like(a.lc());
  else if (!b.is_zero_poly()) one = one_like(b.lc());
  else throw std::domain_error("xgcd of two zero polynomials");
  s0 = UniPoly<F>::constant(one);
  t1 = UniPoly<F>::constant(one);
  while (!b.is_zero_poly()) {
    auto [q, r] = UniPoly<F>::divrem(a, b);
    a = std::move(b);
    b = std::move(r);
    UniPoly<F> s2 = s0 - q * s1;
    UniPoly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.is_zero_poly()) throw std::domain_error("xgcd: zero gcd");
  F li = inv(a.lc());
  return {a * li, s0 * li, t0 * li};
}

struct ExtCtx {
  UniPoly<Rat> m;  // monic minimal polynomial of the generator
};

// Element of the number field Q[t]/(m). Default-constructed elements act as a
// bare zero and adopt the context of their arithmetic partner.
class ExtQ {
 public:
  ExtQ() = default;
  ExtQ(std::shared_ptr<const ExtCtx> ctx, UniPoly<Rat> v) : ctx_(std::move(ctx)) {
    v_ = reduce(std::move(v), *ctx_);
  }
  static ExtQ from_rat(const std::shared_ptr<const ExtCtx>& ctx, const Rat& r) {
    return ExtQ(ctx, UniPoly<Rat>::constant(r));
  }
  static ExtQ generator(const std::shared_ptr<const ExtCtx>& ctx) {
    return ExtQ(ctx, UniPoly<Rat>::monomial(Rat(1), 1));
  }

  const UniPoly<Rat>& rep() const { return v_; }
  const std::shared_ptr<const ExtCtx>& ctx() const { return ctx_; }
  unsigned ext_degree() const { return ctx_ ? static_cast<unsigned>(ctx_->m.deg()) : 1u; }

  friend ExtQ operator+(const ExtQ& a, const ExtQ& b) {
    auto c = join(a, b);
    if (!c) return ExtQ();
    return ExtQ(c, a.v_ + b.v_);
  }
  friend ExtQ operator-(const ExtQ& a, const ExtQ& b) {
    auto c = join(a, b);
    if (!c) return ExtQ();
    return ExtQ(c, a.v_ - b.v_);
  }
  friend ExtQ operator*(const ExtQ& a, const ExtQ& b) {
    auto c = join(a, b);
    if (!c) return ExtQ();
    return ExtQ(c, a.v_ * b.v_);
  }
  friend ExtQ operator/(const ExtQ& a, const ExtQ& b) { return a * b.inverse(); }
  ExtQ operator-() const {
    ExtQ r = *this;
    r.v_ = -r.v_;
    return r;
  }
  ExtQ& operator+=(const ExtQ& b) { return *this = *this + b; }
  ExtQ& operator-=(const ExtQ& b) { return *this = *this - b; }
  ExtQ& operator*=(const ExtQ& b) { return *this = *this * b; }

  friend bool operator==(const ExtQ& a, const ExtQ& b) {
    join(a, b);  // arity check
    return a.v_ == b.v_;
  }
  friend bool operator!=(const ExtQ& a, const ExtQ& b) { return !(a == b); }

  ExtQ inverse() const {
    if (v_.is_zero_poly()) throw std::domain_error("division by zero in extension field");
    if (!ctx_) throw std::domain_error("bare extension element has no inverse");
    auto x = xgcd_poly(v_, ctx_->m);
    if (x.g.deg() != 0) throw std::domain_error("non invertible element: modulus is reducible");
    return ExtQ(ctx_, x.s * inv(x.g.coeff(0)));
  }

 private:
  static UniPoly<Rat> reduce(UniPoly<Rat> v, const ExtCtx& c) {
    if (v.deg() >= c.m.deg()) v = UniPoly<Rat>::divrem(v, c.m).second;
    return v;
  }
  static std::shared_ptr<const ExtCtx> join(const ExtQ& a, const ExtQ& b) {
    if (!a.ctx_) return b.ctx_;
    if (!b.ctx_) return a.ctx_;
    if (a.ctx_ == b.ctx_ || a.ctx_->m == b.ctx_->m) return a.ctx_;
    throw std::domain_error("extension field mismatch");
  }

  std::shared_ptr<const ExtCtx> ctx_;
  UniPoly<Rat> v_;
};

inline bool is_zero(const ExtQ& a) { return a.rep().is_zero_poly(); }
inline bool is_one(const ExtQ& a) { return a.rep().deg() == 0 && is_one(a.rep().coeff(0)); }
inline ExtQ inv(const ExtQ& a) { return a.inverse(); }
inline ExtQ zero_like(const ExtQ& a) { return a.ctx() ? ExtQ(a.ctx(), UniPoly<Rat>()) : ExtQ(); }
inline ExtQ one_like(const ExtQ& a) {
  if (!a.ctx()) throw std::domain_error("one_like on bare extension element");
  return ExtQ::from_rat(a.ctx(), Rat(1));
}
inline ExtQ scalar_of_int(long v, const ExtQ& ctx) {
  if (!ctx.ctx()) throw std::domain_error("scalar_of_int on bare extension element");
  return ExtQ::from_rat(ctx.ctx(), Rat(v));
}
inline ExtQ exact_div(const ExtQ& a, const ExtQ& b) { return a / b; }
inline std::string to_string(const ExtQ& a) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i <= a.rep().deg(); ++i) {
    if (i) os << ",";
    os << to_string(a.rep().coeff(i));
  }
  os << "]";
  return os.str();
}

// field norm N(a): product of a over all embeddings; for monic m this is the
// resultant of m and the representative, up to the sign fixed by the degrees
inline Rat ext_norm(const ExtQ& a) {
  if (!a.ctx()) throw std::domain_error("norm of bare extension element");
  if (is_zero(a)) return Rat(0);
  const UniPoly<Rat>& m = a.ctx()->m;
  if (a.rep().deg() == 0) {
    Rat r(1);
    for (int i = 0; i < m.deg(); ++i) r *= a.rep().coeff(0);
    return r;
  }
  Rat r = resultant_prs(m, a.rep());
  return r;
}

}  // namespace lines
