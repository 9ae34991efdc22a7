#include "zpoly.hpp"

#include <stdexcept>

namespace lines {

ZPoly zp_normalize(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return zp_normalize(std::move(c));
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return zp_normalize(std::move(c));
}

Int zp_content(const ZPoly& a) {
  Int g(0);
  for (const Int& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly zp_primitive(const ZPoly& a) {
  if (a.empty()) return a;
  Int g = zp_content(a);
  if (sgn(a.back()) < 0) g = -g;
  return zp_exact_div_scalar(a, g);
}

ZPoly zp_scale(const ZPoly& a, const Int& s) {
  ZPoly c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] * s;
  return zp_normalize(std::move(c));
}

ZPoly zp_exact_div_scalar(const ZPoly& a, const Int& s) {
  if (s == 0) throw std::domain_error("zp: division by zero scalar");
  ZPoly c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a[i].get_mpz_t(), s.get_mpz_t());
    if (r != 0) throw std::domain_error("zp: inexact scalar division");
    c[i] = q;
  }
  return zp_normalize(std::move(c));
}

ZPoly zp_prem(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("zp: pseudo division by zero");
  ZPoly r = a;
  int e = zp_deg(a) - zp_deg(b) + 1;
  const Int& d = b.back();
  while (!r.empty() && r.size() >= b.size()) {
    Int t = r.back();
    size_t k = r.size() - b.size();
    ZPoly rt(r.size(), Int(0));
    for (size_t i = 0; i < r.size(); ++i) rt[i] = r[i] * d;
    for (size_t i = 0; i < b.size(); ++i) rt[i + k] -= t * b[i];
    rt.pop_back();
    r = zp_normalize(std::move(rt));
    --e;
  }
  if (e > 0) {
    Int f(1);
    for (int i = 0; i < e; ++i) f *= d;
    r = zp_scale(r, f);
  }
  return r;
}

ZPoly zp_gcd(ZPoly a, ZPoly b) {
  a = zp_primitive(zp_normalize(std::move(a)));
  b = zp_primitive(zp_normalize(std::move(b)));
  if (a.empty()) return b;
  if (b.empty()) return a;
  if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
  Int g(1), h(1);
  while (true) {
    int delta = zp_deg(a) - zp_deg(b);
    ZPoly r = zp_prem(a, b);
    if (r.empty()) break;
    if (zp_deg(r) == 0) return {Int(1)};
    Int denom = g;
    for (int i = 0; i < delta; ++i) denom *= h;
    a = b;
    b = zp_exact_div_scalar(r, denom);
    g = a.back();
    if (delta > 0) {
      Int gp(1);
      for (int i = 0; i < delta; ++i) gp *= g;
      Int hp(1);
      for (int i = 0; i < delta - 1; ++i) hp *= h;
      Int q, rr;
      mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), gp.get_mpz_t(), hp.get_mpz_t());
      if (rr != 0) throw std::logic_error("zp_gcd: subresultant bookkeeping");
      h = q;
    }
  }
  return zp_primitive(b);
}

ZPoly zp_exact_div(const ZPoly& a, const ZPoly& b) {
  if (b.empty()) throw std::domain_error("zp: division by zero");
  if (a.empty()) return {};
  ZPoly r = a;
  if (r.size() < b.size()) throw std::domain_error("zp: inexact division");
  ZPoly q(r.size() - b.size() + 1, Int(0));
  while (!r.empty() && r.size() >= b.size()) {
    Int qc, rem;
    mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(), r.back().get_mpz_t(), b.back().get_mpz_t());
    if (rem != 0) throw std::domain_error("zp: inexact division");
    size_t k = r.size() - b.size();
    q[k] = qc;
    for (size_t i = 0; i < b.size(); ++i) r[i + k] -= qc * b[i];
    if (r.back() != 0) throw std::domain_error("zp: inexact division");
    r = zp_normalize(std::move(r));
  }
  if (!r.empty()) throw std::domain_error("zp: inexact division");
  return zp_normalize(std::move(q));
}

bool zp_divides(const ZPoly& d, const ZPoly& a) {
  try {
    zp_exact_div(a, d);
    return true;
  } catch (const std::domain_error&) {
    return false;
  }
}

std::pair<Rat, ZPoly> q_to_z(const UniPoly<Rat>& p) {
  if (p.is_zero_poly()) return {Rat(0), {}};
  Int den(1);
  for (const Rat& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z(p.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    Rat c = p.coeffs()[i] * Rat(den);
    z[i] = c.get_num();
  }
  Int cont = zp_content(z);
  if (sgn(z.back()) < 0) cont = -cont;
  z = zp_exact_div_scalar(z, cont);
  return {Rat(cont) / Rat(den), z};
}

UniPoly<Rat> z_to_q(const ZPoly& p) {
  std::vector<Rat> c(p.size());
  for (size_t i = 0; i < p.size(); ++i) c[i] = Rat(p[i]);
  return UniPoly<Rat>(std::move(c));
}

UniPoly<Rat> gcd_q(const UniPoly<Rat>& a, const UniPoly<Rat>& b) {
  if (a.is_zero_poly()) return b.monic();
  if (b.is_zero_poly()) return a.monic();
  ZPoly g = zp_gcd(q_to_z(a).second, q_to_z(b).second);
  return z_to_q(g).monic();
}

UniPoly<Rat> squarefree_part_q(const UniPoly<Rat>& p) {
  if (p.is_zero_poly()) throw std::domain_error("squarefree part of zero");
  if (p.deg() == 0) return UniPoly<Rat>::constant(Rat(1));
  UniPoly<Rat> g = gcd_q(p, p.derivative());
  return UniPoly<Rat>::divrem(p, g).first.monic();
}

}  // namespace lines
