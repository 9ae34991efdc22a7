#include "factorq.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace lines {
namespace {

UniPoly<GFp> compose_mod(const UniPoly<GFp>& f, const UniPoly<GFp>& g, const UniPoly<GFp>& m) {
  // f(g) mod m by Horner
  GFp one = one_like(m.lc());
  UniPoly<GFp> acc;
  for (int i = f.deg(); i >= 0; --i) {
    acc = UniPoly<GFp>::divrem(acc * g, m).second;
    acc = acc + UniPoly<GFp>::constant(f.coeff(i));
  }
  (void)one;
  return acc;
}

UniPoly<GFp> pow_mod(const UniPoly<GFp>& b, const Int& e, const UniPoly<GFp>& m) {
  UniPoly<GFp> r = UniPoly<GFp>::constant(one_like(m.lc()));
  UniPoly<GFp> base = UniPoly<GFp>::divrem(b, m).second;
  for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
    r = UniPoly<GFp>::divrem(r * r, m).second;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      r = UniPoly<GFp>::divrem(r * base, m).second;
  }
  return r;
}

// equal degree splitting (Cantor/Zassenhaus), f squarefree monic, all
// irreducible factors of degree d, p odd
void equal_degree(const UniPoly<GFp>& f, int d, std::mt19937_64& rng,
                  std::vector<UniPoly<GFp>>& out) {
  if (f.deg() == d) {
    out.push_back(f);
    return;
  }
  uint64_t p = f.lc().modulus();
  Int e;
  mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    std::vector<GFp> c(static_cast<size_t>(f.deg()));
    for (auto& x : c) x = GFp(static_cast<int64_t>(rng() % p), p);
    UniPoly<GFp> a(std::move(c));
    if (a.is_zero_poly()) continue;
    UniPoly<GFp> b = pow_mod(a, e, f);
    b = b - UniPoly<GFp>::constant(one_like(f.lc()));
    UniPoly<GFp> g = gcd_euclid(b, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree(g, d, rng, out);
      equal_degree(UniPoly<GFp>::divrem(f, g).first, d, rng, out);
      return;
    }
  }
}

// distinct degree + equal degree factorization of a squarefree monic f
std::vector<UniPoly<GFp>> factor_squarefree_gfp(UniPoly<GFp> f) {
  uint64_t p = f.lc().modulus();
  std::mt19937_64 rng(0xC0FFEEuLL + p);
  std::vector<UniPoly<GFp>> out;
  UniPoly<GFp> xp = pow_x_mod(p, f);  // x^p mod f
  UniPoly<GFp> h = xp;
  UniPoly<GFp> x = UniPoly<GFp>::monomial(one_like(f.lc()), 1);
  for (int d = 1; f.deg() > 0 && d <= f.deg() / 2; ++d) {
    UniPoly<GFp> g = gcd_euclid(h - x, f);
    if (g.deg() > 0) {
      equal_degree(g, d, rng, out);
      f = UniPoly<GFp>::divrem(f, g).first;
      h = UniPoly<GFp>::divrem(h, f).second;
    }
    if (d + 1 <= f.deg() / 2) h = compose_mod(h, xp, f);
  }
  if (f.deg() > 0) out.push_back(f);
  return out;
}

UniPoly<GFp> zp_to_gfp(const ZPoly& f, uint64_t p) {
  std::vector<GFp> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    Int m = f[i] % static_cast<long>(p);
    c[i] = GFp(m.get_si(), p);
  }
  return UniPoly<GFp>(std::move(c));
}

Int balanced(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

// linear Hensel lift of a monic factorization from mod p to mod p^K >= bound
std::vector<ZPoly> hensel_lift(const ZPoly& f, const std::vector<UniPoly<GFp>>& fac,
                               uint64_t p, const Int& bound) {
  size_t r = fac.size();
  // Bezout data mod p: u_i * prod_{k != i} g_k = 1 mod g_i
  std::vector<UniPoly<GFp>> u(r);
  for (size_t i = 0; i < r; ++i) {
    UniPoly<GFp> h = UniPoly<GFp>::constant(one_like(fac[i].lc()));
    for (size_t k = 0; k < r; ++k)
      if (k != i) h = UniPoly<GFp>::divrem(h * fac[k], fac[i]).second;
    auto x = xgcd_poly(h, fac[i]);
    if (x.g.deg() != 0) throw std::logic_error("hensel: factors not coprime");
    u[i] = x.s;  // already scaled so that g is monic 1
  }
  std::vector<ZPoly> g(r);
  for (size_t i = 0; i < r; ++i) {
    g[i].resize(static_cast<size_t>(fac[i].deg()) + 1);
    for (int j = 0; j <= fac[i].deg(); ++j)
      g[i][static_cast<size_t>(j)] = Int(static_cast<unsigned long>(fac[i].coeff(j).value()));
  }
  Int pk(static_cast<unsigned long>(p));
  while (pk <= 2 * bound) {
    // error E = f - prod g_i, divisible by pk
    ZPoly prod = {Int(1)};
    for (const auto& gi : g) prod = zp_mul(prod, gi);
    ZPoly e = zp_sub(f, prod);
    ZPoly delta(e.size());
    for (size_t i = 0; i < e.size(); ++i) {
      Int q, rr;
      mpz_tdiv_qr(q.get_mpz_t(), rr.get_mpz_t(), e[i].get_mpz_t(), pk.get_mpz_t());
      if (rr != 0) throw std::logic_error("hensel: error not divisible");
      delta[i] = q;
    }
    UniPoly<GFp> dd = zp_to_gfp(zp_normalize(std::move(delta)), p);
    for (size_t i = 0; i < r; ++i) {
      UniPoly<GFp> di = UniPoly<GFp>::divrem(dd * u[i], fac[i]).second;
      for (int j = 0; j <= di.deg(); ++j) {
        size_t idx = static_cast<size_t>(j);
        if (idx >= g[i].size()) throw std::logic_error("hensel: degree overflow");
        g[i][idx] += pk * Int(static_cast<unsigned long>(di.coeff(j).value()));
      }
    }
    pk *= static_cast<unsigned long>(p);
  }
  // reduce into balanced residues mod pk for recombination
  for (auto& gi : g)
    for (auto& c : gi) c = balanced(c, pk);
  return g;
}

Int mignotte_bound(const ZPoly& f) {
  Int s(0);
  for (const Int& c : f) s += c * c;
  Int n2 = sqrt(s) + 1;
  Int b = n2;
  mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<mp_bitcnt_t>(zp_deg(f) + 1));
  return b;
}

// irreducible factors of a primitive squarefree monic integer polynomial
std::vector<ZPoly> factor_monic_squarefree_z(ZPoly f) {
  std::vector<ZPoly> out;
  if (zp_deg(f) <= 1) {
    out.push_back(f);
    return out;
  }
  static const uint64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  // pick the admissible prime with the fewest modular factors among a few tries
  uint64_t best_p = 0;
  std::vector<UniPoly<GFp>> best_fac;
  int tried = 0;
  for (uint64_t p : kPrimes) {
    UniPoly<GFp> fp = zp_to_gfp(f, p);
    if (fp.deg() != zp_deg(f)) continue;  // should not happen, f monic
    UniPoly<GFp> g = gcd_euclid(fp, fp.derivative());
    if (g.deg() != 0) continue;  // not squarefree mod p
    auto fac = factor_squarefree_gfp(fp.monic());
    if (fac.size() == 1) return {f};  // irreducible certificate
    if (best_p == 0 || fac.size() < best_fac.size()) {
      best_p = p;
      best_fac = std::move(fac);
    }
    if (++tried >= 3) break;
  }
  if (best_p == 0) throw std::runtime_error("factor: no admissible prime found");
  Int bound = mignotte_bound(f);
  std::vector<ZPoly> lifted = hensel_lift(f, best_fac, best_p, bound);
  Int pk(static_cast<unsigned long>(best_p));
  while (pk <= 2 * bound) pk *= static_cast<unsigned long>(best_p);

  std::vector<int> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
  ZPoly rem = f;
  size_t s = 1;
  while (2 * s <= live.size()) {
    bool found = false;
    std::vector<int> idx(s);
    // enumerate subsets of size s of live (live.size() is small)
    std::vector<int> comb(s);
    for (size_t i = 0; i < s; ++i) comb[i] = static_cast<int>(i);
    while (true) {
      ZPoly cand = {Int(1)};
      for (size_t i = 0; i < s; ++i) cand = zp_mul(cand, lifted[static_cast<size_t>(live[static_cast<size_t>(comb[i])])]);
      for (auto& c : cand) c = balanced(c, pk);
      cand = zp_primitive(cand);
      if (zp_divides(cand, rem)) {
        out.push_back(cand);
        rem = zp_exact_div(rem, cand);
        std::vector<int> nl;
        for (size_t i = 0, j = 0; i < live.size(); ++i) {
          if (j < s && static_cast<int>(i) == comb[j]) {
            ++j;
            continue;
          }
          nl.push_back(live[i]);
        }
        live = std::move(nl);
        found = true;
        break;
      }
      // next combination
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && comb[static_cast<size_t>(i)] == static_cast<int>(live.size() - s + static_cast<size_t>(i))) --i;
      if (i < 0) break;
      ++comb[static_cast<size_t>(i)];
      for (size_t j = static_cast<size_t>(i) + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zp_deg(rem) > 0) out.push_back(rem);
  return out;
}

}  // namespace

std::vector<GFp> roots_gfp(const UniPoly<GFp>& f) {
  std::vector<GFp> out;
  if (f.is_zero_poly()) throw std::domain_error("roots of zero polynomial");
  uint64_t p = f.lc().modulus();
  for (uint64_t v = 0; v < p; ++v) {
    GFp x(static_cast<int64_t>(v), p);
    if (is_zero(f.eval(x))) out.push_back(x);
  }
  return out;
}

FactorsP factor_gfp(const UniPoly<GFp>& f) {
  if (f.is_zero_poly()) throw std::domain_error("factor of zero polynomial");
  FactorsP out;
  out.unit = f.lc();
  UniPoly<GFp> w = f.monic();
  // squarefree split by repeated gcd; valid here since p > deg in all uses
  while (w.deg() > 0) {
    UniPoly<GFp> g = gcd_euclid(w, w.derivative());
    UniPoly<GFp> sqf = UniPoly<GFp>::divrem(w, g).first;
    for (const auto& h : factor_squarefree_gfp(sqf)) {
      int mult = 0;
      while (true) {
        auto [q, r] = UniPoly<GFp>::divrem(w, h);
        if (!r.is_zero_poly()) break;
        w = q;
        ++mult;
      }
      out.factors.emplace_back(h, mult);
    }
    if (w.deg() > 0 && sqf.deg() == 0)
      throw std::logic_error("factor_gfp: squarefree split stalled (wild characteristic?)");
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    for (int i = a.first.deg(); i >= 0; --i) {
      if (a.first.coeff(i).value() != b.first.coeff(i).value())
        return a.first.coeff(i).value() < b.first.coeff(i).value();
    }
    return false;
  });
  return out;
}

FactorsQ factor_q_poly(const UniPoly<Rat>& f) {
  if (f.is_zero_poly()) throw std::domain_error("factor of zero polynomial");
  FactorsQ out;
  out.unit = f.lc();
  if (f.deg() == 0) return out;
  auto [cont, z] = q_to_z(f);
  (void)cont;
  // one squarefree pass is enough: every distinct irreducible divides z/gcd(z,z')
  ZPoly der(z.size() - 1);
  for (size_t i = 1; i < z.size(); ++i) der[i - 1] = z[i] * static_cast<long>(i);
  ZPoly g = zp_gcd(z, zp_normalize(std::move(der)));
  ZPoly sqf = zp_exact_div(z, g);
  // monicize: m(x) = l^(n-1) sqf(x/l) is monic over Z when l = lc(sqf)
  Int l = sqf.back();
  int n = zp_deg(sqf);
  ZPoly m(sqf.size());
  m[static_cast<size_t>(n)] = 1;
  Int pw(1);
  for (int i = n - 1; i >= 0; --i) {
    m[static_cast<size_t>(i)] = sqf[static_cast<size_t>(i)] * pw;
    pw *= l;
  }
  for (const ZPoly& mf : factor_monic_squarefree_z(m)) {
    // back substitute x -> l*x and take the primitive part
    ZPoly back(mf.size());
    Int pw3(1);
    for (size_t i = 0; i < mf.size(); ++i) {
      back[i] = mf[i] * pw3;
      pw3 *= l;
    }
    back = zp_primitive(back);
    UniPoly<Rat> irr = z_to_q(back).monic();
    int k = 0;
    ZPoly probe = z;
    while (zp_divides(back, probe)) {
      probe = zp_exact_div(probe, back);
      ++k;
    }
    out.factors.emplace_back(irr, k);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return false;
  });
  return out;
}

bool irreducible_q(const UniPoly<Rat>& m) {
  if (m.deg() <= 0) return false;
  if (m.deg() == 1) return true;
  auto [cont, z] = q_to_z(m);
  (void)cont;
  // quick certificates at small primes
  static const uint64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23};
  for (uint64_t p : kPrimes) {
    if ((z.back() % static_cast<long>(p)) == 0) continue;
    UniPoly<GFp> fp = zp_to_gfp(z, p).monic();
    if (gcd_euclid(fp, fp.derivative()).deg() != 0) continue;
    if (factor_squarefree_gfp(fp).size() == 1) return true;
  }
  auto fac = factor_q_poly(m);
  return fac.factors.size() == 1 && fac.factors[0].second == 1 && fac.factors[0].first.deg() == m.deg();
}

std::shared_ptr<const ExtCtx> make_extension(const UniPoly<Rat>& m, bool trusted) {
  if (m.is_zero_poly() || m.deg() < 1) throw std::domain_error("extension: modulus must be nonconstant");
  if (!is_one(m.lc())) throw std::domain_error("extension: modulus must be monic");
  if (!trusted && !irreducible_q(m)) throw std::domain_error("extension: reducible modulus");
  return std::make_shared<ExtCtx>(ExtCtx{m});
}

}  // namespace lines
