#pragma once

#include "mpoly.hpp"
#include "upoly.hpp"
#include "zpoly.hpp"

namespace lines {

// gcd dispatch: subresultant sequence over Q, monic Euclid elsewhere
template <class F>
UniPoly<F> gcd_poly(const UniPoly<F>& a, const UniPoly<F>& b) {
  return gcd_euclid(a, b);
}
inline UniPoly<Rat> gcd_poly(const UniPoly<Rat>& a, const UniPoly<Rat>& b) {
  return gcd_q(a, b);
}

template <class F>
UniPoly<F> squarefree_part(const UniPoly<F>& p) {
  if (p.is_zero_poly()) throw std::domain_error("squarefree part of zero");
  if (p.deg() == 0) return UniPoly<F>::constant(one_like(p.lc()));
  UniPoly<F> g = gcd_poly(p, p.derivative());
  return UniPoly<F>::divrem(p, g).first.monic();
}
inline UniPoly<Rat> squarefree_part(const UniPoly<Rat>& p) { return squarefree_part_q(p); }

// Resultant of two multivariate polynomials with respect to one variable,
// i.e. the determinant of the Sylvester matrix whose top block holds the
// coefficients of q. (With p = x-a, q = x-b this yields b-a.)
template <class F>
MultiPoly<F> resultant(const MultiPoly<F>& p, const MultiPoly<F>& q, int var) {
  int dp = p.degree_in(var), dq = q.degree_in(var);
  if (dp < 1 || dq < 1) throw std::domain_error("resultant: degree in variable must be positive");
  MultiPoly<F> r = resultant_prs(p.as_uni_in(var), q.as_uni_in(var));
  if ((dp & 1) && (dq & 1)) return -r;
  return r;
}

// univariate flavour, same convention
template <class F>
F resultant_u(const UniPoly<F>& p, const UniPoly<F>& q) {
  if (p.is_zero_poly() || q.is_zero_poly()) return F{};
  F r = resultant_prs(p, q);
  if ((p.deg() & 1) && (q.deg() & 1)) return -r;
  return r;
}

}  // namespace lines
