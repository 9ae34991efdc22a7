#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "upoly.hpp"

namespace lines {

inline constexpr int kMaxVars = 6;

using Expo = std::array<uint16_t, kMaxVars>;

inline int expo_total(const Expo& e) {
  int t = 0;
  for (int i = 0; i < kMaxVars; ++i) t += e[i];
  return t;
}

// Graded lexicographic order; ties broken by the exponent vector itself.
struct GrlexLess {
  bool operator()(const Expo& a, const Expo& b) const {
    int ta = expo_total(a), tb = expo_total(b);
    if (ta != tb) return ta < tb;
    return a < b;
  }
};

// Sparse multivariate polynomial over a field F, up to kMaxVars variables.
// The term map is ordered (graded lex), which makes iteration, printing and
// serialization deterministic. No zero coefficients are ever stored.
template <class F>
class MultiPoly {
 public:
  using Terms = std::map<Expo, F, GrlexLess>;

  explicit MultiPoly(int nv = 4) : nv_(nv) {
    if (nv < 1 || nv > kMaxVars) throw std::invalid_argument("bad variable count");
  }

  int nvars() const { return nv_; }
  const Terms& terms() const { return t_; }
  bool is_zero_poly() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }

  static MultiPoly zero(int nv) { return MultiPoly(nv); }
  static MultiPoly constant(int nv, const F& c) {
    MultiPoly p(nv);
    p.add_term(Expo{}, c);
    return p;
  }
  static MultiPoly variable(int nv, int v, const F& one) {
    MultiPoly p(nv);
    Expo e{};
    e[v] = 1;
    p.add_term(e, one);
    return p;
  }

  void add_term(Expo e, const F& c) {
    if (is_zero(c)) return;
    for (int i = nv_; i < kMaxVars; ++i)
      if (e[i]) throw std::invalid_argument("exponent outside variable range");
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) t_.erase(it);
    }
  }

  F coeff(const Expo& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? F{} : it->second;
  }

  int total_degree() const {  // -1 for the zero polynomial
    if (t_.empty()) return -1;
    return expo_total(t_.rbegin()->first);
  }
  int degree_in(int v) const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, static_cast<int>(e[v]));
    return d;
  }
  bool is_homogeneous() const {
    if (t_.empty()) return true;
    int d = expo_total(t_.begin()->first);
    for (const auto& [e, c] : t_)
      if (expo_total(e) != d) return false;
    return true;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_arity(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    check_arity(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.t_) r.add_term(e, -c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(nv_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_arity(a, b);
    MultiPoly r(a.nv_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        Expo e;
        for (int i = 0; i < kMaxVars; ++i) e[i] = static_cast<uint16_t>(ea[i] + eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const F& s) {
    MultiPoly r(a.nv_);
    if (is_zero(s)) return r;
    for (const auto& [e, c] : a.t_) r.add_term(e, c * s);
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (a.nv_ != b.nv_) return false;
    if (a.t_.size() != b.t_.size()) return false;
    auto ia = a.t_.begin();
    auto ib = b.t_.begin();
    for (; ia != a.t_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly derivative(int v) const {
    MultiPoly r(nv_);
    for (const auto& [e, c] : t_) {
      if (e[v] == 0) continue;
      Expo d = e;
      d[v] -= 1;
      r.add_term(d, c * scalar_of_int(e[v], c));
    }
    return r;
  }

  // substitute var v := value (a scalar), keeping arity
  MultiPoly substitute(int v, const F& value) const {
    MultiPoly r(nv_);
    for (const auto& [e, c] : t_) {
      F f = c;
      for (int k = 0; k < e[v]; ++k) f = f * value;
      Expo d = e;
      d[v] = 0;
      r.add_term(d, f);
    }
    return r;
  }

  // substitute every variable by the given polynomial images
  MultiPoly substitute_all(const std::vector<MultiPoly>& img) const {
    if (static_cast<int>(img.size()) != nv_) throw std::invalid_argument("image count mismatch");
    int onv = img.empty() ? nv_ : img[0].nvars();
    MultiPoly r(onv);
    // cache powers per variable on demand
    std::vector<std::vector<MultiPoly>> pw(nv_);
    auto power = [&](int v, int k) -> const MultiPoly& {
      auto& vec = pw[v];
      if (vec.empty()) vec.push_back(MultiPoly::constant(onv, one_hint()));
      while (static_cast<int>(vec.size()) <= k) vec.push_back(vec.back() * img[v]);
      return vec[k];
    };
    for (const auto& [e, c] : t_) {
      MultiPoly term = MultiPoly::constant(onv, c);
      for (int v = 0; v < nv_; ++v)
        if (e[v]) term = term * power(v, e[v]);
      r = r + term;
    }
    return r;
  }

  F eval(const std::vector<F>& x) const {
    if (static_cast<int>(x.size()) != nv_) throw std::invalid_argument("point arity mismatch");
    F acc{};
    for (const auto& [e, c] : t_) {
      F f = c;
      for (int v = 0; v < nv_; ++v)
        for (int k = 0; k < e[v]; ++k) f = f * x[v];
      acc = acc + f;
    }
    return acc;
  }

  // coefficients with respect to one variable: result[k] = coeff of v^k
  std::vector<MultiPoly> coeffs_in(int v) const {
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(0, degree_in(v) + 1)), MultiPoly(nv_));
    for (const auto& [e, c] : t_) {
      Expo d = e;
      d[v] = 0;
      out[e[v]].add_term(d, c);
    }
    return out;
  }

  // exact division; throws std::domain_error when the division is not exact
  friend MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    check_arity(a, b);
    if (b.is_zero_poly()) throw std::domain_error("mpoly: division by zero");
    MultiPoly r = a, q(a.nv_);
    const auto& [eb, cb] = *b.t_.rbegin();
    F cbi = inv(cb);
    while (!r.is_zero_poly()) {
      const auto& [er, cr] = *r.t_.rbegin();
      Expo e;
      for (int i = 0; i < kMaxVars; ++i) {
        if (er[i] < eb[i]) throw std::domain_error("mpoly: inexact division");
        e[i] = static_cast<uint16_t>(er[i] - eb[i]);
      }
      F c = cr * cbi;
      MultiPoly t(a.nv_);
      t.add_term(e, c);
      q = q + t;
      r = r - t * b;
    }
    return q;
  }

  friend bool divides(const MultiPoly& b, const MultiPoly& a) {
    try {
      exact_div(a, b);
      return true;
    } catch (const std::domain_error&) {
      return false;
    }
  }

  // polynomial in variable v with the remaining variables in the coefficients
  UniPoly<MultiPoly> as_uni_in(int v) const {
    std::vector<MultiPoly> c = coeffs_in(v);
    return UniPoly<MultiPoly>(std::move(c));
  }

  // collapse to a univariate polynomial in v; all other variables must be absent
  UniPoly<F> to_uni(int v) const {
    std::vector<F> c(static_cast<size_t>(std::max(0, degree_in(v) + 1)), F{});
    for (const auto& [e, cf] : t_) {
      for (int i = 0; i < kMaxVars; ++i)
        if (i != v && e[i]) throw std::domain_error("to_uni: extra variables present");
      c[e[v]] = cf;
    }
    return UniPoly<F>(std::move(c));
  }

  static MultiPoly from_uni(const UniPoly<F>& p, int nv, int v) {
    MultiPoly r(nv);
    for (int i = 0; i <= p.deg(); ++i) {
      Expo e{};
      e[v] = static_cast<uint16_t>(i);
      r.add_term(e, p.coeff(i));
    }
    return r;
  }

  // a nonzero coefficient to use as field context; throws on the zero polynomial
  const F& any_coeff() const {
    if (t_.empty()) throw std::domain_error("zero polynomial has no coefficients");
    return t_.begin()->second;
  }

 private:
  F one_hint() const { return one_like(any_coeff()); }
  static void check_arity(const MultiPoly& a, const MultiPoly& b) {
    if (a.nv_ != b.nv_) throw std::invalid_argument("mpoly arity mismatch");
  }

  int nv_;
  Terms t_;
};

template <class F>
bool is_zero(const MultiPoly<F>& p) {
  return p.is_zero_poly();
}
template <class F>
MultiPoly<F> zero_like(const MultiPoly<F>& p) {
  return MultiPoly<F>(p.nvars());
}
template <class F>
MultiPoly<F> one_like(const MultiPoly<F>& p) {
  return MultiPoly<F>::constant(p.nvars(), one_like(p.any_coeff()));
}
template <class F>
MultiPoly<F> scalar_of_int(long v, const MultiPoly<F>& hint) {
  if (hint.is_zero_poly()) return MultiPoly<F>(hint.nvars());
  return MultiPoly<F>::constant(hint.nvars(), scalar_of_int(v, hint.any_coeff()));
}

// determinant of the matrix of second partials with respect to `vars`
template <class F>
MultiPoly<F> hessian_det(const MultiPoly<F>& f, const std::vector<int>& vars) {
  int n = static_cast<int>(vars.size());
  std::vector<std::vector<MultiPoly<F>>> m(n, std::vector<MultiPoly<F>>(n, MultiPoly<F>(f.nvars())));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      m[i][j] = f.derivative(vars[i]).derivative(vars[j]);
      if (j != i) m[j][i] = m[i][j];
    }
  // cofactor expansion; n is at most 4 here
  std::function<MultiPoly<F>(const std::vector<std::vector<MultiPoly<F>>>&)> det =
      [&](const std::vector<std::vector<MultiPoly<F>>>& a) -> MultiPoly<F> {
    int k = static_cast<int>(a.size());
    if (k == 1) return a[0][0];
    MultiPoly<F> acc(f.nvars());
    for (int c = 0; c < k; ++c) {
      if (a[0][c].is_zero_poly()) continue;
      std::vector<std::vector<MultiPoly<F>>> sub(k - 1, std::vector<MultiPoly<F>>(k - 1, MultiPoly<F>(f.nvars())));
      for (int i = 1; i < k; ++i) {
        int cc = 0;
        for (int j = 0; j < k; ++j) {
          if (j == c) continue;
          sub[i - 1][cc++] = a[i][j];
        }
      }
      MultiPoly<F> term = a[0][c] * det(sub);
      acc = (c % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
  };
  return det(m);
}

}  // namespace lines
