#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "gf.hpp"
#include "linalg.hpp"
#include "mpoly.hpp"
#include "polyops.hpp"
#include "rational.hpp"

namespace lines {

template <class F>
struct Surface {
  int degree;
  MultiPoly<F> f;  // homogeneous of the stated degree in x1..x4

  Surface(int d, MultiPoly<F> poly) : degree(d), f(std::move(poly)) {
    if (f.nvars() != 4) throw std::invalid_argument("surface polynomial must live in x1..x4");
    if (f.is_zero_poly()) throw std::invalid_argument("surface polynomial is zero");
    if (!f.is_homogeneous() || f.total_degree() != d)
      throw std::invalid_argument("surface polynomial is not homogeneous of the stated degree");
  }
};

// A line in P^3, stored as a basis of the corresponding rank-2 subspace plus
// canonical Pluecker coordinates (first nonzero coordinate scaled to 1).
// Lines compare equal exactly when their canonical Pluecker tuples agree.
template <class F>
class LineP3 {
 public:
  static LineP3 from_points(const std::array<F, 4>& u, const std::array<F, 4>& v) {
    LineP3 l;
    l.u_ = u;
    l.v_ = v;
    l.compute_pluecker();
    return l;
  }

  // from two independent linear forms a.x = 0, b.x = 0 (coefficient vectors)
  static LineP3 from_forms(const std::array<F, 4>& a, const std::array<F, 4>& b) {
    // kernel basis of the 2x4 system by elimination
    std::vector<std::vector<F>> m = {{a[0], a[1], a[2], a[3]}, {b[0], b[1], b[2], b[3]}};
    // forward eliminate
    int pivots[2] = {-1, -1};
    int r = 0;
    for (int c = 0; c < 4 && r < 2; ++c) {
      int pr = -1;
      for (int i = r; i < 2; ++i)
        if (!is_zero(m[i][c])) {
          pr = i;
          break;
        }
      if (pr < 0) continue;
      std::swap(m[pr], m[r]);
      F d = inv(m[r][c]);
      for (int j = 0; j < 4; ++j) m[r][j] = m[r][j] * d;
      for (int i = 0; i < 2; ++i) {
        if (i == r || is_zero(m[i][c])) continue;
        F f = m[i][c];
        for (int j = 0; j < 4; ++j) m[i][j] = m[i][j] - f * m[r][j];
      }
      pivots[r] = c;
      ++r;
    }
    if (r != 2) throw std::invalid_argument("line forms are not independent");
    F one = one_like(m[0][pivots[0]]);
    std::array<std::array<F, 4>, 2> basis{};
    int bi = 0;
    for (int c = 0; c < 4; ++c) {
      if (c == pivots[0] || c == pivots[1]) continue;
      std::array<F, 4> w{};
      for (auto& x : w) x = one - one;  // typed zero
      w[c] = one;
      w[pivots[0]] = -m[0][c];
      w[pivots[1]] = -m[1][c];
      basis[bi++] = w;
    }
    return from_points(basis[0], basis[1]);
  }

  const std::array<F, 4>& point_u() const { return u_; }
  const std::array<F, 4>& point_v() const { return v_; }
  const std::array<F, 6>& pluecker() const { return p_; }

  friend bool operator==(const LineP3& a, const LineP3& b) {
    for (int i = 0; i < 6; ++i)
      if (!(a.p_[i] == b.p_[i])) return false;
    return true;
  }
  friend bool operator!=(const LineP3& a, const LineP3& b) { return !(a == b); }

  // Pluecker pairing; zero exactly when the lines meet
  friend F pairing(const LineP3& a, const LineP3& b) {
    return a.p_[0] * b.p_[5] - a.p_[1] * b.p_[4] + a.p_[2] * b.p_[3] + a.p_[3] * b.p_[2] -
           a.p_[4] * b.p_[1] + a.p_[5] * b.p_[0];
  }

 private:
  void compute_pluecker() {
    // order: p01 p02 p03 p12 p13 p23
    int k = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) p_[k++] = u_[i] * v_[j] - u_[j] * v_[i];
    int nz = -1;
    for (int i = 0; i < 6; ++i)
      if (!is_zero(p_[i])) {
        nz = i;
        break;
      }
    if (nz < 0) throw std::invalid_argument("degenerate line (dependent points)");
    F d = inv(p_[nz]);
    for (int i = 0; i < 6; ++i) p_[i] = p_[i] * d;
    // quadric relation p01 p23 - p02 p13 + p03 p12 = 0 holds by construction;
    // keep the assertion as a bug trap
    F rel = p_[0] * p_[5] - p_[1] * p_[4] + p_[2] * p_[3];
    if (!is_zero(rel)) throw InternalCheckError("Pluecker relation violated");
  }

  std::array<F, 4> u_{}, v_{};
  std::array<F, 6> p_{};
};

// restriction of f to the parametrized line: a binary form in (s,t)
template <class F>
MultiPoly<F> restrict_to_line(const MultiPoly<F>& f, const LineP3<F>& line) {
  std::vector<MultiPoly<F>> img;
  img.reserve(4);
  for (int i = 0; i < 4; ++i) {
    MultiPoly<F> m(2);
    Expo es{};
    es[0] = 1;
    m.add_term(es, line.point_u()[i]);
    Expo et{};
    et[1] = 1;
    m.add_term(et, line.point_v()[i]);
    img.push_back(m);
  }
  return f.substitute_all(img);
}

template <class F>
bool line_on_surface(const Surface<F>& s, const LineP3<F>& line) {
  return restrict_to_line(s.f, line).is_zero_poly();
}

// Surface expanded along the line y3 = y4 = 0 in frame coordinates. The frame
// is the substitution x = T y; the stored polynomial is f(T y).
template <class F>
class Adapted {
 public:
  Adapted(int d, Mat4<F> frame, MultiPoly<F> ft) : d_(d), frame_(frame), ft_(std::move(ft)) {
    alphas_ = split_alphas(ft_, d_);
    validate();
  }

  int degree() const { return d_; }
  const Mat4<F>& frame() const { return frame_; }
  const MultiPoly<F>& poly() const { return ft_; }

  // alpha_{i,j} in K[x1,x2], the coefficient of x3^i x4^j (kept as a 4-var poly)
  const MultiPoly<F>& alpha(int i, int j) const {
    static const MultiPoly<F> kZero4(4);
    if (i < 0 || j < 0 || i + j > d_) return kZero4;
    return alphas_[static_cast<size_t>(i * (d_ + 1) + j)];
  }
  // scalar alpha_{i,j,k,l}: coefficient of x3^i x4^j x1^k x2^l
  F alpha_scalar(int i, int j, int k, int l) const {
    Expo e{};
    e[0] = static_cast<uint16_t>(k);
    e[1] = static_cast<uint16_t>(l);
    return alpha(i, j).coeff(e);
  }

  // residual fiber over the plane x4 = lambda x3: f(x1,x2,x3,lambda x3)/x3
  MultiPoly<F> residual_fiber(const F& lambda) const {
    MultiPoly<F> sub = subst_x4(ft_, lambda);
    return exact_div(sub, MultiPoly<F>::variable(4, 2, one_of_poly() /*x3*/));
  }
  // residual fiber over the plane x3 = 0: f(x1,x2,0,x4)/x4
  MultiPoly<F> residual_fiber_infinity() const {
    MultiPoly<F> sub = ft_.substitute(2, zero_of_poly());
    const F one = one_of_poly();
    return exact_div(sub, MultiPoly<F>::variable(4, 3, one));
  }

  static std::vector<MultiPoly<F>> split_alphas(const MultiPoly<F>& ft, int d) {
    std::vector<MultiPoly<F>> out(static_cast<size_t>((d + 1) * (d + 1)), MultiPoly<F>(4));
    for (const auto& [e, c] : ft.terms()) {
      int i = e[2], j = e[3];
      Expo r{};
      r[0] = e[0];
      r[1] = e[1];
      out[static_cast<size_t>(i * (d + 1) + j)].add_term(r, c);
    }
    return out;
  }

 private:
  F zero_of_poly() const { return zero_like(ft_.any_coeff()); }
  F one_of_poly() const { return one_like(ft_.any_coeff()); }
  MultiPoly<F> subst_x4(const MultiPoly<F>& g, const F& lambda) const {
    // x4 := lambda * x3
    MultiPoly<F> r(4);
    for (const auto& [e, c] : g.terms()) {
      F f = c;
      for (int k = 0; k < e[3]; ++k) f = f * lambda;
      Expo d = e;
      d[2] = static_cast<uint16_t>(d[2] + d[3]);
      d[3] = 0;
      r.add_term(d, f);
    }
    return r;
  }
  void validate() const {
    if (!alpha(0, 0).is_zero_poly())
      throw IncidenceError("adapted surface: line is not contained in the surface");
    if (alpha(0, 1).is_zero_poly())
      throw GenericityError("adapted surface: df/dx4 vanishes along the line");
  }

  int d_;
  Mat4<F> frame_;
  MultiPoly<F> ft_;
  std::vector<MultiPoly<F>> alphas_;
};

// Jacobian of the pencil map (alpha10 : alpha01) restricted to the line; its
// divisor on the line is the ramification divisor (degree 2d-4).
template <class F>
MultiPoly<F> pencil_jacobian(const Adapted<F>& a) {
  const auto& a10 = a.alpha(1, 0);
  const auto& a01 = a.alpha(0, 1);
  return a10.derivative(0) * a01.derivative(1) - a10.derivative(1) * a01.derivative(0);
}

template <class F>
struct FrameSearchResult {
  Adapted<F> adapted;
  int attempts;
};

// Moves the line to V(x3,x4) and retries random x1/x2 mixes and shears until
// the expansion satisfies the genericity constraints: alpha01 != 0, nonzero
// pencil Jacobian, and (best effort) no ramification point at (0:1:0:0).
template <class F>
FrameSearchResult<F> adapt_frame(const Surface<F>& s, const LineP3<F>& line, uint64_t seed = 1,
                                 int budget = 64) {
  if (!line_on_surface(s, line)) throw IncidenceError("adapt_frame: line does not lie on the surface");
  const F one = one_like(s.f.any_coeff());
  const F zero = zero_like(one);

  // base frame: columns u, v, completion
  std::array<F, 4> u = line.point_u(), v = line.point_v();
  Mat4<F> base{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) base[i][j] = zero;
  for (int i = 0; i < 4; ++i) {
    base[i][0] = u[i];
    base[i][1] = v[i];
  }
  // complete with two standard basis vectors keeping the matrix invertible
  {
    int filled = 2;
    for (int c = 0; c < 4 && filled < 4; ++c) {
      Mat4<F> probe = base;
      probe[c][filled] = one;
      // test invertibility by attempting inversion
      try {
        (void)mat4_inverse(probe, one);
        base = probe;
        ++filled;
      } catch (const std::domain_error&) {
        // try next axis
      }
    }
    if (filled != 4) throw InternalCheckError("adapt_frame: could not complete basis");
  }

  std::mt19937_64 rng(seed);
  auto small = [&](int span) {
    return scalar_of_int(static_cast<long>(rng() % (2 * static_cast<uint64_t>(span) + 1)) - span, one);
  };

  Mat4<F> tweak{};
  for (int attempt = 0; attempt < budget; ++attempt) {
    // tweak = identity + (x1,x2)-mix + shears x_i <- x_i + b_ij x_j (i<=2, j>=3)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) tweak[i][j] = (i == j) ? one : zero;
    if (attempt > 0) {
      // unimodular mix of the first two coordinates
      F m00 = small(2), m01 = small(2), m10 = small(2), m11 = small(2);
      if (is_zero(m00 * m11 - m01 * m10)) continue;
      tweak[0][0] = m00;
      tweak[0][1] = m01;
      tweak[1][0] = m10;
      tweak[1][1] = m11;
      for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 4; ++j) tweak[i][j] = small(2);
      // mixing x3,x4 moves the infinity fiber, useful when alpha01 degenerates
      F n22 = small(2), n23 = small(2), n32 = small(2), n33 = small(2);
      if (!is_zero(n22 * n33 - n23 * n32)) {
        tweak[2][2] = n22;
        tweak[2][3] = n23;
        tweak[3][2] = n32;
        tweak[3][3] = n33;
      }
    }
    Mat4<F> frame = mat4_mul(base, tweak);
    // substitute x = frame * y
    std::vector<MultiPoly<F>> img;
    img.reserve(4);
    for (int i = 0; i < 4; ++i) {
      MultiPoly<F> row(4);
      for (int j = 0; j < 4; ++j) {
        Expo e{};
        e[j] = 1;
        row.add_term(e, frame[i][j]);
      }
      img.push_back(row);
    }
    MultiPoly<F> ft = s.f.substitute_all(img);
    try {
      Adapted<F> ad(s.degree, frame, std::move(ft));
      MultiPoly<F> jac = pencil_jacobian(ad);
      if (jac.is_zero_poly()) continue;  // Gauss map degenerate in this frame
      // keep (0:1:0:0) away from the ramification points when possible
      Expo e{};
      e[1] = static_cast<uint16_t>(jac.total_degree());
      bool ram_at_origin = is_zero(jac.coeff(e));
      if (ram_at_origin && attempt + 1 < budget) continue;
      return {std::move(ad), attempt + 1};
    } catch (const IncidenceError&) {
      throw;
    } catch (const GenericityError&) {
      continue;
    }
  }
  throw GenericityError("adapt_frame: no admissible frame within the retry budget");
}

enum class Smoothness { Smooth, Singular, Inconclusive };

struct SmoothnessReport {
  Smoothness verdict = Smoothness::Inconclusive;
  std::vector<uint64_t> smooth_primes;          // primes with smooth reduction
  std::optional<std::array<std::string, 4>> witness;  // projective singular point
  std::string detail;
};

// exhaustive singular point search over P^3(F_p)
SmoothnessReport smoothness_probe(const Surface<GFp>& s);
// reduction probe over Q: smooth reduction at one good prime certifies
// smoothness of the characteristic zero surface
SmoothnessReport smoothness_probe(const Surface<Rat>& s, const std::vector<uint64_t>& primes);

// reduce a rational surface mod p; throws PrimeRejectionError when p divides
// a denominator or kills the leading structure
Surface<GFp> reduce_surface(const Surface<Rat>& s, uint64_t p);

GFp reduce_rat(const Rat& c, uint64_t p);

// ---- surface file dialect ----------------------------------------------
// surface-format: 1
// degree: 5
// field: Q | Fp <p>
// term: e1 e2 e3 e4 <coeff>
struct SurfaceDoc {
  int degree = 0;
  bool rational = true;
  uint64_t p = 0;
  std::vector<std::pair<std::array<int, 4>, std::string>> terms;
};

SurfaceDoc read_surface_doc(std::istream& in);
SurfaceDoc surface_doc_of(const Surface<Rat>& s);
SurfaceDoc surface_doc_of(const Surface<GFp>& s);
Surface<Rat> rat_surface_of(const SurfaceDoc& doc);
Surface<GFp> gfp_surface_of(const SurfaceDoc& doc);
void write_surface_doc(std::ostream& out, const SurfaceDoc& doc);

}  // namespace lines
