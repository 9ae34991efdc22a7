#include "surface.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace lines {

namespace {

// representatives of P^3(F_p): leading coordinate normalized to 1
template <class Visit>
void for_each_projective_point(uint64_t p, Visit&& visit) {
  std::array<GFp, 4> x{GFp(0, p), GFp(0, p), GFp(0, p), GFp(0, p)};
  for (int lead = 0; lead < 4; ++lead) {
    for (int i = 0; i < 4; ++i) x[i] = GFp(0, p);
    x[lead] = GFp(1, p);
    // enumerate the free coordinates after the leading one
    int nfree = 3 - lead;
    std::vector<uint64_t> idx(static_cast<size_t>(nfree), 0);
    while (true) {
      for (int k = 0; k < nfree; ++k) x[lead + 1 + k] = GFp(static_cast<int64_t>(idx[static_cast<size_t>(k)]), p);
      visit(x);
      int k = nfree - 1;
      while (k >= 0 && ++idx[static_cast<size_t>(k)] == p) {
        idx[static_cast<size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
    if (nfree == 0) break;
  }
}

}  // namespace

GFp reduce_rat(const Rat& c, uint64_t p) {
  Int num = c.get_num(), den = c.get_den();
  Int pm(static_cast<unsigned long>(p));
  if (den % pm == 0) throw PrimeRejectionError("prime divides a coefficient denominator");
  Int nr = num % pm, dr = den % pm;
  GFp n(nr.get_si(), p), d(dr.get_si(), p);
  return n / d;
}

Surface<GFp> reduce_surface(const Surface<Rat>& s, uint64_t p) {
  MultiPoly<GFp> g(4);
  for (const auto& [e, c] : s.f.terms()) g.add_term(e, reduce_rat(c, p));
  if (g.is_zero_poly() || g.total_degree() != s.degree)
    throw PrimeRejectionError("reduction mod p drops the degree");
  return Surface<GFp>(s.degree, std::move(g));
}

SmoothnessReport smoothness_probe(const Surface<GFp>& s) {
  uint64_t p = s.f.any_coeff().modulus();
  std::array<MultiPoly<GFp>, 4> grad = {s.f.derivative(0), s.f.derivative(1), s.f.derivative(2),
                                        s.f.derivative(3)};
  SmoothnessReport rep;
  bool singular = false;
  std::array<GFp, 4> bad{};
  for_each_projective_point(p, [&](const std::array<GFp, 4>& x) {
    if (singular) return;
    std::vector<GFp> pt(x.begin(), x.end());
    if (!is_zero(s.f.eval(pt))) return;
    for (int i = 0; i < 4; ++i)
      if (!is_zero(grad[i].eval(pt))) return;
    singular = true;
    bad = x;
  });
  if (singular) {
    rep.verdict = Smoothness::Singular;
    std::array<std::string, 4> w;
    for (int i = 0; i < 4; ++i) w[i] = to_string(bad[i]);
    rep.witness = w;
    rep.detail = "singular point over F_" + std::to_string(p);
  } else {
    rep.verdict = Smoothness::Smooth;
    rep.smooth_primes.push_back(p);
    rep.detail = "no singular point in P^3(F_" + std::to_string(p) + ")";
  }
  return rep;
}

SmoothnessReport smoothness_probe(const Surface<Rat>& s, const std::vector<uint64_t>& primes) {
  SmoothnessReport rep;
  for (uint64_t p : primes) {
    Surface<GFp> sp = [&]() -> Surface<GFp> {
      return reduce_surface(s, p);
    }();
    SmoothnessReport sub = smoothness_probe(sp);
    if (sub.verdict == Smoothness::Smooth) {
      // smooth reduction at a good prime certifies the generic fiber
      rep.verdict = Smoothness::Smooth;
      rep.smooth_primes.push_back(p);
      rep.detail = "smooth reduction at p=" + std::to_string(p);
      return rep;
    }
    // check the witness exactly over Q
    if (sub.witness) {
      std::vector<Rat> pt(4);
      bool ok = true;
      for (int i = 0; i < 4; ++i) pt[i] = parse_rat((*sub.witness)[i]);
      if (is_zero(s.f.eval(pt))) {
        for (int i = 0; i < 4 && ok; ++i) ok = is_zero(s.f.derivative(i).eval(pt));
        if (ok) {
          rep.verdict = Smoothness::Singular;
          rep.witness = sub.witness;
          rep.detail = "singular point verified over Q";
          return rep;
        }
      }
    }
    rep.detail = "singular reduction at p=" + std::to_string(p) + ", not verified over Q";
  }
  rep.verdict = Smoothness::Inconclusive;
  if (rep.detail.empty()) rep.detail = "no probe prime accepted";
  return rep;
}

SurfaceDoc read_surface_doc(std::istream& in) {
  SurfaceDoc doc;
  std::string lineStr;
  bool sawHeader = false;
  while (std::getline(in, lineStr)) {
    auto hash = lineStr.find('#');
    if (hash != std::string::npos) lineStr.erase(hash);
    std::istringstream ls(lineStr);
    std::string key;
    if (!(ls >> key)) continue;
    if (key == "surface-format:") {
      int v = 0;
      ls >> v;
      if (v != 1) throw std::invalid_argument("unsupported surface format version");
      sawHeader = true;
    } else if (key == "degree:") {
      ls >> doc.degree;
    } else if (key == "field:") {
      std::string f;
      ls >> f;
      if (f == "Q") {
        doc.rational = true;
      } else if (f == "Fp") {
        doc.rational = false;
        ls >> doc.p;
        if (doc.p < 2) throw std::invalid_argument("bad prime in surface file");
      } else {
        throw std::invalid_argument("unknown field descriptor: " + f);
      }
    } else if (key == "term:") {
      std::array<int, 4> e{};
      std::string coeff;
      if (!(ls >> e[0] >> e[1] >> e[2] >> e[3] >> coeff))
        throw std::invalid_argument("malformed term line");
      doc.terms.emplace_back(e, coeff);
    } else if (!key.empty()) {
      throw std::invalid_argument("unknown key in surface file: " + key);
    }
  }
  if (!sawHeader) throw std::invalid_argument("missing surface-format header");
  if (doc.degree < 1) throw std::invalid_argument("missing or bad degree");
  return doc;
}

SurfaceDoc surface_doc_of(const Surface<Rat>& s) {
  SurfaceDoc doc;
  doc.degree = s.degree;
  doc.rational = true;
  for (const auto& [e, c] : s.f.terms())
    doc.terms.push_back({{e[0], e[1], e[2], e[3]}, to_string(c)});
  return doc;
}

SurfaceDoc surface_doc_of(const Surface<GFp>& s) {
  SurfaceDoc doc;
  doc.degree = s.degree;
  doc.rational = false;
  doc.p = s.f.any_coeff().modulus();
  for (const auto& [e, c] : s.f.terms())
    doc.terms.push_back({{e[0], e[1], e[2], e[3]}, to_string(c)});
  return doc;
}

Surface<Rat> rat_surface_of(const SurfaceDoc& doc) {
  if (!doc.rational) throw std::invalid_argument("surface file is not over Q");
  MultiPoly<Rat> f(4);
  for (const auto& [e, c] : doc.terms) {
    Expo ex{};
    for (int i = 0; i < 4; ++i) ex[i] = static_cast<uint16_t>(e[i]);
    f.add_term(ex, parse_rat(c));
  }
  return Surface<Rat>(doc.degree, std::move(f));
}

Surface<GFp> gfp_surface_of(const SurfaceDoc& doc) {
  if (doc.rational) throw std::invalid_argument("surface file is not over F_p");
  MultiPoly<GFp> f(4);
  for (const auto& [e, c] : doc.terms) {
    Expo ex{};
    for (int i = 0; i < 4; ++i) ex[i] = static_cast<uint16_t>(e[i]);
    f.add_term(ex, GFp(std::stoll(c), doc.p));
  }
  return Surface<GFp>(doc.degree, std::move(f));
}

void write_surface_doc(std::ostream& out, const SurfaceDoc& doc) {
  out << "surface-format: 1\n";
  out << "degree: " << doc.degree << "\n";
  if (doc.rational) out << "field: Q\n";
  else out << "field: Fp " << doc.p << "\n";
  for (const auto& [e, c] : doc.terms)
    out << "term: " << e[0] << " " << e[1] << " " << e[2] << " " << e[3] << " " << c << "\n";
}

}  // namespace lines
