#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "ext.hpp"
#include "gf.hpp"
#include "rational.hpp"
#include "upoly.hpp"
#include "zpoly.hpp"

namespace lines {

// monic irreducible factors with multiplicities, plus the constant in front
struct FactorsQ {
  Rat unit;
  std::vector<std::pair<UniPoly<Rat>, int>> factors;  // (monic irreducible, multiplicity)
};

// complete factorization over GF(p); input need not be squarefree
struct FactorsP {
  GFp unit;
  std::vector<std::pair<UniPoly<GFp>, int>> factors;
};

FactorsP factor_gfp(const UniPoly<GFp>& f);
FactorsQ factor_q_poly(const UniPoly<Rat>& f);

bool irreducible_q(const UniPoly<Rat>& m);

// Builds the arithmetic context for Q[t]/(m). When `trusted` is false the
// minimal polynomial is checked for irreducibility and a reducible input is
// rejected with std::domain_error.
std::shared_ptr<const ExtCtx> make_extension(const UniPoly<Rat>& m, bool trusted = false);

// all roots of f in GF(p), by scan (fields used here are small)
std::vector<GFp> roots_gfp(const UniPoly<GFp>& f);

}  // namespace lines
