#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"
#include "upoly.hpp"

namespace lines {

// Integer polynomial helpers backing exact gcd over Q. A rational polynomial
// is split into content * primitive integer part; gcds run on the primitive
// parts with the subresultant remainder sequence, which keeps coefficient
// growth polynomial instead of exponential.

using ZPoly = std::vector<Int>;  // low degree first, no leading zeros

ZPoly zp_normalize(ZPoly a);
int zp_deg(const ZPoly& a);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
Int zp_content(const ZPoly& a);
ZPoly zp_primitive(const ZPoly& a);
ZPoly zp_scale(const ZPoly& a, const Int& s);
ZPoly zp_exact_div_scalar(const ZPoly& a, const Int& s);
// pseudo remainder prem(a,b)
ZPoly zp_prem(const ZPoly& a, const ZPoly& b);
// primitive gcd via subresultant PRS
ZPoly zp_gcd(ZPoly a, ZPoly b);
// true division, throws if not exact
ZPoly zp_exact_div(const ZPoly& a, const ZPoly& b);
bool zp_divides(const ZPoly& d, const ZPoly& a);

// content (a Rat) and primitive integer part of a rational polynomial
std::pair<Rat, ZPoly> q_to_z(const UniPoly<Rat>& p);
UniPoly<Rat> z_to_q(const ZPoly& p);

// monic gcd over Q by the subresultant route
UniPoly<Rat> gcd_q(const UniPoly<Rat>& a, const UniPoly<Rat>& b);
UniPoly<Rat> squarefree_part_q(const UniPoly<Rat>& p);

}  // namespace lines
