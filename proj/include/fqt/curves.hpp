// Elliptic curves in long Weierstrass form, over F_q and over F_q(T):
// invariants, point counting and group structure, torsion criteria for
// small characteristic, local reduction data, Frobenius chains and the
// Hasse invariant.

#ifndef FQT_CURVES_HPP
#define FQT_CURVES_HPP

#include <optional>
#include <string>
#include <vector>

#include "fqt/funcfield.hpp"

namespace fqt {

// Curve over the constant field F_q.
struct CurveQ {
  FieldElem a1, a2, a3, a4, a6;
  const FieldCtx& ctx() const { return *a1.ctx; }
  bool operator==(const CurveQ& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
  }
  std::string to_string() const;
};

// Curve over the rational function field F_q(T).
struct Curve {
  RatFunc a1, a2, a3, a4, a6;
  const FieldCtx& ctx() const { return a1.ctx(); }
  bool operator==(const Curve& o) const {
    return a1 == o.a1 && a2 == o.a2 && a3 == o.a3 && a4 == o.a4 && a6 == o.a6;
  }
  std::string to_string() const;

  static Curve from_parsed(const ParsedCurve& p) { return {p.a1, p.a2, p.a3, p.a4, p.a6}; }
  static Curve from_constants(const CurveQ& e);
};

Curve parse_curve_fqt(const FieldCtx& F, const std::string& text, const Bindings& b = {});

struct CurveInvariantsQ {
  FieldElem b2, b4, b6, b8, c4, c6, delta, j;
};
struct CurveInvariants {
  RatFunc b2, b4, b6, b8, c4, c6, delta, j;
};

FieldElem discriminant(const CurveQ& E);
RatFunc discriminant(const Curve& E);
// SingularCurve when delta = 0 (j undefined).
CurveInvariantsQ invariants(const CurveQ& E);
CurveInvariants invariants(const Curve& E);

// Coordinate change x = u^2 x' + r, y = u^3 y' + s u^2 x' + t; u nonzero.
CurveQ transform(const CurveQ& E, FieldElem u, FieldElem r, FieldElem s, FieldElem t);
Curve transform(const Curve& E, const RatFunc& u, const RatFunc& r, const RatFunc& s,
                const RatFunc& t);

// Coefficient-wise T -> 1/S (the model used to study the place at infinity).
Curve substitute_inverse(const Curve& E);
Curve shift_T(const Curve& E, FieldElem c);  // T -> T + c
// Reduce coefficients at T = a; PoleAtPlace if some a_i has a pole there.
CurveQ evaluate_at(const Curve& E, FieldElem a);

// Divides out pi^i from (a_i) at every linear place where all valuations
// allow, repeatedly; a canonical small model for display and comparison.
Curve reduce_linear_powers(const Curve& E);

// ---- points over F_q ---------------------------------------------------

struct ECPoint {
  bool inf = true;
  FieldElem x, y;
  static ECPoint infinity() { return {}; }
  static ECPoint at(FieldElem x, FieldElem y) { return {false, x, y}; }
};

long count_points(const CurveQ& E);                 // includes the point at infinity
std::vector<ECPoint> enumerate_points(const CurveQ& E);
bool on_curve(const CurveQ& E, const ECPoint& P);
ECPoint ec_neg(const CurveQ& E, const ECPoint& P);
ECPoint ec_add(const CurveQ& E, const ECPoint& P, const ECPoint& Q);
ECPoint ec_mul(const CurveQ& E, long k, const ECPoint& P);  // k >= 0
long point_order(const CurveQ& E, const ECPoint& P, long group_order);

// E(F_q) = Z/m x Z/n with m | n (m = 1 for cyclic groups); checks m | q - 1
// and the Hasse bound.
struct GroupStructure {
  long order, m, n;
};
GroupStructure group_structure(const CurveQ& E);

// Torsion existence predicates for char 2, 3, 5.  Each applicable flag is
// computed by a model-based criterion and independently by the group
// exponent; disagreement would be a bug and asserts.
struct TorsionFlags {
  std::optional<bool> has2, has4;  // char 2
  std::optional<bool> has3, has9;  // char 3
  std::optional<bool> has5;        // char 5
};
TorsionFlags torsion_predicates(const CurveQ& E);

// x-coordinate of [3](x, y) on Y^2 = X^3 + X^2 + a6 in characteristic 3;
// DenominatorVanishes at the x-coordinates of nontrivial 3-torsion.
FieldElem triple_x(const CurveQ& E, FieldElem x);

// Canonical nontrivial quadratic twist: by the smallest non-square in odd
// characteristic, by the smallest trace-1 element (Artin-Schreier) for
// ordinary curves in characteristic 2.
CurveQ quadratic_twist(const CurveQ& E);

// ---- reduction over F_q(T) ---------------------------------------------

enum class RedType { Good, SplitMult, NonSplitMult, Additive };
const char* red_type_name(RedType t);

struct LocalReduction {
  Place place;
  RedType type;
  CurveQ curve;     // reduction of the minimized integral model (may be singular)
  long count;       // smooth F_q-points including infinity
  long lambda;      // q + 1 - count (the trace; meaningful at good places)
  int v_delta;      // valuation of Delta of the minimized integral model
};

LocalReduction reduce_at(const Curve& E, const Place& v);

struct ReductionProfile {
  std::vector<LocalReduction> locals;  // canonical place order, q+1 entries
  const LocalReduction& at(const Place& v) const;
  const LocalReduction& at_infinity() const { return locals.back(); }
  bool split_at_infinity() const { return at_infinity().type == RedType::SplitMult; }
  bool semistable() const;
  std::vector<Place> additive_places() const;
  std::vector<Place> multiplicative_places() const;
};

ReductionProfile reduction_profile(const Curve& E);
// Same types and same counts at every place.
bool same_profile(const ReductionProfile& a, const ReductionProfile& b);

// j-invariant equality plus full profile equality.  For the curves handled
// here (nonconstant j, split multiplicative reduction at infinity) this
// decides F_q(T)-isomorphism.
bool same_curve(const Curve& a, const Curve& b);

// ---- Frobenius ---------------------------------------------------------

Curve frobenius_image(const Curve& E);   // a_i -> a_i^p
CurveQ frobenius_image(const CurveQ& E);
// Model-level preimage: all coefficients must be p-th powers.
std::optional<Curve> frobenius_preimage(const Curve& E);
// j not a p-th power in F_q(T); ConstantJInvariant for constant j.
bool is_frobenius_minimal(const Curve& E);

// ---- Hasse invariant ---------------------------------------------------

// Coefficient of X^(p-1) in (X^3 + a2 X^2 + a4 X + a6)^((p-1)/2) after
// depressing (a1 = a3 = 0).  Requires characteristic >= 5 and polynomial
// coefficients of the depressed model.
Poly hasse_invariant(const Curve& E);

// #E_a(F_q) == 1 - A_p(a)^((q-1)/(p-1)) mod p at a good linear place T - a.
bool hasse_congruence_at(const Curve& E, FieldElem a);

}  // namespace fqt

#endif
