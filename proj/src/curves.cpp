#include "fqt/curves.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <numeric>

namespace fqt {

namespace {

// Always-on internal invariant check (survives NDEBUG builds).
void check(bool cond, const char* msg) {
  if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + msg);
}

}  // namespace

// ---- construction and printing -----------------------------------------

Curve Curve::from_constants(const CurveQ& e) {
  return {RatFunc::constant(e.a1), RatFunc::constant(e.a2), RatFunc::constant(e.a3),
          RatFunc::constant(e.a4), RatFunc::constant(e.a6)};
}

Curve parse_curve_fqt(const FieldCtx& F, const std::string& text, const Bindings& b) {
  return Curve::from_parsed(parse_curve(F, text, b));
}

namespace {

// state: 0 = zero, 1 = one, 2 = anything else
std::string weq_string(const std::array<std::string, 5>& cs, const std::array<int, 5>& st) {
  auto term = [](int state, std::string c, const std::string& mono) -> std::string {
    if (state == 0) return "";
    if (mono.empty()) return c;
    if (state == 1) return mono;
    if (c.find('+') != std::string::npos || c.find('/') != std::string::npos) c = "(" + c + ")";
    return c + "*" + mono;
  };
  std::string lhs = "Y^2";
  std::string t1 = term(st[0], cs[0], "X*Y");
  std::string t3 = term(st[2], cs[2], "Y");
  if (!t1.empty()) lhs += "+" + t1;
  if (!t3.empty()) lhs += "+" + t3;
  std::string rhs = "X^3";
  std::string t2 = term(st[1], cs[1], "X^2");
  std::string t4 = term(st[3], cs[3], "X");
  std::string t6 = term(st[4], cs[4], "");
  if (!t2.empty()) rhs += "+" + t2;
  if (!t4.empty()) rhs += "+" + t4;
  if (!t6.empty()) rhs += "+" + t6;
  return lhs + "=" + rhs;
}

}  // namespace

std::string CurveQ::to_string() const {
  const FieldCtx& F = ctx();
  auto st = [&](FieldElem c) { return c.is_zero() ? 0 : (c == F.one() ? 1 : 2); };
  return weq_string({F.to_expr(a1), F.to_expr(a2), F.to_expr(a3), F.to_expr(a4), F.to_expr(a6)},
                    {st(a1), st(a2), st(a3), st(a4), st(a6)});
}

std::string Curve::to_string() const {
  RatFunc one = RatFunc::constant(ctx().one());
  auto st = [&](const RatFunc& c) { return c.is_zero() ? 0 : (c == one ? 1 : 2); };
  return weq_string(
      {a1.to_string(), a2.to_string(), a3.to_string(), a4.to_string(), a6.to_string()},
      {st(a1), st(a2), st(a3), st(a4), st(a6)});
}

// ---- invariants ---------------------------------------------------------

namespace {

template <class K, class CI>
struct BInv {
  K b2, b4, b6, b8, c4, c6, delta;
};

template <class K, class CI>
BInv<K, CI> binv(const K& a1, const K& a2, const K& a3, const K& a4, const K& a6, CI ci) {
  K b2 = a1 * a1 + ci(4) * a2;
  K b4 = ci(2) * a4 + a1 * a3;
  K b6 = a3 * a3 + ci(4) * a6;
  K b8 = a1 * a1 * a6 + ci(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  K c4 = b2 * b2 - ci(24) * b4;
  K c6 = -(b2 * b2 * b2) + ci(36) * b2 * b4 - ci(216) * b6;
  K delta = -(b2 * b2 * b8) - ci(8) * (b4 * b4 * b4) - ci(27) * (b6 * b6) + ci(9) * b2 * b4 * b6;
  return {b2, b4, b6, b8, c4, c6, delta};
}

auto ci_q(const FieldCtx& F) {
  return [&F](long n) { return F.from_int(n); };
}
auto ci_t(const FieldCtx& F) {
  return [&F](long n) { return RatFunc::constant(F.from_int(n)); };
}

}  // namespace

FieldElem discriminant(const CurveQ& E) {
  return binv<FieldElem, decltype(ci_q(E.ctx()))>(E.a1, E.a2, E.a3, E.a4, E.a6, ci_q(E.ctx())).delta;
}

RatFunc discriminant(const Curve& E) {
  return binv<RatFunc, decltype(ci_t(E.ctx()))>(E.a1, E.a2, E.a3, E.a4, E.a6, ci_t(E.ctx())).delta;
}

CurveInvariantsQ invariants(const CurveQ& E) {
  auto b = binv<FieldElem, decltype(ci_q(E.ctx()))>(E.a1, E.a2, E.a3, E.a4, E.a6, ci_q(E.ctx()));
  if (b.delta.is_zero()) fail(Errc::SingularCurve, "delta = 0, no j-invariant");
  FieldElem j = b.c4 * b.c4 * b.c4 / b.delta;
  return {b.b2, b.b4, b.b6, b.b8, b.c4, b.c6, b.delta, j};
}

CurveInvariants invariants(const Curve& E) {
  auto b = binv<RatFunc, decltype(ci_t(E.ctx()))>(E.a1, E.a2, E.a3, E.a4, E.a6, ci_t(E.ctx()));
  if (b.delta.is_zero()) fail(Errc::SingularCurve, "delta = 0, no j-invariant");
  RatFunc j = b.c4 * b.c4 * b.c4 / b.delta;
  return {b.b2, b.b4, b.b6, b.b8, b.c4, b.c6, b.delta, j};
}

// ---- coordinate changes -------------------------------------------------

namespace {

template <class K, class CI>
std::array<K, 5> transform_coeffs(const K& a1, const K& a2, const K& a3, const K& a4, const K& a6,
                                  const K& u, const K& r, const K& s, const K& t, CI ci) {
  K u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  K n1 = (a1 + ci(2) * s) / u;
  K n2 = (a2 - s * a1 + ci(3) * r - s * s) / u2;
  K n3 = (a3 + r * a1 + ci(2) * t) / u3;
  K n4 = (a4 - s * a3 + ci(2) * r * a2 - (t + r * s) * a1 + ci(3) * r * r - ci(2) * s * t) / u4;
  K n6 = (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6;
  return {n1, n2, n3, n4, n6};
}

}  // namespace

CurveQ transform(const CurveQ& E, FieldElem u, FieldElem r, FieldElem s, FieldElem t) {
  if (u.is_zero()) fail(Errc::DivisionByZero, "transform with u = 0");
  auto n = transform_coeffs<FieldElem, decltype(ci_q(E.ctx()))>(E.a1, E.a2, E.a3, E.a4, E.a6, u, r,
                                                                s, t, ci_q(E.ctx()));
  return {n[0], n[1], n[2], n[3], n[4]};
}

Curve transform(const Curve& E, const RatFunc& u, const RatFunc& r, const RatFunc& s,
                const RatFunc& t) {
  if (u.is_zero()) fail(Errc::DivisionByZero, "transform with u = 0");
  auto n = transform_coeffs<RatFunc, decltype(ci_t(E.ctx()))>(E.a1, E.a2, E.a3, E.a4, E.a6, u, r, s,
                                                              t, ci_t(E.ctx()));
  return {n[0], n[1], n[2], n[3], n[4]};
}

Curve substitute_inverse(const Curve& E) {
  return {E.a1.substitute_inverse(), E.a2.substitute_inverse(), E.a3.substitute_inverse(),
          E.a4.substitute_inverse(), E.a6.substitute_inverse()};
}

Curve shift_T(const Curve& E, FieldElem c) {
  return {E.a1.shift(c), E.a2.shift(c), E.a3.shift(c), E.a4.shift(c), E.a6.shift(c)};
}

CurveQ evaluate_at(const Curve& E, FieldElem a) {
  return {E.a1.evaluate(a), E.a2.evaluate(a), E.a3.evaluate(a), E.a4.evaluate(a),
          E.a6.evaluate(a)};
}

Curve reduce_linear_powers(const Curve& E) {
  const FieldCtx& F = E.ctx();
  Curve cur = E;
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto a : F.elements()) {
      Place v = Place::at(a);
      auto ok = [&](const RatFunc& f, int i) { return f.is_zero() || *valuation(f, v) >= i; };
      bool all_zero = cur.a1.is_zero() && cur.a2.is_zero() && cur.a3.is_zero() &&
                      cur.a4.is_zero() && cur.a6.is_zero();
      if (all_zero) return cur;
      if (ok(cur.a1, 1) && ok(cur.a2, 2) && ok(cur.a3, 3) && ok(cur.a4, 4) && ok(cur.a6, 6)) {
        RatFunc pi = RatFunc::from(Poly::from_coeffs(F, {-a, F.one()}));
        RatFunc z = RatFunc(F);
        cur = transform(cur, pi, z, z, z);
        changed = true;
      }
    }
  }
  return cur;
}

// ---- points over F_q ----------------------------------------------------

namespace {

// Number of y with y^2 + h*y = fx, roots written to out.
int y_solutions(const FieldCtx& F, FieldElem h, FieldElem fx, FieldElem out[2]) {
  if (F.p() == 2) {
    if (h.is_zero()) {
      out[0] = *F.sqrt(fx);  // squaring is bijective in characteristic 2
      return 1;
    }
    FieldElem c = fx / (h * h);
    auto z = F.artin_schreier_root(c);
    if (!z) return 0;
    out[0] = h * *z;
    out[1] = h * (*z + F.one());
    return 2;
  }
  // odd characteristic: y = (-h +- sqrt(h^2 + 4 fx)) / 2
  FieldElem disc = h * h + F.from_int(4) * fx;
  FieldElem half = F.inv(F.from_int(2));
  if (disc.is_zero()) {
    out[0] = -h * half;
    return 1;
  }
  auto s = F.sqrt(disc);
  if (!s) return 0;
  out[0] = (-h + *s) * half;
  out[1] = (-h - *s) * half;
  return 2;
}

FieldElem rhs_f(const CurveQ& E, FieldElem x) {
  return ((x + E.a2) * x + E.a4) * x + E.a6;
}

FieldElem lhs_h(const CurveQ& E, FieldElem x) { return E.a1 * x + E.a3; }

long affine_solution_count(const CurveQ& E) {
  const FieldCtx& F = E.ctx();
  long n = 0;
  FieldElem out[2];
  for (auto x : F.elements()) n += y_solutions(F, lhs_h(E, x), rhs_f(E, x), out);
  return n;
}

// The unique singular point of a singular Weierstrass cubic is Galois-stable,
// hence rational; nullopt only for smooth curves.
std::optional<ECPoint> singular_point(const CurveQ& E) {
  const FieldCtx& F = E.ctx();
  FieldElem out[2];
  for (auto x : F.elements()) {
    int k = y_solutions(F, lhs_h(E, x), rhs_f(E, x), out);
    for (int i = 0; i < k; ++i) {
      FieldElem y = out[i];
      FieldElem fx = E.a1 * y - (F.from_int(3) * x * x + F.from_int(2) * E.a2 * x + E.a4);
      FieldElem fy = F.from_int(2) * y + E.a1 * x + E.a3;
      if (fx.is_zero() && fy.is_zero()) return ECPoint::at(x, y);
    }
  }
  return std::nullopt;
}

}  // namespace

long count_points(const CurveQ& E) {
  if (discriminant(E).is_zero()) fail(Errc::SingularCurve, "point count of a singular curve");
  long n = affine_solution_count(E) + 1;
  long q = E.ctx().q();
  long tr = q + 1 - n;
  check(tr * tr <= 4 * q, "Hasse bound violated by point count");
  return n;
}

std::vector<ECPoint> enumerate_points(const CurveQ& E) {
  if (discriminant(E).is_zero()) fail(Errc::SingularCurve, "points of a singular curve");
  const FieldCtx& F = E.ctx();
  std::vector<ECPoint> pts{ECPoint::infinity()};
  FieldElem out[2];
  for (auto x : F.elements()) {
    int k = y_solutions(F, lhs_h(E, x), rhs_f(E, x), out);
    for (int i = 0; i < k; ++i) pts.push_back(ECPoint::at(x, out[i]));
  }
  return pts;
}

bool on_curve(const CurveQ& E, const ECPoint& P) {
  if (P.inf) return true;
  FieldElem lhs = P.y * P.y + lhs_h(E, P.x) * P.y;
  return lhs == rhs_f(E, P.x);
}

ECPoint ec_neg(const CurveQ& E, const ECPoint& P) {
  if (P.inf) return P;
  return ECPoint::at(P.x, -P.y - E.a1 * P.x - E.a3);
}

ECPoint ec_add(const CurveQ& E, const ECPoint& P, const ECPoint& Q) {
  if (P.inf) return Q;
  if (Q.inf) return P;
  const FieldCtx& F = E.ctx();
  FieldElem x1 = P.x, y1 = P.y, x2 = Q.x, y2 = Q.y;
  if (x1 == x2 && (y1 + y2 + E.a1 * x2 + E.a3).is_zero()) return ECPoint::infinity();
  FieldElem lam{&F, 0}, nu{&F, 0};
  if (x1 == x2) {
    FieldElem den = F.from_int(2) * y1 + E.a1 * x1 + E.a3;
    lam = (F.from_int(3) * x1 * x1 + F.from_int(2) * E.a2 * x1 + E.a4 - E.a1 * y1) / den;
    nu = (-(x1 * x1 * x1) + E.a4 * x1 + F.from_int(2) * E.a6 - E.a3 * y1) / den;
  } else {
    lam = (y2 - y1) / (x2 - x1);
    nu = y1 - lam * x1;
  }
  FieldElem x3 = lam * lam + E.a1 * lam - E.a2 - x1 - x2;
  FieldElem y3 = -(lam + E.a1) * x3 - nu - E.a3;
  return ECPoint::at(x3, y3);
}

ECPoint ec_mul(const CurveQ& E, long k, const ECPoint& P) {
  assert(k >= 0);
  ECPoint r = ECPoint::infinity(), base = P;
  while (k > 0) {
    if (k & 1) r = ec_add(E, r, base);
    base = ec_add(E, base, base);
    k >>= 1;
  }
  return r;
}

long point_order(const CurveQ& E, const ECPoint& P, long group_order) {
  for (long d = 1; d <= group_order; ++d) {
    if (group_order % d != 0) continue;
    if (ec_mul(E, d, P).inf) return d;
  }
  check(false, "point order does not divide the group order");
  return 0;
}

GroupStructure group_structure(const CurveQ& E) {
  long N = count_points(E);
  long n = 1;
  for (const auto& P : enumerate_points(E)) {
    n = std::lcm(n, point_order(E, P, N));
    if (n == N) break;
  }
  check(N % n == 0, "group exponent must divide the order");
  long m = N / n;
  check(n % m == 0, "E(F_q) = Z/m x Z/n requires m | n");
  check((E.ctx().q() - 1) % m == 0, "Weil pairing requires m | q - 1");
  return {N, m, n};
}

// ---- torsion criteria ---------------------------------------------------

namespace {

// Y^2 + XY = X^3 + A2 X^2 + A6 form for ordinary curves in characteristic 2.
CurveQ char2_a2_form(const CurveQ& E) {
  const FieldCtx& F = E.ctx();
  check(!E.a1.is_zero(), "characteristic-2 normal form needs a1 != 0");
  CurveQ E2 = transform(E, E.a1, F.zero(), F.zero(), F.zero());
  FieldElem r = E2.a3;
  FieldElem t = E2.a4 + r * r;
  CurveQ E3 = transform(E2, F.one(), r, F.zero(), t);
  check(E3.a1 == F.one() && E3.a3.is_zero() && E3.a4.is_zero(), "char-2 normal form failed");
  return E3;
}

// Y^2 = X^3 + a2 X^2 + a4 X + a6 in odd characteristic.
CurveQ depressed_form(const CurveQ& E) {
  const FieldCtx& F = E.ctx();
  FieldElem half = F.inv(F.from_int(2));
  return transform(E, F.one(), F.zero(), -E.a1 * half, -E.a3 * half);
}

}  // namespace

TorsionFlags torsion_predicates(const CurveQ& E) {
  const FieldCtx& F = E.ctx();
  int p = F.p();
  if (p != 2 && p != 3 && p != 5)
    fail(Errc::WrongCharacteristic, "torsion predicates cover characteristics 2, 3, 5");
  CurveInvariantsQ inv = invariants(E);
  GroupStructure gs = group_structure(E);
  TorsionFlags fl;
  if (p == 2) {
    bool m2 = !inv.j.is_zero();  // ordinary iff a rational 2-torsion point exists
    check(m2 == (gs.n % 2 == 0), "char-2 2-torsion routes disagree");
    fl.has2 = m2;
    bool m4 = false;
    if (m2) m4 = F.abs_trace(char2_a2_form(E).a2) == 0;
    check(m4 == (gs.n % 4 == 0), "char-2 4-torsion routes disagree");
    fl.has4 = m4;
  } else if (p == 3) {
    bool m3 = !inv.b2.is_zero() && F.is_square(inv.b2);
    check(m3 == (gs.n % 3 == 0), "char-3 3-torsion routes disagree");
    fl.has3 = m3;
    bool m9 = false;
    if (m3) {
      FieldElem a6c = -F.inv(inv.j);  // the Y^2 = X^3 + X^2 + a6 model has a6 = -1/j
      for (auto u : F.elements()) {
        if (u * u * u - u == a6c) {
          m9 = true;
          break;
        }
      }
    }
    check(m9 == (gs.n % 9 == 0), "char-3 9-torsion routes disagree");
    fl.has9 = m9;
  } else {
    // A of the depressed form y^2 = x^3 + Ax + B; 5-torsion iff 2A is a
    // nonzero fourth power.
    FieldElem A = -inv.c4 / F.from_int(48);
    FieldElem twoA = F.from_int(2) * A;
    bool m5 = false;
    if (!twoA.is_zero()) m5 = F.pow(twoA, (F.q() - 1) / 4) == F.one();
    check(m5 == (gs.n % 5 == 0), "char-5 5-torsion routes disagree");
    fl.has5 = m5;
  }
  return fl;
}

FieldElem triple_x(const CurveQ& E, FieldElem x) {
  const FieldCtx& F = E.ctx();
  if (F.p() != 3) fail(Errc::WrongCharacteristic, "triple_x needs characteristic 3");
  if (!(E.a1.is_zero() && E.a3.is_zero() && E.a4.is_zero() && E.a2 == F.one()))
    fail(Errc::WrongCharacteristic, "triple_x needs the Y^2 = X^3 + X^2 + a6 model");
  FieldElem x3 = x * x * x;
  FieldElem den = x3 + E.a6;
  if (den.is_zero()) fail(Errc::DenominatorVanishes, "x is a 3-torsion x-coordinate");
  FieldElem x9 = x3 * x3 * x3;
  FieldElem num = x9 - E.a6 * x3 + E.a6 * E.a6 * E.a6;
  return num / (den * den);
}

CurveQ quadratic_twist(const CurveQ& E) {
  const FieldCtx& F = E.ctx();
  if (F.p() == 2) {
    if (E.a1.is_zero())
      fail(Errc::WrongCharacteristic, "Artin-Schreier twist needs an ordinary curve (a1 != 0)");
    CurveQ n = char2_a2_form(E);
    for (auto d : F.elements()) {
      if (F.abs_trace(d) == 1) return {n.a1, n.a2 + d, n.a3, n.a4, n.a6};
    }
    check(false, "no trace-1 element found");
  }
  CurveQ d = depressed_form(E);
  for (auto c : F.elements()) {
    if (!c.is_zero() && !F.is_square(c))
      return {F.zero(), c * d.a2, F.zero(), c * c * d.a4, c * c * c * d.a6};
  }
  check(false, "no non-square found in a field of odd order");
  return E;
}

// ---- local reduction ----------------------------------------------------

const char* red_type_name(RedType t) {
  switch (t) {
    case RedType::Good: return "good";
    case RedType::SplitMult: return "split_multiplicative";
    case RedType::NonSplitMult: return "nonsplit_multiplicative";
    case RedType::Additive: return "additive";
  }
  return "?";
}

namespace {

RatFunc place_uniformizer(const FieldCtx& F, FieldElem a) {
  return RatFunc::from(Poly::from_coeffs(F, {-a, F.one()}));
}

// Scale so every coefficient is integral at the finite place a.
Curve integralize(const Curve& E, FieldElem a) {
  Place v = Place::at(a);
  int m = 0;
  auto consider = [&](const RatFunc& f, int i) {
    if (f.is_zero()) return;
    int val = *valuation(f, v);
    if (val < 0) m = std::max(m, (-val + i - 1) / i);
  };
  consider(E.a1, 1);
  consider(E.a2, 2);
  consider(E.a3, 3);
  consider(E.a4, 4);
  consider(E.a6, 6);
  if (m == 0) return E;
  RatFunc z = RatFunc(E.ctx());
  return transform(E, place_uniformizer(E.ctx(), a).pow(-m), z, z, z);
}

bool integral_at(const Curve& E, const Place& v) {
  auto ok = [&](const RatFunc& f, int) { return f.is_zero() || *valuation(f, v) >= 0; };
  return ok(E.a1, 1) && ok(E.a2, 2) && ok(E.a3, 3) && ok(E.a4, 4) && ok(E.a6, 6);
}

// One minimization round: try u = uniformizer with constant r, s, t.
// Candidates are pruned with the residue congruences of the transformation
// law; each surviving candidate is verified by full valuations.
Curve minimize(Curve E, FieldElem a) {
  const FieldCtx& F = E.ctx();
  Place v = Place::at(a);
  RatFunc pi = place_uniformizer(F, a);
  const int p = F.p();
  while (true) {
    int vd = *valuation(discriminant(E), v);
    if (vd < 12) break;
    FieldElem r1 = E.a1.evaluate(a), r2 = E.a2.evaluate(a), r3 = E.a3.evaluate(a),
              r4 = E.a4.evaluate(a), r6 = E.a6.evaluate(a);
    std::vector<std::array<FieldElem, 3>> cands;  // (r, s, t)
    if (p >= 5) {
      FieldElem s = -r1 / F.from_int(2);
      FieldElem r = -(r2 - s * r1 - s * s) / F.from_int(3);
      FieldElem t = -(r3 + r * r1) / F.from_int(2);
      cands.push_back({r, s, t});
    } else if (p == 3) {
      FieldElem s = -r1 / F.from_int(2);
      if ((r2 - s * r1 - s * s).is_zero()) {
        for (auto r : F.elements()) {
          FieldElem t = -(r3 + r * r1) / F.from_int(2);
          cands.push_back({r, s, t});
        }
      }
    } else {  // p == 2
      if (r1.is_zero() && r3.is_zero()) {
        for (auto s : F.elements()) {
          FieldElem r = r2 + s * s;
          if (!(r4 + r * r).is_zero()) continue;
          FieldElem t = *F.sqrt(r6 + r * r4 + r * r * r2 + r * r * r);
          cands.push_back({r, s, t});
        }
      }
    }
    bool applied = false;
    for (auto& [r, s, t] : cands) {
      Curve E2 = transform(E, pi, RatFunc::constant(r), RatFunc::constant(s), RatFunc::constant(t));
      if (integral_at(E2, v)) {
        E = E2;
        applied = true;
        break;
      }
    }
    if (!applied) break;
  }
  return E;
}

LocalReduction classify_at(const Curve& integral, FieldElem a, const Place& reported) {
  const FieldCtx& F = integral.ctx();
  const long q = F.q();
  Place v = Place::at(a);
  CurveQ R = evaluate_at(integral, a);
  int vd = *valuation(discriminant(integral) /*nonzero for smooth input*/, v);
  LocalReduction lr{reported, RedType::Good, R, 0, 0, vd};
  if (!discriminant(R).is_zero()) {
    lr.count = count_points(R);
    lr.lambda = q + 1 - lr.count;
    return lr;
  }
  auto sing = singular_point(R);
  check(sing.has_value(), "singular reduction must have a rational singular point");
  long smooth = affine_solution_count(R) - 1 + 1;  // drop the singular point, add infinity
  lr.count = smooth;
  lr.lambda = q + 1 - smooth;
  if (smooth == q - 1) lr.type = RedType::SplitMult;
  else if (smooth == q + 1) lr.type = RedType::NonSplitMult;
  else if (smooth == q) lr.type = RedType::Additive;
  else check(false, "smooth point count of a singular cubic must be q-1, q or q+1");
  return lr;
}

}  // namespace

LocalReduction reduce_at(const Curve& E, const Place& v) {
  if (discriminant(E).is_zero()) fail(Errc::SingularCurve, "reduction of a singular curve");
  if (!v.infinite) {
    Curve M = minimize(integralize(E, v.a), v.a);
    return classify_at(M, v.a, v);
  }
  const FieldCtx& F = E.ctx();
  Curve Einf = substitute_inverse(E);
  FieldElem zero = F.zero();
  Curve M = minimize(integralize(Einf, zero), zero);
  return classify_at(M, zero, Place::infinity());
}

ReductionProfile reduction_profile(const Curve& E) {
  ReductionProfile prof;
  for (const auto& v : all_places(E.ctx())) prof.locals.push_back(reduce_at(E, v));
  return prof;
}

const LocalReduction& ReductionProfile::at(const Place& v) const {
  for (const auto& l : locals)
    if (l.place == v) return l;
  fail(Errc::ContextMismatch, "place not present in this profile");
}

bool ReductionProfile::semistable() const {
  return std::none_of(locals.begin(), locals.end(),
                      [](const LocalReduction& l) { return l.type == RedType::Additive; });
}

std::vector<Place> ReductionProfile::additive_places() const {
  std::vector<Place> out;
  for (const auto& l : locals)
    if (l.type == RedType::Additive) out.push_back(l.place);
  return out;
}

std::vector<Place> ReductionProfile::multiplicative_places() const {
  std::vector<Place> out;
  for (const auto& l : locals)
    if (l.type == RedType::SplitMult || l.type == RedType::NonSplitMult) out.push_back(l.place);
  return out;
}

bool same_profile(const ReductionProfile& a, const ReductionProfile& b) {
  if (a.locals.size() != b.locals.size()) return false;
  for (size_t i = 0; i < a.locals.size(); ++i) {
    if (a.locals[i].type != b.locals[i].type) return false;
    if (a.locals[i].count != b.locals[i].count) return false;
  }
  return true;
}

bool same_curve(const Curve& a, const Curve& b) {
  if (invariants(a).j != invariants(b).j) return false;
  return same_profile(reduction_profile(a), reduction_profile(b));
}

// ---- Frobenius ----------------------------------------------------------

Curve frobenius_image(const Curve& E) {
  int p = E.ctx().p();
  Curve r{E.a1.pow(p), E.a2.pow(p), E.a3.pow(p), E.a4.pow(p), E.a6.pow(p)};
  if (!discriminant(E).is_zero())
    check(invariants(r).j == invariants(E).j.pow(p), "Frobenius must raise j to the p-th power");
  return r;
}

CurveQ frobenius_image(const CurveQ& E) {
  const FieldCtx& F = E.ctx();
  return {F.frob(E.a1), F.frob(E.a2), F.frob(E.a3), F.frob(E.a4), F.frob(E.a6)};
}

std::optional<Curve> frobenius_preimage(const Curve& E) {
  Curve r = E;
  if (!E.a1.is_pth_power(&r.a1)) return std::nullopt;
  if (!E.a2.is_pth_power(&r.a2)) return std::nullopt;
  if (!E.a3.is_pth_power(&r.a3)) return std::nullopt;
  if (!E.a4.is_pth_power(&r.a4)) return std::nullopt;
  if (!E.a6.is_pth_power(&r.a6)) return std::nullopt;
  return r;
}

bool is_frobenius_minimal(const Curve& E) {
  RatFunc j = invariants(E).j;
  if (j.is_constant())
    fail(Errc::ConstantJInvariant, "Frobenius minimality is undefined for constant j");
  return !j.is_pth_power();
}

// ---- Hasse invariant -----------------------------------------------------

Poly hasse_invariant(const Curve& E) {
  const FieldCtx& F = E.ctx();
  if (F.p() < 5) fail(Errc::WrongCharacteristic, "Hasse invariant needs characteristic >= 5");
  RatFunc half = RatFunc::constant(F.inv(F.from_int(2)));
  RatFunc z = RatFunc(F);
  Curve D = transform(E, RatFunc::constant(F.one()), z, -E.a1 * half, -E.a3 * half);
  if (!(D.a2.is_polynomial() && D.a4.is_polynomial() && D.a6.is_polynomial()))
    fail(Errc::NotIntegral, "Hasse invariant needs polynomial coefficients");
  // f = X^3 + a2 X^2 + a4 X + a6 as a polynomial in X over F_q[T]
  std::vector<Poly> f{D.a6.num(), D.a4.num(), D.a2.num(), Poly::one(F)};
  std::vector<Poly> pw{Poly::one(F)};
  int n = (F.p() - 1) / 2;
  for (int k = 0; k < n; ++k) {
    std::vector<Poly> nx(pw.size() + 3, Poly::zero(F));
    for (size_t i = 0; i < pw.size(); ++i)
      for (size_t jj = 0; jj < 4; ++jj) nx[i + jj] = nx[i + jj] + pw[i] * f[jj];
    pw = std::move(nx);
  }
  size_t idx = (size_t)(F.p() - 1);
  if (idx >= pw.size()) return Poly::zero(F);
  return pw[idx];
}

bool hasse_congruence_at(const Curve& E, FieldElem a) {
  const FieldCtx& F = E.ctx();
  Poly A = hasse_invariant(E);
  LocalReduction lr = reduce_at(E, Place::at(a));
  if (lr.type != RedType::Good)
    fail(Errc::SingularCurve, "Hasse congruence applies at good places only");
  FieldElem alpha = A.evaluate(a);
  long p = F.p();
  long aq = 0;  // A_q(a) = A_p(a)^((q-1)/(p-1)) lies in the prime field
  if (!alpha.is_zero()) {
    FieldElem nrm = F.pow(alpha, (F.q() - 1) / (p - 1));
    auto ds = F.digits(nrm);
    for (size_t i = 1; i < ds.size(); ++i) check(ds[i] == 0, "norm must lie in the prime field");
    aq = ds[0];
  }
  long want = ((1 - aq) % p + p) % p;
  return lr.count % p == want;
}

}  // namespace fqt
