// The rational function field F_q(T): dense polynomials, reduced rational
// functions, places of P^1 and valuations, plus the expression parser used
// for curve and conductor input.

#ifndef FQT_FUNCFIELD_HPP
#define FQT_FUNCFIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fqt/gf.hpp"

namespace fqt {

class Poly {
 public:
  explicit Poly(const FieldCtx& F) : ctx_(&F) {}  // zero polynomial
  static Poly zero(const FieldCtx& F) { return Poly(F); }
  static Poly one(const FieldCtx& F) { return constant(F.one()); }
  static Poly constant(FieldElem c);
  static Poly variable(const FieldCtx& F);  // T
  static Poly from_coeffs(const FieldCtx& F, std::vector<FieldElem> c);

  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return (int)c_.size() - 1; }  // -1 for zero
  FieldElem coeff(int i) const;
  FieldElem leading() const;
  bool is_constant() const { return c_.size() <= 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(FieldElem c) const;
  Poly pow(int n) const;
  // Euclidean division; o must be nonzero.
  std::pair<Poly, Poly> divrem(const Poly& o) const;
  Poly operator%(const Poly& o) const { return divrem(o).second; }
  bool divides(const Poly& o) const;  // this | o
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly monic() const;
  Poly derivative() const;
  FieldElem evaluate(FieldElem a) const;
  int root_multiplicity(FieldElem a) const;
  static Poly gcd(Poly a, Poly b);  // monic, gcd(0,0) = 0
  // Substitute T -> T + c.
  Poly shift(FieldElem c) const;

  // True iff the polynomial is a p-th power; fills *root if requested.
  bool is_pth_power(Poly* root = nullptr) const;
  // Product of the distinct irreducible factors, monic.
  Poly radical() const;

  std::string to_string(const std::string& var = "T") const;

 private:
  const FieldCtx* ctx_;
  std::vector<FieldElem> c_;  // ascending, no trailing zeros
  void trim();
};

struct Place {
  bool infinite = false;
  FieldElem a;  // meaningful iff !infinite

  static Place at(FieldElem a) { return {false, a}; }
  static Place infinity() { return {true, {}}; }
  bool operator==(const Place& o) const {
    return infinite == o.infinite && (infinite || a == o.a);
  }
  std::string label() const;  // "inf" or the element display
};

// All q+1 places of P^1 in canonical order: finite places in element
// enumeration order, then infinity.
std::vector<Place> all_places(const FieldCtx& F);

class RatFunc {
 public:
  explicit RatFunc(const FieldCtx& F) : num_(F), den_(Poly::one(F)) {}
  RatFunc(Poly num, Poly den);  // reduces; den must be nonzero
  static RatFunc from(Poly p) { Poly one = Poly::one(p.ctx()); return RatFunc(std::move(p), one); }
  static RatFunc constant(FieldElem c) { return from(Poly::constant(c)); }

  const FieldCtx& ctx() const { return num_.ctx(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }  // monic, coprime to num
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_ == Poly::one(ctx()); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;  // DivisionByZero
  RatFunc pow(int n) const;                   // negative allowed for nonzero
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  FieldElem evaluate(FieldElem a) const;  // PoleAtPlace on poles
  bool is_pth_power(RatFunc* root = nullptr) const;
  // f(T) -> f(1/S), returned in the same formal variable.
  RatFunc substitute_inverse() const;
  // Substitute T -> T + c.
  RatFunc shift(FieldElem c) const;

  std::string to_string(const std::string& var = "T") const;

 private:
  Poly num_, den_;
};

// Valuation of f at the place v; nullopt encodes +infinity (f = 0).
std::optional<int> valuation(const Poly& f, const Place& v);
std::optional<int> valuation(const RatFunc& f, const Place& v);

enum class Splitting {
  Cube,                  // (T-b)^3
  SquareTimesLinear,     // (T-b)^2 (T-c)
  ThreeDistinctLinear,   // (T-a1)(T-a2)(T-a3)
  LinearTimesQuadratic,  // (T-a) q2, q2 irreducible
  IrreducibleCubic,
};

const char* splitting_name(Splitting s);

struct ConductorShape {
  Poly finite_part;  // monic cubic
  Splitting splitting;
  std::vector<FieldElem> simple_linear_roots;    // enumeration order
  std::optional<FieldElem> multiple_root;        // set for Cube / SquareTimesLinear
  bool square_free() const {
    return splitting != Splitting::Cube && splitting != Splitting::SquareTimesLinear;
  }
  // Linear places where the conductor vanishes, any multiplicity.
  std::vector<FieldElem> all_linear_roots() const;
};

// WrongDegree unless deg = 3 (the polynomial is made monic first).
ConductorShape classify_conductor(const Poly& n);

// ---- expression parser -------------------------------------------------

struct ParsedCurve {
  RatFunc a1, a2, a3, a4, a6;
};

// Bindings give values to free names (catalog parameters, CLI --bind).  The
// names T, X, Y are reserved; g is bound to the field generator when e >= 2.
using Bindings = std::map<std::string, FieldElem>;

// Parses a polynomial / rational function in T.  SyntaxError carries the
// byte offset of the offending token.
RatFunc parse_ratfunc(const FieldCtx& F, const std::string& text, const Bindings& b = {});
Poly parse_poly(const FieldCtx& F, const std::string& text, const Bindings& b = {});
// Parses a long Weierstrass equation "Y^2 + ... = X^3 + ...".
ParsedCurve parse_curve(const FieldCtx& F, const std::string& text, const Bindings& b = {});
// Parses a constant expression (used for place labels and --bind values).
FieldElem parse_constant(const FieldCtx& F, const std::string& text, const Bindings& b = {});

}  // namespace fqt

#endif
