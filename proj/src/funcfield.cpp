#include "fqt/funcfield.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>

namespace fqt {

// ---- Poly --------------------------------------------------------------

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(FieldElem c) {
  Poly f(*c.ctx);
  if (!c.is_zero()) f.c_ = {c};
  return f;
}

Poly Poly::variable(const FieldCtx& F) {
  Poly f(F);
  f.c_ = {F.zero(), F.one()};
  return f;
}

Poly Poly::from_coeffs(const FieldCtx& F, std::vector<FieldElem> c) {
  Poly f(F);
  f.c_ = std::move(c);
  f.trim();
  return f;
}

FieldElem Poly::coeff(int i) const {
  if (i < 0 || i >= (int)c_.size()) return ctx_->zero();
  return c_[i];
}

FieldElem Poly::leading() const {
  if (is_zero()) return ctx_->zero();
  return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*ctx_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), ctx_->zero());
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = coeff((int)i) + o.coeff((int)i);
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  Poly r(*ctx_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, ctx_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      r.c_[i + j] = r.c_[i + j] + c_[i] * o.c_[j];
  }
  r.trim();
  return r;
}

Poly Poly::operator*(FieldElem c) const { return *this * Poly::constant(c); }

Poly Poly::pow(int n) const {
  assert(n >= 0);
  Poly r = Poly::one(*ctx_), b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    b = b * b;
    n >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& o) const {
  if (o.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  Poly q(*ctx_), r = *this;
  int dq = degree() - o.degree();
  if (dq < 0) return {q, r};
  q.c_.assign(dq + 1, ctx_->zero());
  FieldElem lcinv = ctx_->inv(o.leading());
  for (int i = degree(); i >= o.degree(); --i) {
    FieldElem c = r.coeff(i);
    if (c.is_zero()) continue;
    FieldElem f = c * lcinv;
    q.c_[i - o.degree()] = f;
    for (int j = 0; j <= o.degree(); ++j) {
      int k = i - o.degree() + j;
      r.c_[k] = r.c_[k] - f * o.c_[j];
    }
  }
  q.trim();
  r.trim();
  return {q, r};
}

bool Poly::divides(const Poly& o) const {
  if (is_zero()) return o.is_zero();
  return o.divrem(*this).second.is_zero();
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * ctx_->inv(leading());
}

Poly Poly::derivative() const {
  Poly r(*ctx_);
  if (degree() < 1) return r;
  r.c_.resize(c_.size() - 1, ctx_->zero());
  for (int i = 1; i <= degree(); ++i) r.c_[i - 1] = c_[i] * ctx_->from_int(i);
  r.trim();
  return r;
}

FieldElem Poly::evaluate(FieldElem a) const {
  FieldElem r = ctx_->zero();
  for (int i = degree(); i >= 0; --i) r = r * a + c_[i];
  return r;
}

int Poly::root_multiplicity(FieldElem a) const {
  assert(!is_zero());
  Poly lin = Poly::from_coeffs(*ctx_, {-a, ctx_->one()});
  int m = 0;
  Poly f = *this;
  while (true) {
    auto [q, r] = f.divrem(lin);
    if (!r.is_zero()) return m;
    f = q;
    ++m;
  }
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly Poly::shift(FieldElem c) const {
  Poly lin = Poly::from_coeffs(*ctx_, {c, ctx_->one()});  // T + c
  Poly r(*ctx_);
  for (int i = degree(); i >= 0; --i) r = r * lin + Poly::constant(c_[i]);
  return r;
}

bool Poly::is_pth_power(Poly* root) const {
  const int p = ctx_->p();
  if (is_zero()) {
    if (root) *root = *this;
    return true;
  }
  for (int i = 0; i <= degree(); ++i)
    if (!c_[i].is_zero() && i % p != 0) return false;
  // F_q is perfect, so a polynomial in T^p is automatically a p-th power
  if (root) {
    std::vector<FieldElem> rc(degree() / p + 1, ctx_->zero());
    for (int i = 0; i <= degree(); i += p) rc[i / p] = ctx_->pth_root(c_[i]);
    *root = Poly::from_coeffs(*ctx_, std::move(rc));
  }
  return true;
}

Poly Poly::radical() const {
  assert(!is_zero());
  Poly result = Poly::one(*ctx_);
  Poly g = monic();
  while (g.degree() > 0) {
    Poly d = g.derivative();
    if (d.is_zero()) {
      Poly r(*ctx_);
      g.is_pth_power(&r);
      g = r.monic();
      continue;
    }
    Poly u = Poly::gcd(g, d);
    Poly s = g.divrem(u).first;  // distinct factors with multiplicity prime to p
    Poly overlap = Poly::gcd(s, result);
    result = result * s.divrem(overlap).first;
    g = u;
  }
  return result.monic();
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += "+";
    std::string cs = ctx_->to_expr(c_[i]);
    if (i == 0) {
      s += cs;
      continue;
    }
    if (cs != "1") {
      if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
      s += cs + "*";
    }
    s += (i == 1) ? var : var + "^" + std::to_string(i);
  }
  return s;
}

// ---- Place -------------------------------------------------------------

std::string Place::label() const {
  if (infinite) return "inf";
  return a.ctx->display(a);
}

std::vector<Place> all_places(const FieldCtx& F) {
  std::vector<Place> out;
  out.reserve(F.q() + 1);
  for (auto a : F.elements()) out.push_back(Place::at(a));
  out.push_back(Place::infinity());
  return out;
}

// ---- RatFunc -----------------------------------------------------------

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(Errc::DivisionByZero, "rational function with zero denominator");
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divrem(g).first;
    den_ = den_.divrem(g).first;
  }
  FieldElem lc = den_.leading();
  if (!(lc == num_.ctx().one())) {
    FieldElem inv = num_.ctx().inv(lc);
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
  if (num_.is_zero()) den_ = Poly::one(num_.ctx());
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) fail(Errc::DivisionByZero, "division by the zero function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(int n) const {
  if (n < 0) {
    if (is_zero()) fail(Errc::DivisionByZero, "negative power of zero");
    return RatFunc(den_, num_).pow(-n);
  }
  return RatFunc(num_.pow(n), den_.pow(n));
}

FieldElem RatFunc::evaluate(FieldElem a) const {
  FieldElem d = den_.evaluate(a);
  if (d.is_zero()) fail(Errc::PoleAtPlace, "pole at T = " + a.ctx->display(a));
  return num_.evaluate(a) / d;
}

bool RatFunc::is_pth_power(RatFunc* root) const {
  Poly rn(ctx()), rd(ctx());
  if (!num_.is_pth_power(&rn) || !den_.is_pth_power(&rd)) return false;
  if (root) *root = RatFunc(rn, rd);
  return true;
}

RatFunc RatFunc::substitute_inverse() const {
  if (is_zero()) return *this;
  const FieldCtx& F = ctx();
  int dn = num_.degree(), dd = den_.degree();
  std::vector<FieldElem> rn(dn + 1, F.zero()), rd(dd + 1, F.zero());
  for (int i = 0; i <= dn; ++i) rn[dn - i] = num_.coeff(i);
  for (int i = 0; i <= dd; ++i) rd[dd - i] = den_.coeff(i);
  Poly num = Poly::from_coeffs(F, std::move(rn));
  Poly den = Poly::from_coeffs(F, std::move(rd));
  Poly s = Poly::variable(F);
  if (dd > dn) num = num * s.pow(dd - dn);
  if (dn > dd) den = den * s.pow(dn - dd);
  return RatFunc(std::move(num), std::move(den));
}

RatFunc RatFunc::shift(FieldElem c) const { return RatFunc(num_.shift(c), den_.shift(c)); }

std::string RatFunc::to_string(const std::string& var) const {
  if (is_polynomial()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

// ---- valuations --------------------------------------------------------

std::optional<int> valuation(const Poly& f, const Place& v) {
  if (f.is_zero()) return std::nullopt;
  if (v.infinite) return -f.degree();
  return f.root_multiplicity(v.a);
}

std::optional<int> valuation(const RatFunc& f, const Place& v) {
  if (f.is_zero()) return std::nullopt;
  return *valuation(f.num(), v) - *valuation(f.den(), v);
}

// ---- conductor classification ------------------------------------------

const char* splitting_name(Splitting s) {
  switch (s) {
    case Splitting::Cube: return "cube";
    case Splitting::SquareTimesLinear: return "square_times_linear";
    case Splitting::ThreeDistinctLinear: return "three_distinct_linear";
    case Splitting::LinearTimesQuadratic: return "linear_times_quadratic";
    case Splitting::IrreducibleCubic: return "irreducible_cubic";
  }
  return "?";
}

std::vector<FieldElem> ConductorShape::all_linear_roots() const {
  std::vector<FieldElem> out = simple_linear_roots;
  if (multiple_root) out.push_back(*multiple_root);
  std::sort(out.begin(), out.end(), [](FieldElem x, FieldElem y) { return x.v < y.v; });
  return out;
}

ConductorShape classify_conductor(const Poly& n) {
  if (n.degree() != 3)
    fail(Errc::WrongDegree, "finite conductor must have degree 3, got " + std::to_string(n.degree()));
  const FieldCtx& F = n.ctx();
  Poly m = n.monic();
  ConductorShape shape{m, Splitting::IrreducibleCubic, {}, std::nullopt};
  std::vector<std::pair<FieldElem, int>> roots;
  for (auto a : F.elements()) {
    int mult = m.root_multiplicity(a);
    if (mult > 0) roots.push_back({a, mult});
  }
  int total = 0;
  for (auto& [a, mult] : roots) {
    total += mult;
    if (mult >= 2) shape.multiple_root = a;
    else shape.simple_linear_roots.push_back(a);
  }
  if (total == 3 && shape.multiple_root && roots.size() == 1)
    shape.splitting = Splitting::Cube;
  else if (total == 3 && shape.multiple_root)
    shape.splitting = Splitting::SquareTimesLinear;
  else if (total == 3)
    shape.splitting = Splitting::ThreeDistinctLinear;
  else if (total == 1)
    shape.splitting = Splitting::LinearTimesQuadratic;
  else if (total == 0)
    shape.splitting = Splitting::IrreducibleCubic;
  else
    fail(Errc::WrongDegree, "unexpected factor pattern");  // unreachable for cubics
  return shape;
}

// ---- parser ------------------------------------------------------------

namespace {

struct Token {
  enum Kind { Num, Ident, Op, End } kind;
  long long num = 0;
  std::string text;
  char op = 0;
  size_t pos = 0;
};

struct Lexer {
  const std::string& s;
  size_t i = 0;
  Token cur;

  explicit Lexer(const std::string& text) : s(text) { advance(); }

  void advance() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    cur.pos = i;
    if (i >= s.size()) {
      cur.kind = Token::End;
      return;
    }
    char c = s[i];
    if (std::isdigit((unsigned char)c)) {
      long long v = 0;
      size_t start = i;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        v = v * 10 + (s[i] - '0');
        if (v > 1000000000LL) fail(Errc::SyntaxError, "integer literal too large at offset " + std::to_string(start));
        ++i;
      }
      cur.kind = Token::Num;
      cur.num = v;
      return;
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      size_t start = i;
      while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
      cur.kind = Token::Ident;
      cur.text = s.substr(start, i - start);
      return;
    }
    if (std::string("+-*/^()=").find(c) != std::string::npos) {
      cur.kind = Token::Op;
      cur.op = c;
      ++i;
      return;
    }
    fail(Errc::SyntaxError, std::string("unexpected character '") + c + "' at offset " + std::to_string(i));
  }
};

// Polynomials in X and Y with coefficients in F_q(T).
struct BiPoly {
  const FieldCtx* F;
  std::map<std::pair<int, int>, RatFunc> t;  // (degX, degY) -> coeff

  static BiPoly make(const FieldCtx& F) { return {&F, {}}; }
  static BiPoly from_rat(const RatFunc& r) {
    BiPoly b{&r.ctx(), {}};
    if (!r.is_zero()) b.t.insert_or_assign({0, 0}, r);
    return b;
  }
  void set(int dx, int dy, RatFunc v) {
    if (!v.is_zero()) t.insert_or_assign({dx, dy}, std::move(v));
  }
  RatFunc coeff(int dx, int dy) const {
    auto it = t.find({dx, dy});
    if (it == t.end()) return RatFunc(*F);
    return it->second;
  }
  bool pure_t() const { return t.empty() || (t.size() == 1 && t.begin()->first == std::pair<int, int>{0, 0}); }
};

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  BiPoly r = a;
  for (auto& [k, v] : b.t) {
    auto it = r.t.find(k);
    if (it == r.t.end()) r.t.insert_or_assign(k, v);
    else {
      it->second = it->second + v;
      if (it->second.is_zero()) r.t.erase(it);
    }
  }
  return r;
}

BiPoly operator-(const BiPoly& a) {
  BiPoly r = a;
  for (auto& [k, v] : r.t) v = -v;
  return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r = BiPoly::make(*a.F);
  for (auto& [ka, va] : a.t)
    for (auto& [kb, vb] : b.t) {
      std::pair<int, int> k{ka.first + kb.first, ka.second + kb.second};
      auto it = r.t.find(k);
      if (it == r.t.end()) r.t.insert_or_assign(k, va * vb);
      else it->second = it->second + va * vb;
    }
  for (auto it = r.t.begin(); it != r.t.end();)
    it = it->second.is_zero() ? r.t.erase(it) : std::next(it);
  return r;
}

struct Parser {
  Lexer lex;
  const FieldCtx& F;
  const Bindings& binds;

  Parser(const FieldCtx& F, const std::string& text, const Bindings& b)
      : lex(text), F(F), binds(b) {}

  [[noreturn]] void err(const std::string& what) {
    fail(Errc::SyntaxError, what + " at offset " + std::to_string(lex.cur.pos));
  }

  bool at_op(char c) const { return lex.cur.kind == Token::Op && lex.cur.op == c; }

  BiPoly atom() {
    if (lex.cur.kind == Token::Num) {
      long long v = lex.cur.num;
      lex.advance();
      return BiPoly::from_rat(RatFunc::constant(F.from_int(v)));
    }
    if (lex.cur.kind == Token::Ident) {
      std::string name = lex.cur.text;
      size_t pos = lex.cur.pos;
      lex.advance();
      if (name == "T") return BiPoly::from_rat(RatFunc::from(Poly::variable(F)));
      if (name == "X") {
        BiPoly b = BiPoly::make(F);
        b.set(1, 0, RatFunc::constant(F.one()));
        return b;
      }
      if (name == "Y") {
        BiPoly b = BiPoly::make(F);
        b.set(0, 1, RatFunc::constant(F.one()));
        return b;
      }
      auto it = binds.find(name);
      if (it != binds.end()) return BiPoly::from_rat(RatFunc::constant(it->second));
      if (name == "g" && F.e() >= 2) return BiPoly::from_rat(RatFunc::constant(F.gen()));
      fail(Errc::UnboundName, "unbound name '" + name + "' at offset " + std::to_string(pos));
    }
    if (at_op('(')) {
      lex.advance();
      BiPoly b = expr();
      if (!at_op(')')) err("expected ')'");
      lex.advance();
      return b;
    }
    err("expected a value");
  }

  BiPoly factor() {
    BiPoly b = atom();
    while (at_op('^')) {
      lex.advance();
      if (lex.cur.kind != Token::Num) err("exponent must be a nonnegative integer literal");
      long long n = lex.cur.num;
      if (n > 512) err("exponent too large");
      lex.advance();
      BiPoly r = BiPoly::from_rat(RatFunc::constant(F.one()));
      BiPoly base = b;
      long long m = n;
      while (m > 0) {
        if (m & 1) r = r * base;
        base = base * base;
        m >>= 1;
      }
      b = r;
    }
    return b;
  }

  BiPoly term() {
    BiPoly b = factor();
    while (at_op('*') || at_op('/')) {
      char op = lex.cur.op;
      size_t pos = lex.cur.pos;
      lex.advance();
      BiPoly rhs = factor();
      if (op == '*') {
        b = b * rhs;
      } else {
        if (!rhs.pure_t())
          fail(Errc::NotAWeierstrassEquation,
               "division by a term containing X or Y at offset " + std::to_string(pos));
        RatFunc d = rhs.coeff(0, 0);
        if (d.is_zero()) fail(Errc::DivisionByZero, "division by zero at offset " + std::to_string(pos));
        BiPoly r = BiPoly::make(F);
        for (auto& [k, v] : b.t) r.t.insert_or_assign(k, v / d);
        b = r;
      }
    }
    return b;
  }

  BiPoly expr() {
    bool neg = false;
    if (at_op('+') || at_op('-')) {
      neg = lex.cur.op == '-';
      lex.advance();
    }
    BiPoly b = term();
    if (neg) b = -b;
    while (at_op('+') || at_op('-')) {
      char op = lex.cur.op;
      lex.advance();
      BiPoly rhs = term();
      b = (op == '+') ? b + rhs : b - rhs;
    }
    return b;
  }
};

RatFunc as_ratfunc(Parser& P, const BiPoly& b) {
  if (!b.pure_t()) P.err("X and Y are not allowed in a rational function");
  return b.coeff(0, 0);
}

}  // namespace

RatFunc parse_ratfunc(const FieldCtx& F, const std::string& text, const Bindings& b) {
  Parser P(F, text, b);
  BiPoly v = P.expr();
  if (P.lex.cur.kind != Token::End) P.err("unexpected trailing input");
  return as_ratfunc(P, v);
}

Poly parse_poly(const FieldCtx& F, const std::string& text, const Bindings& b) {
  RatFunc r = parse_ratfunc(F, text, b);
  if (!r.is_polynomial()) fail(Errc::WrongDegree, "expected a polynomial, got a proper fraction");
  return r.num();
}

FieldElem parse_constant(const FieldCtx& F, const std::string& text, const Bindings& b) {
  RatFunc r = parse_ratfunc(F, text, b);
  if (!r.is_constant()) fail(Errc::SyntaxError, "expected a constant expression");
  if (r.is_zero()) return F.zero();
  return r.num().coeff(0);
}

ParsedCurve parse_curve(const FieldCtx& F, const std::string& text, const Bindings& b) {
  Parser P(F, text, b);
  BiPoly lhs = P.expr();
  if (!P.at_op('=')) P.err("expected '=' in a curve equation");
  P.lex.advance();
  BiPoly rhs = P.expr();
  if (P.lex.cur.kind != Token::End) P.err("unexpected trailing input");

  BiPoly d = lhs - rhs;
  RatFunc y2 = d.coeff(0, 2);
  if (y2.is_zero()) fail(Errc::NotAWeierstrassEquation, "missing Y^2 term");
  if (!y2.is_constant()) fail(Errc::NotAWeierstrassEquation, "Y^2 coefficient must be constant");
  // scale so the Y^2 coefficient is 1
  BiPoly n = BiPoly::make(F);
  for (auto& [k, v] : d.t) n.t.insert_or_assign(k, v / y2);
  if (!(n.coeff(3, 0) == -RatFunc::constant(F.one())))
    fail(Errc::NotAWeierstrassEquation, "X^3 coefficient must be the negative of the Y^2 coefficient");

  ParsedCurve c{RatFunc(F), RatFunc(F), RatFunc(F), RatFunc(F), RatFunc(F)};
  for (auto& [k, v] : n.t) {
    auto [dx, dy] = k;
    if (dx == 0 && dy == 2) continue;
    else if (dx == 3 && dy == 0) continue;
    else if (dx == 1 && dy == 1) c.a1 = v;
    else if (dx == 0 && dy == 1) c.a3 = v;
    else if (dx == 2 && dy == 0) c.a2 = -v;
    else if (dx == 1 && dy == 0) c.a4 = -v;
    else if (dx == 0 && dy == 0) c.a6 = -v;
    else
      fail(Errc::NotAWeierstrassEquation,
           "unsupported term X^" + std::to_string(dx) + "*Y^" + std::to_string(dy));
  }
  return c;
}

}  // namespace fqt
