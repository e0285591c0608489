#include "fqt/gf.hpp"

#include <algorithm>
#include <cassert>

namespace fqt {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ContextMismatch: return "ContextMismatch";
    case Errc::PoleAtPlace: return "PoleAtPlace";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnboundName: return "UnboundName";
    case Errc::NotAWeierstrassEquation: return "NotAWeierstrassEquation";
    case Errc::WrongDegree: return "WrongDegree";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::WrongCharacteristic: return "WrongCharacteristic";
    case Errc::NotIntegral: return "NotIntegral";
    case Errc::ConstantJInvariant: return "ConstantJInvariant";
    case Errc::DenominatorVanishes: return "DenominatorVanishes";
    case Errc::NotSplitAtInfinity: return "NotSplitAtInfinity";
    case Errc::ProfileInconsistent: return "ProfileInconsistent";
    case Errc::NonIntegralDegree: return "NonIntegralDegree";
    case Errc::OffsetNotPowerOfP: return "OffsetNotPowerOfP";
    case Errc::ZeroCycle: return "ZeroCycle";
    case Errc::ConstraintViolated: return "ConstraintViolated";
    case Errc::UnknownEntry: return "UnknownEntry";
  }
  return "Unknown";
}

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p (ascending coefficients), used only for the
// modulus search.
using PolyP = std::vector<int>;

int deg(const PolyP& f) {
  for (int i = (int)f.size() - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of monic division f mod g (g monic).
PolyP rem(PolyP f, const PolyP& g, int p) {
  int dg = deg(g);
  for (int i = deg(f); i >= dg; --i) {
    int c = f[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= dg; ++j)
      f[i - dg + j] = ((f[i - dg + j] - c * g[j]) % p + p) % p;
  }
  f.resize(std::max(dg, 1));
  return f;
}

bool divides(const PolyP& g, const PolyP& f, int p) { return deg(rem(f, g, p)) < 0; }

// Trial division by every monic polynomial of degree 1 .. deg(f)/2.
bool irreducible(const PolyP& f, int p) {
  int d = deg(f);
  for (int dd = 1; dd <= d / 2; ++dd) {
    long long count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (long long k = 0; k < count; ++k) {
      PolyP g(dd + 1, 0);
      long long t = k;
      for (int i = 0; i < dd; ++i) { g[i] = (int)(t % p); t /= p; }
      g[dd] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

FieldCtx FieldCtx::create(int p, int e) { return FieldCtx(p, e); }

FieldCtx::FieldCtx(int p, int e) {
  if (!is_prime(p)) fail(Errc::NotPrime, "p = " + std::to_string(p) + " is not prime");
  if (p > 97) fail(Errc::FieldTooLarge, "prime p = " + std::to_string(p) + " exceeds 97");
  if (e < 1) fail(Errc::FieldTooLarge, "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 4096) fail(Errc::FieldTooLarge, "q = p^e exceeds 4096");
  }

  p_ = p;
  e_ = e;
  q_ = (int)q;
  if (e == 1) {
    modulus_ = {0, 1};  // x itself; the field is just Z/p
  } else {
    // Smallest irreducible monic modulus in lexicographic order on
    // (c0, c1, ..., c_{e-1}) with c0 most significant.
    bool found = false;
    for (long long k = 0; k < q && !found; ++k) {
      PolyP cand(e + 1, 0);
      cand[e] = 1;
      long long t = k;
      for (int i = e - 1; i >= 0; --i) { cand[i] = (int)(t % p); t /= p; }
      // t consumed least-significant-last so cand[0] varies slowest
      if (irreducible(cand, p)) {
        modulus_ = cand;
        found = true;
      }
    }
    assert(found);
  }
  red_.assign(e, 0);
  for (int i = 0; i < e; ++i) red_[i] = (p - modulus_[i] % p) % p;
  build_tables();
}

FieldElem FieldCtx::gen() const {
  if (e_ < 2) fail(Errc::UnboundName, "generator g is only defined for extension fields");
  return {this, (uint16_t)p_};  // digits (0,1,0,...)
}

FieldElem FieldCtx::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return {this, (uint16_t)r};
}

FieldElem FieldCtx::from_value(int v) const {
  if (v < 0 || v >= q_) fail(Errc::ContextMismatch, "element value out of range");
  return {this, (uint16_t)v};
}

FieldElem FieldCtx::from_digits(const std::vector<int>& d) const {
  if ((int)d.size() > e_) fail(Errc::ContextMismatch, "too many digits for this field");
  int v = 0;
  for (int i = (int)d.size() - 1; i >= 0; --i) {
    if (d[i] < 0 || d[i] >= p_) fail(Errc::ContextMismatch, "digit out of range");
    v = v * p_ + d[i];
  }
  return {this, (uint16_t)v};
}

std::vector<int> FieldCtx::digits(FieldElem a) const {
  std::vector<int> d(e_, 0);
  int v = a.v;
  for (int i = 0; i < e_; ++i) { d[i] = v % p_; v /= p_; }
  return d;
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
  if (!a.ctx->same_field(*b.ctx)) fail(Errc::ContextMismatch, "add across fields");
  if (e_ == 1) return {this, (uint16_t)((a.v + b.v) % p_)};
  int v = 0, pw = 1, x = a.v, y = b.v;
  for (int i = 0; i < e_; ++i) {
    v += ((x % p_ + y % p_) % p_) * pw;
    x /= p_; y /= p_; pw *= p_;
  }
  return {this, (uint16_t)v};
}

FieldElem FieldCtx::neg(FieldElem a) const {
  int v = 0, pw = 1, x = a.v;
  for (int i = 0; i < e_; ++i) {
    v += ((p_ - x % p_) % p_) * pw;
    x /= p_; pw *= p_;
  }
  return {this, (uint16_t)v};
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
  if (!a.ctx->same_field(*b.ctx)) fail(Errc::ContextMismatch, "mul across fields");
  if (e_ == 1) return {this, (uint16_t)((a.v * b.v) % p_)};
  int da[13], db[13], prod[25] = {0};
  int x = a.v, y = b.v;
  for (int i = 0; i < e_; ++i) { da[i] = x % p_; x /= p_; db[i] = y % p_; y /= p_; }
  for (int i = 0; i < e_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < e_; ++j) prod[i + j] += da[i] * db[j];
  }
  for (int i = 2 * e_ - 2; i >= e_; --i) {
    int c = prod[i] % p_;
    if (c == 0) continue;
    for (int j = 0; j < e_; ++j) prod[i - e_ + j] += c * red_[j];
  }
  int v = 0, pw = 1;
  for (int i = 0; i < e_; ++i) { v += (prod[i] % p_) * pw; pw *= p_; }
  return {this, (uint16_t)v};
}

FieldElem FieldCtx::pow(FieldElem a, long long n) const {
  assert(n >= 0);
  FieldElem r = one(), base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

FieldElem FieldCtx::inv(FieldElem a) const {
  if (a.is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  return pow(a, q_ - 2);
}

FieldElem FieldCtx::div(FieldElem a, FieldElem b) const {
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  return mul(a, inv(b));
}

FieldElem FieldCtx::frob(FieldElem a, int k) const {
  FieldElem r = a;
  for (int i = 0; i < k; ++i) r = pow(r, p_);
  return r;
}

FieldElem FieldCtx::pth_root(FieldElem a) const { return frob(a, e_ - 1); }

void FieldCtx::build_tables() {
  square_.assign(q_, 0);
  sqrt_.assign(q_, -1);
  for (int v = q_ - 1; v >= 0; --v) {  // downwards so smaller roots win
    FieldElem a{this, (uint16_t)v};
    FieldElem s = mul(a, a);
    square_[s.v] = 1;
    sqrt_[s.v] = (int16_t)v;
  }
  if (p_ == 2) {
    as_root_.assign(q_, -1);
    for (int v = q_ - 1; v >= 0; --v) {
      FieldElem z{this, (uint16_t)v};
      FieldElem c = add(mul(z, z), z);
      as_root_[c.v] = (int16_t)v;
    }
  }
}

bool FieldCtx::is_square(FieldElem a) const { return square_[a.v] != 0; }

std::optional<FieldElem> FieldCtx::sqrt(FieldElem a) const {
  if (sqrt_[a.v] < 0) return std::nullopt;
  return FieldElem{this, (uint16_t)sqrt_[a.v]};
}

int FieldCtx::abs_trace(FieldElem a) const {
  FieldElem t = a, pk = a;
  for (int i = 1; i < e_; ++i) {
    pk = pow(pk, p_);
    t = add(t, pk);
  }
  assert(t.v < p_);  // the trace lands in the prime field
  return t.v;
}

std::optional<FieldElem> FieldCtx::artin_schreier_root(FieldElem c) const {
  if (p_ != 2) fail(Errc::WrongCharacteristic, "Artin-Schreier roots require characteristic 2");
  if (as_root_[c.v] < 0) return std::nullopt;
  return FieldElem{this, (uint16_t)as_root_[c.v]};
}

std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (int v = 0; v < q_; ++v) out.push_back({this, (uint16_t)v});
  return out;
}

std::string FieldCtx::display(FieldElem a) const {
  if (e_ == 1) return std::to_string(a.v);
  std::string s = "[";
  auto d = digits(a);
  for (int i = 0; i < e_; ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + "]";
}

std::string FieldCtx::to_expr(FieldElem a) const {
  if (a.is_zero()) return "0";
  auto d = digits(a);
  std::string s;
  for (int i = e_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(d[i]);
    } else {
      if (d[i] != 1) s += std::to_string(d[i]) + "*";
      s += (i == 1) ? "g" : "g^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace fqt
