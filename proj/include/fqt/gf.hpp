// Finite field F_q, q = p^e <= 4096, with a canonical modulus so that equal
// (p, e) always yields the same field presentation.
//
// Elements are stored as packed base-p digit vectors: the element
// sum_i c_i g^i (g = class of x mod the modulus) is encoded as the integer
// sum_i c_i p^i.  Enumeration order, display and canonical choices (square
// roots, Artin-Schreier roots) all refer to this encoding.

#ifndef FQT_GF_HPP
#define FQT_GF_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fqt/errors.hpp"

namespace fqt {

class FieldCtx;

struct FieldElem {
  const FieldCtx* ctx = nullptr;
  uint16_t v = 0;

  bool is_zero() const { return v == 0; }
  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
};

// Immutable after construction.  Non-copyable so FieldElem back-pointers stay
// valid; create() relies on guaranteed RVO.
class FieldCtx {
 public:
  static FieldCtx create(int p, int e);

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  int p() const { return p_; }
  int e() const { return e_; }
  int q() const { return q_; }
  // Monic modulus of degree e, ascending coefficients in [0, p).  For e = 1
  // this is x itself.
  const std::vector<int>& modulus() const { return modulus_; }

  bool same_field(const FieldCtx& o) const { return p_ == o.p_ && e_ == o.e_; }

  FieldElem zero() const { return {this, 0}; }
  FieldElem one() const { return {this, 1}; }
  FieldElem gen() const;  // class of x; requires e >= 2
  FieldElem from_int(long long n) const;
  FieldElem from_value(int v) const;
  FieldElem from_digits(const std::vector<int>& d) const;
  std::vector<int> digits(FieldElem a) const;

  FieldElem add(FieldElem a, FieldElem b) const;
  FieldElem sub(FieldElem a, FieldElem b) const;
  FieldElem neg(FieldElem a) const;
  FieldElem mul(FieldElem a, FieldElem b) const;
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const;
  FieldElem pow(FieldElem a, long long n) const;  // n >= 0
  FieldElem frob(FieldElem a, int k = 1) const;   // a^(p^k)
  FieldElem pth_root(FieldElem a) const;          // unique since F_q is perfect

  bool is_square(FieldElem a) const;
  // Smallest root in enumeration order; nullopt for odd-characteristic
  // non-squares.  In characteristic 2 every element has a unique root.
  std::optional<FieldElem> sqrt(FieldElem a) const;
  // Absolute trace down to F_p, returned as an integer in [0, p).
  int abs_trace(FieldElem a) const;
  // Characteristic 2 only: smallest z with z^2 + z = c, if any.
  std::optional<FieldElem> artin_schreier_root(FieldElem c) const;

  // All q elements in encoding order (0, 1, ..., q-1).
  std::vector<FieldElem> elements() const;

  // "3" for prime fields, "[c0,c1]" digit form otherwise.
  std::string display(FieldElem a) const;
  // Expression form reparseable by the T/X/Y grammar: "2", "g", "g^2+2*g".
  std::string to_expr(FieldElem a) const;

 private:
  FieldCtx(int p, int e);  // does the validation and modulus search

  int p_ = 0, e_ = 0, q_ = 0;
  std::vector<int> modulus_;
  std::vector<int> red_;  // low e coefficients of -modulus, for reduction
  std::vector<uint8_t> square_;
  std::vector<int16_t> sqrt_;     // -1 = none
  std::vector<int16_t> as_root_;  // char 2: smallest z with z^2+z = c, -1 = none
  void build_tables();
};

inline bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.ctx == nullptr || b.ctx == nullptr) return a.ctx == b.ctx && a.v == b.v;
  if (!a.ctx->same_field(*b.ctx)) fail(Errc::ContextMismatch, "comparing elements of different fields");
  return a.v == b.v;
}

inline FieldElem operator+(FieldElem a, FieldElem b) { return a.ctx->add(a, b); }
inline FieldElem operator-(FieldElem a, FieldElem b) { return a.ctx->sub(a, b); }
inline FieldElem operator-(FieldElem a) { return a.ctx->neg(a); }
inline FieldElem operator*(FieldElem a, FieldElem b) { return a.ctx->mul(a, b); }
inline FieldElem operator/(FieldElem a, FieldElem b) { return a.ctx->div(a, b); }

}  // namespace fqt

#endif
