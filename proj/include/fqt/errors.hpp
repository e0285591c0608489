// Error codes shared by all modules. Math-domain failures are reported as
// Error with a code; programming errors use assertions.

#ifndef FQT_ERRORS_HPP
#define FQT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fqt {

enum class Errc {
  // field construction / arithmetic
  NotPrime,
  FieldTooLarge,
  DivisionByZero,
  ContextMismatch,
  // function field / parsing
  PoleAtPlace,
  SyntaxError,
  UnboundName,
  NotAWeierstrassEquation,
  WrongDegree,
  // curves
  SingularCurve,
  WrongCharacteristic,
  NotIntegral,
  ConstantJInvariant,
  DenominatorVanishes,
  // analysis
  NotSplitAtInfinity,
  ProfileInconsistent,
  NonIntegralDegree,
  OffsetNotPowerOfP,
  ZeroCycle,
  // catalog
  ConstraintViolated,
  UnknownEntry,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc c, const std::string& msg)
      : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace fqt

#endif
