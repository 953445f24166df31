#pragma once

#include <stdexcept>
#include <string>

namespace chevorbit {

enum class Errc {
  UnsupportedSystem,
  NotARoot,
  NotAPositiveRoot,
  Inconsistent,
  Underdetermined,
  SumNotARoot,
  SameOppositePair,
  ScalarMismatch,
  ZeroArgument,
  ZeroK,
  ZeroScalar,
  NotTraceZero,
  UnsupportedFamily,
  CharTwo,
  InvalidModulus,
  InvalidVector,
  InvalidDescriptor,
  BudgetExceeded,
  Mismatch,
};

const char* errc_name(Errc code);

/// Every failure in the library is reported through this exception type;
/// `code()` identifies the condition.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace chevorbit
