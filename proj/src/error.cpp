#include "chevorbit/error.hpp"

namespace chevorbit {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::UnsupportedSystem: return "UnsupportedSystem";
    case Errc::NotARoot: return "NotARoot";
    case Errc::NotAPositiveRoot: return "NotAPositiveRoot";
    case Errc::Inconsistent: return "Inconsistent";
    case Errc::Underdetermined: return "Underdetermined";
    case Errc::SumNotARoot: return "SumNotARoot";
    case Errc::SameOppositePair: return "SameOppositePair";
    case Errc::ScalarMismatch: return "ScalarMismatch";
    case Errc::ZeroArgument: return "ZeroArgument";
    case Errc::ZeroK: return "ZeroK";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::NotTraceZero: return "NotTraceZero";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::CharTwo: return "CharTwo";
    case Errc::InvalidModulus: return "InvalidModulus";
    case Errc::InvalidVector: return "InvalidVector";
    case Errc::InvalidDescriptor: return "InvalidDescriptor";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

}  // namespace chevorbit
