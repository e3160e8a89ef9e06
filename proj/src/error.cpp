#include "gencov/error.hpp"

namespace gencov
{

std::string_view to_string(ErrorCode code)
{
  switch (code) {
  case ErrorCode::DegreeMismatch: return "DegreeMismatch";
  case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
  case ErrorCode::NotASubgroup: return "NotASubgroup";
  case ErrorCode::NotInAmbientGroup: return "NotInAmbientGroup";
  case ErrorCode::NotInGroup: return "NotInGroup";
  case ErrorCode::InvNotInvolution: return "InvNotInvolution";
  case ErrorCode::DanglingDart: return "DanglingDart";
  case ErrorCode::NotConnected: return "NotConnected";
  case ErrorCode::NotASpanningTree: return "NotASpanningTree";
  case ErrorCode::TooLarge: return "TooLarge";
  case ErrorCode::Eq1Violation: return "Eq1Violation";
  case ErrorCode::Eq2Violation: return "Eq2Violation";
  case ErrorCode::Eq3Violation: return "Eq3Violation";
  case ErrorCode::BaseNotConnected: return "BaseNotConnected";
  case ErrorCode::SizeCapExceeded: return "SizeCapExceeded";
  case ErrorCode::LoopOrSemiEdge: return "LoopOrSemiEdge";
  case ErrorCode::IncompatiblePair: return "IncompatiblePair";
  case ErrorCode::NotAnAction: return "NotAnAction";
  case ErrorCode::NotFaithfulOnDarts: return "NotFaithfulOnDarts";
  case ErrorCode::QuotientNotConnected: return "QuotientNotConnected";
  case ErrorCode::BadTransversal: return "BadTransversal";
  case ErrorCode::ParseError: return "ParseError";
  case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

bool is_resource_error(ErrorCode code)
{
  return code == ErrorCode::OrderCapExceeded ||
         code == ErrorCode::SizeCapExceeded ||
         code == ErrorCode::TooLarge;
}

Error::Error(ErrorCode code, std::string const &what,
             std::optional<std::size_t> dart)
: std::runtime_error(std::string(to_string(code)) + ": " + what),
  _code(code),
  _message(what),
  _dart(dart)
{}

} // namespace gencov
