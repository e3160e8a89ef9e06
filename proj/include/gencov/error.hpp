#ifndef GENCOV_ERROR_HPP
#define GENCOV_ERROR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gencov
{

enum class ErrorCode
{
  // permutation groups
  DegreeMismatch,
  OrderCapExceeded,
  NotASubgroup,
  NotInAmbientGroup,
  NotInGroup,
  // graphs
  InvNotInvolution,
  DanglingDart,
  NotConnected,
  NotASpanningTree,
  TooLarge,
  // voltage graphs and covers
  Eq1Violation,
  Eq2Violation,
  Eq3Violation,
  BaseNotConnected,
  SizeCapExceeded,
  LoopOrSemiEdge,
  IncompatiblePair,
  // group actions
  NotAnAction,
  NotFaithfulOnDarts,
  QuotientNotConnected,
  BadTransversal,
  // input
  ParseError,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// True for errors that signal an instance beyond the configured size caps.
bool is_resource_error(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, std::string const &what,
        std::optional<std::size_t> dart = std::nullopt);

  ErrorCode code() const noexcept
  { return _code; }

  /// The description without the code prefix carried by `what()`.
  std::string const &message() const noexcept
  { return _message; }

  /// Offending base dart, when the error is attached to one.
  std::optional<std::size_t> dart() const noexcept
  { return _dart; }

private:
  ErrorCode _code;
  std::string _message;
  std::optional<std::size_t> _dart;
};

} // namespace gencov

#endif // GENCOV_ERROR_HPP
