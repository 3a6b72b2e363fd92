#pragma once

#include <stdexcept>
#include <string>

namespace derange {

// Failure kinds for every operation that rejects its input. Front ends report
// the condition by name, so the enum spelling is part of the interface.
enum class Errc {
  ParseError,
  RepeatedElement,
  MissingElement,
  ElementOutOfRange,
  NotADerangement,
  NotExactlyOneFixedPoint,
  NotOneFixedPoint,
  ExcludedInput,
  BoundExceeded,
};

const char* errc_name(Errc code);

// Thrown on invalid or rejected inputs. Internal invariant violations use
// std::logic_error instead; those indicate a bug, not a bad input.
class DomainError : public std::runtime_error {
public:
  DomainError(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace derange
