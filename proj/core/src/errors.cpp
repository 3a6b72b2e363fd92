#include "derange/errors.hpp"

namespace derange {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ParseError: return "ParseError";
    case Errc::RepeatedElement: return "RepeatedElement";
    case Errc::MissingElement: return "MissingElement";
    case Errc::ElementOutOfRange: return "ElementOutOfRange";
    case Errc::NotADerangement: return "NotADerangement";
    case Errc::NotExactlyOneFixedPoint: return "NotExactlyOneFixedPoint";
    case Errc::NotOneFixedPoint: return "NotOneFixedPoint";
    case Errc::ExcludedInput: return "ExcludedInput";
    case Errc::BoundExceeded: return "BoundExceeded";
  }
  return "UnknownError";
}

}  // namespace derange
