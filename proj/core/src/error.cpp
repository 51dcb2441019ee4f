#include "smhk/error.hpp"

namespace smhk {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidParams:
      return "invalid parameters";
    case ErrorKind::kInvalidArgument:
      return "invalid argument";
    case ErrorKind::kSingularEvaluation:
      return "singular evaluation";
    case ErrorKind::kNoRoot:
      return "no root";
    case ErrorKind::kInconsistentRoot:
      return "inconsistent root";
    case ErrorKind::kNotConverged:
      return "not converged";
    case ErrorKind::kUndefinedRate:
      return "undefined rate";
  }
  return "unknown";
}

}  // namespace smhk
