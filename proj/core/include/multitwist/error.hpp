#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace multitwist {

enum class ErrorKind {
  kSchema,
  kValidation,
  kNotConnected,
  kNotIrreducible,
  kNoConvergence,
  kNoRealRoot,
  kInternalInconsistency,
  kToleranceAmbiguous,
  kNotSmallType,
  kNotRecessive,
  kRationalReconstructionFailed,
  kMuNotAboveTwo,
  kDominantHasNoClosedForm,
  kNonOrientableOrInconsistent,
  kNotInG0,
  kParse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; the kind drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSchema: return "SchemaError";
    case ErrorKind::kValidation: return "ValidationError";
    case ErrorKind::kNotConnected: return "NotConnected";
    case ErrorKind::kNotIrreducible: return "NotIrreducible";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kNoRealRoot: return "NoRealRoot";
    case ErrorKind::kInternalInconsistency: return "InternalInconsistency";
    case ErrorKind::kToleranceAmbiguous: return "ToleranceAmbiguous";
    case ErrorKind::kNotSmallType: return "NotSmallType";
    case ErrorKind::kNotRecessive: return "NotRecessive";
    case ErrorKind::kRationalReconstructionFailed:
      return "RationalReconstructionFailed";
    case ErrorKind::kMuNotAboveTwo: return "MuNotAboveTwo";
    case ErrorKind::kDominantHasNoClosedForm: return "DominantHasNoClosedForm";
    case ErrorKind::kNonOrientableOrInconsistent:
      return "NonOrientableOrInconsistent";
    case ErrorKind::kNotInG0: return "NotInG0";
    case ErrorKind::kParse: return "ParseError";
  }
  return "Error";
}

}  // namespace multitwist
