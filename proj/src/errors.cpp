#include "isogeo/errors.hpp"

namespace isogeo {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Undefined: return "Undefined";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::SingularArgument: return "SingularArgument";
    case ErrorCode::NonAdmissible: return "NonAdmissible";
    case ErrorCode::NearSingular: return "NearSingular";
    case ErrorCode::StencilOutOfDomain: return "StencilOutOfDomain";
    case ErrorCode::InvalidFamilyParams: return "InvalidFamilyParams";
    case ErrorCode::InconsistentCase: return "InconsistentCase";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace isogeo
