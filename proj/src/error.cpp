#include "spaceform/error.hpp"

namespace spaceform {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidOrder: return "invalid-order";
    case ErrorCode::Structure: return "structure";
    case ErrorCode::NotAGroup: return "not-a-group";
    case ErrorCode::Size: return "size";
    case ErrorCode::Domain: return "domain";
    case ErrorCode::IncompleteTable: return "incomplete-table";
    case ErrorCode::NotAHomomorphism: return "not-a-homomorphism";
    case ErrorCode::InvalidTable: return "invalid-table";
    case ErrorCode::UnsupportedGroup: return "unsupported-group";
    case ErrorCode::NotRealizable: return "not-realizable";
    case ErrorCode::InvalidDimension: return "invalid-dimension";
    case ErrorCode::Parse: return "parse";
    case ErrorCode::Io: return "io";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::Internal: return "internal";
  }
  return "unknown";
}

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IncompleteTable:
    case ErrorCode::NotAHomomorphism:
    case ErrorCode::InvalidTable:
    case ErrorCode::NotRealizable:
      return 2;
    case ErrorCode::Internal:
      return 3;
    default:
      return 1;
  }
}

}  // namespace spaceform
