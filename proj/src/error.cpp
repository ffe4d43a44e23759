#include "affine_heaps/error.hpp"

namespace affheaps {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonUnitConstantTerm: return "NonUnitConstantTerm";
    case ErrorKind::NegativeExponent: return "NegativeExponent";
    case ErrorKind::DivergentInfiniteProduct: return "DivergentInfiniteProduct";
    case ErrorKind::WrongLength: return "WrongLength";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::WrongSum: return "WrongSum";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::NotAlternating: return "NotAlternating";
    case ErrorKind::ExcludedUniformR: return "ExcludedUniformR";
    case ErrorKind::ExcludedUniformL: return "ExcludedUniformL";
    case ErrorKind::ChainTypeDomainMismatch: return "ChainTypeDomainMismatch";
    case ErrorKind::NotFullyCommutative: return "NotFullyCommutative";
    case ErrorKind::InfiniteEnumeration: return "InfiniteEnumeration";
    case ErrorKind::InvalidWalk: return "InvalidWalk";
    case ErrorKind::ConditionViolated: return "ConditionViolated";
    case ErrorKind::ExceptionalWalk: return "ExceptionalWalk";
    case ErrorKind::NoActiveSite: return "NoActiveSite";
    case ErrorKind::ForbiddenFactor: return "ForbiddenFactor";
    case ErrorKind::InvalidSequence: return "InvalidSequence";
    case ErrorKind::RectangularPpp: return "RectangularPpp";
    case ErrorKind::TrivialHeap: return "TrivialHeap";
    case ErrorKind::WrongType: return "WrongType";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

}  // namespace affheaps
