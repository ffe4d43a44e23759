#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace affheaps {

enum class ErrorKind {
  InvalidArgument,
  ParseError,
  // series
  NonUnitConstantTerm,
  NegativeExponent,
  DivergentInfiniteProduct,
  // permutations
  WrongLength,
  NotBijective,
  WrongSum,
  SizeMismatch,
  // diagrams
  NotAlternating,
  ExcludedUniformR,
  ExcludedUniformL,
  ChainTypeDomainMismatch,
  NotFullyCommutative,
  // heaps
  InfiniteEnumeration,
  InvalidWalk,
  ConditionViolated,
  // monodimer
  ExceptionalWalk,
  NoActiveSite,
  ForbiddenFactor,
  // ppp
  InvalidSequence,
  RectangularPpp,
  TrivialHeap,
  WrongType,
};

std::string_view error_name(ErrorKind kind);

// Domain error. what() reads "<ErrorName>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace affheaps
