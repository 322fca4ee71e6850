#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "posetmc/types.hpp"

namespace posetmc {

enum class ErrorKind {
  DuplicateLabel,
  UnknownLabel,
  TooLarge,
  CycleDetected,
  NotALattice,
  Unbounded,
  NotComparable,
  NotPushoutClosed,
  NoFactorization,
  NotCompositionClosed,
  MissingIdentities,
  S2OF3Failed,
  RecognitionFailed,
  InvalidCenters,
  HypothesisFailed,
  JNotInW,
  MismatchedBase,
  NotWeakEquivalence,
  CapExceeded,
  UnknownFixture,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. The witness lists the elements that
// exhibit the problem (a pair, a triple, ...), in the order the message uses.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<Element> witness = {})
      : std::runtime_error(std::move(message)), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<Element>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<Element> witness_;
};

}  // namespace posetmc
