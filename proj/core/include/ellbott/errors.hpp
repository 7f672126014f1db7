#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ellbott {

/// Failure category; the CLI maps these onto exit codes
/// (Parse -> 65, Model -> 66, Internal -> 70).
enum class ErrorKind { Parse, Model, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string what)
      : std::runtime_error(std::move(what)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

#define ELLBOTT_DEFINE_ERROR(NAME, KIND)                          \
  class NAME : public Error {                                     \
   public:                                                        \
    explicit NAME(std::string what)                               \
        : Error(ErrorKind::KIND, std::move(what)) {}              \
  }

// exact polynomial layer
ELLBOTT_DEFINE_ERROR(DivisionNotExact, Internal);
ELLBOTT_DEFINE_ERROR(IdenticallyZeroForm, Model);

// Weierstrass layer
ELLBOTT_DEFINE_ERROR(IdenticallyZeroDiscriminant, Model);
ELLBOTT_DEFINE_ERROR(NotMinimal, Model);
ELLBOTT_DEFINE_ERROR(NonReducedFiber, Model);
ELLBOTT_DEFINE_ERROR(InconsistentTable, Internal);

// local geometry oracles
ELLBOTT_DEFINE_ERROR(NotStabilized, Model);
ELLBOTT_DEFINE_ERROR(UnsupportedSplit, Model);

// intersection calculator
ELLBOTT_DEFINE_ERROR(DegreeMismatch, Model);

// family constructors
ELLBOTT_DEFINE_ERROR(AmplenessRangeViolated, Model);
ELLBOTT_DEFINE_ERROR(OutOfValidityRange, Model);

// decision engine
ELLBOTT_DEFINE_ERROR(InconsistentSummary, Internal);

// model-file ingestion
ELLBOTT_DEFINE_ERROR(ParseError, Parse);
ELLBOTT_DEFINE_ERROR(ModelError, Model);

#undef ELLBOTT_DEFINE_ERROR

}  // namespace ellbott
