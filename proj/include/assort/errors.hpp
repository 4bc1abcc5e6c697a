#pragma once

#include <stdexcept>

namespace assort {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix construction and transformation errors.
struct NegativeEntryError : Error { using Error::Error; };
struct AllZeroError : Error { using Error::Error; };
struct NonPositiveScalarError : Error { using Error::Error; };
struct PerturbationOutOfRangeError : Error { using Error::Error; };

// Index evaluation errors.
struct OutOfDomainError : Error { using Error::Error; };
struct ConstraintViolationError : Error { using Error::Error; };

// Axiom checking errors.
struct InvalidWitnessError : Error { using Error::Error; };
struct UnknownAxiomError : Error { using Error::Error; };
struct UnknownIndexError : Error { using Error::Error; };

// Ingestion errors.
struct ParseError : Error { using Error::Error; };
struct MissingThresholdError : Error { using Error::Error; };

} // namespace assort
