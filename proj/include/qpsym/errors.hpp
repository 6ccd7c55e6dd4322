#pragma once

#include <stdexcept>
#include <string>

namespace qpsym {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// exactnum
struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct ReduciblePolynomial : Error { using Error::Error; };
struct InvalidField : Error { using Error::Error; };

// symcore
struct NotAnEigenvector : Error { using Error::Error; };
struct NotUnimodular : Error { using Error::Error; };
struct NoIntegerSolution : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct InvalidFlow : Error { using Error::Error; };
struct RelationViolated : Error { using Error::Error; };

// grouptools
struct ModelTooLarge : Error { using Error::Error; };
struct NotClosed : Error { using Error::Error; };

// search
struct NotQuadratic : Error { using Error::Error; };
struct NotRealQuadratic : Error { using Error::Error; };

// analysis
struct DimensionUnsupported : Error { using Error::Error; };

// file formats
struct ParseError : Error { using Error::Error; };

} // namespace qpsym
