#pragma once

#include <stdexcept>
#include <string>

namespace qsi {

// Base for every domain error thrown by this library. Precondition
// violations and malformed inputs use std::invalid_argument instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CyclicQuiver : Error { using Error::Error; };
struct DanglingArrow : Error { using Error::Error; };
struct VertexMismatch : Error { using Error::Error; };

struct NonSquare : Error { using Error::Error; };

struct QuiverMismatch : Error { using Error::Error; };
struct IntertwiningViolation : Error { using Error::Error; };
struct WeightNotOrthogonal : Error { using Error::Error; };

struct TooManyRows : Error { using Error::Error; };

struct NotOrthogonal : Error { using Error::Error; };

struct CodimFailure : Error { using Error::Error; };
struct NonnegativityFailure : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };
struct NotNested : Error { using Error::Error; };

struct InsufficientData : Error { using Error::Error; };

} // namespace qsi
