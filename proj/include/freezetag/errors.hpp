// Error types shared across the library.
#pragma once

#include <stdexcept>

namespace freezetag {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File format problems.
struct SyntaxError : Error { using Error::Error; };
struct NonMonotoneClause : Error { using Error::Error; };
struct BadArity : Error { using Error::Error; };
struct RepeatedVariable : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// Shape and size guards.
struct LengthMismatch : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };
struct BadShape : Error { using Error::Error; };

// Schedule construction and measurement.
struct NotSatisfying : Error { using Error::Error; };
struct RoleMismatch : Error { using Error::Error; };
struct BadItinerary : Error { using Error::Error; };

}  // namespace freezetag
