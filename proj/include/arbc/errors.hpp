#pragma once

#include <stdexcept>
#include <string>

namespace arbc {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gf2 linear algebra
struct DimensionMismatch : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct SingularMatrix : Error { using Error::Error; };
struct InvalidParameter : Error { using Error::Error; };

// codes
struct RankDeficient : Error { using Error::Error; };
struct DimensionTooLarge : Error { using Error::Error; };

// classic scheme
struct TableTooLarge : Error { using Error::Error; };
struct DistanceTooSmall : Error { using Error::Error; };
struct WeightExceedsT : Error { using Error::Error; };
struct DecodeFailure : Error { using Error::Error; };

// arbitrary-error scheme
struct RetriesExceeded : Error { using Error::Error; };
struct MalformedCiphertext : Error { using Error::Error; };

// attacks
struct NoSolution : Error { using Error::Error; };
struct MultipleSolutions : Error { using Error::Error; };

// key files
struct ParseError : Error { using Error::Error; };
struct SchemeMismatch : Error { using Error::Error; };

} // namespace arbc
