#pragma once
#include <stdexcept>
#include <string>

namespace cgs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedRing : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DecompositionError : Error { using Error::Error; };
struct UnsupportedCase : Error { using Error::Error; };
struct MembershipError : Error { using Error::Error; };
struct BudgetError : Error { using Error::Error; };
struct ClassificationError : Error { using Error::Error; };
struct DatumError : Error { using Error::Error; };
struct StructuralFailure : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };
struct AlgebraMismatch : Error { using Error::Error; };
struct ExpMismatch : Error { using Error::Error; };

} // namespace cgs
