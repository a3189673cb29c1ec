#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

// Base class for everything this library throws deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegreeMismatch : Error { using Error::Error; };
struct PointOutOfRange : Error { using Error::Error; };
struct MalformedCycles : Error { using Error::Error; };
struct OrderCapExceeded : Error { using Error::Error; };
struct NotASubgroup : Error { using Error::Error; };
struct NotAnElement : Error { using Error::Error; };
struct NotTransitive : Error { using Error::Error; };
struct NotABlockSystem : Error { using Error::Error; };
struct InvalidSeries : Error { using Error::Error; };
struct GraphTooLarge : Error { using Error::Error; };
struct NotEquivalent : Error { using Error::Error; };
struct PartTooSmall : Error { using Error::Error; };
struct MalformedGroupFile : Error { using Error::Error; };

// Thrown when a machine-checked construction fails its own verification.
// Seeing this means a bug, not a bad input.
struct ConstructionViolation : Error { using Error::Error; };

} // namespace permlab
