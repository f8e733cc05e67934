#pragma once

#include <stdexcept>
#include <string>

namespace ssm {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSpan : Error { using Error::Error; };
struct NotOrthogonal : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct ZeroVector : Error { using Error::Error; };
struct WordTooShort : Error { using Error::Error; };
struct ExplosionGuard : Error { using Error::Error; };
struct FullSpace : Error { using Error::Error; };
struct DegenerateOsculation : Error { using Error::Error; };
struct NotUnitSpeed : Error { using Error::Error; };
struct VanishingCurvature : Error { using Error::Error; };
struct InsufficientScales : Error { using Error::Error; };
struct OutsideSupport : Error { using Error::Error; };
struct MissingSeries : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };

} // namespace ssm
