#pragma once

#include <stdexcept>
#include <string>

namespace holder {

// Error taxonomy shared by all modules. Everything derives from Error so
// callers can catch the whole family at the CLI boundary.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfDomain : Error { using Error::Error; };
struct NonFiniteIntegrand : Error { using Error::Error; };
struct EmptyBoundary : Error { using Error::Error; };
struct NoInverse : Error { using Error::Error; };
struct PreimageNotInDisk : Error { using Error::Error; };
struct ZeroDerivative : Error { using Error::Error; };
struct NotInRegion : Error { using Error::Error; };
struct DisconnectedEndpoints : Error { using Error::Error; };
struct BadParameter : Error { using Error::Error; };
struct BadAlpha : Error { using Error::Error; };
struct NoCrossing : Error { using Error::Error; };
struct MissingAlpha : Error { using Error::Error; };
struct DegenerateBoundary : Error { using Error::Error; };
struct UnknownDomain : Error { using Error::Error; };
struct BadFlag : Error { using Error::Error; };

}  // namespace holder
