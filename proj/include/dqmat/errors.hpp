#pragma once

#include <stdexcept>
#include <string>

namespace dqmat {

/// Base class for all domain errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionUndefined : Error {
    using Error::Error;
};
struct SqrtUndefined : Error {
    using Error::Error;
};
struct ZeroInput : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct NotScalar : Error {
    using Error::Error;
};
struct NotHermitian : Error {
    using Error::Error;
};
struct ZeroStandardPart : Error {
    using Error::Error;
};
struct SingularSystem : Error {
    using Error::Error;
};
struct NotUnitPose : Error {
    using Error::Error;
};
struct InvalidSparsity : Error {
    using Error::Error;
};
struct NonPositiveLambda : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};

}  // namespace dqmat
