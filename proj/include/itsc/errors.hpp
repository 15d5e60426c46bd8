#pragma once

#include <stdexcept>
#include <string>

namespace itsc {

// Base class for all toolkit errors so callers can catch one type.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LengthMismatch : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct DimMismatch : Error {
    using Error::Error;
};
struct SeriesTooShort : Error {
    using Error::Error;
};
struct NegativeRange : Error {
    using Error::Error;
};
struct LabelOutOfRange : Error {
    using Error::Error;
};
struct MalformedRow : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};
struct NonFinite : Error {
    using Error::Error;
};
struct MissingCache : Error {
    using Error::Error;
};
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace itsc
