#pragma once

#include <stdexcept>
#include <string>

namespace qwalk {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonNormalizedCoinState : Error {
    using Error::Error;
};
struct OddParitySite : Error {
    using Error::Error;
};
struct SiteOutsideBox : Error {
    using Error::Error;
};
struct NonUnitary : Error {
    using Error::Error;
};
struct OverlappingSlits : Error {
    using Error::Error;
};
struct SupportTouchesBoundary : Error {
    using Error::Error;
};
struct TimeOutsideWindow : Error {
    using Error::Error;
};
struct EmptyProfile : Error {
    using Error::Error;
};
struct UnknownPreset : Error {
    using Error::Error;
};
struct MismatchedScreens : Error {
    using Error::Error;
};
struct RadiusTooLarge : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(int line, int column, const std::string& what)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
          line(line),
          column(column) {}
    int line;
    int column;
};
struct UnknownKey : Error {
    using Error::Error;
};
struct ValidationError : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

}  // namespace qwalk
