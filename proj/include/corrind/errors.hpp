#pragma once

#include <stdexcept>
#include <string>

namespace corrind {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or unreadable input (files, config documents).
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input with invalid values (e.g. n = 0, cap < 0).
struct ValidationError : Error {
    using Error::Error;
};

// Epoch or period outside the range the data supports.
struct RangeError : Error {
    using Error::Error;
};

// Matrix or vector shapes do not agree.
struct DimensionError : Error {
    using Error::Error;
};

// Panel too short for the requested window length.
struct InsufficientDataError : Error {
    using Error::Error;
};

// Strategy references parameters the panel does not have.
struct BindingError : Error {
    using Error::Error;
};

// Sanction schedule references duties the strategy does not have.
struct ScheduleError : Error {
    using Error::Error;
};

// Output could not be written.
struct IoError : Error {
    using Error::Error;
};

}  // namespace corrind
