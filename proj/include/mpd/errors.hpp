#pragma once

#include <stdexcept>
#include <string>

namespace mpd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Grade vectors of unequal length, or an index set out of range.
struct DimensionError : Error {
    using Error::Error;
};

// Matrix product of morphisms whose grade vectors do not match.
struct CompositionError : Error {
    using Error::Error;
};

// A filtration violating closure, monotonicity or one-criticality.
struct FiltrationError : Error {
    using Error::Error;
};

// Reduced chain complex requested but no vertex sits at the global meet.
struct AugmentationError : Error {
    using Error::Error;
};

// An operation applied outside its mathematical domain (e.g. dagger of a
// complex with infinite grades, barcode of a multiparameter complex).
struct DomainError : Error {
    using Error::Error;
};

// Resolution machinery invoked for more than two parameters.
struct UnsupportedParameterError : Error {
    using Error::Error;
};

// A complex fed to dual_resolution whose length differs from the
// parameter count.
struct LengthError : Error {
    using Error::Error;
};

// Malformed input document; message carries the line number.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace mpd
