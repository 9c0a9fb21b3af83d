#pragma once

#include <stdexcept>
#include <string>

namespace sbl {

// Dimension / shape mismatch on matrix or vector arguments.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Inversion or division requested on a singular object.
struct SingularMatrixError : std::domain_error {
    using std::domain_error::domain_error;
};

// A documented precondition of an operation does not hold.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A quadratic form that must be positive definite is not.
struct DefinitenessError : std::domain_error {
    using std::domain_error::domain_error;
};

// An evaluation route was requested that the inputs do not support.
struct RouteError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A search exhausted its schedule without finding a certificate.
struct SearchFailureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An exact expansion would exceed its term budget.
struct TermLimitError : std::length_error {
    using std::length_error::length_error;
};

// Malformed textual input (rationals, matrices, instance files).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Index outside its documented range.
struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

} // namespace sbl
