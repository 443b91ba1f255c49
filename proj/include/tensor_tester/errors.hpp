#pragma once

#include <stdexcept>
#include <string>

namespace tt {

// Shapes or dimensions of the operands do not fit together.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A quantum state or vector violates its defining constraints
// (Hermitian, PSD, unit trace, unit norm).
class InvalidStateError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Raised when (T F)^Gamma is not positive semidefinite.
class InvalidTestOperatorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class UnsupportedDimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace tt
