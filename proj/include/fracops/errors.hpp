#pragma once

#include <stdexcept>

namespace fracops {

/// Fractional order outside its admissible range for the requested operation.
class OrderError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Integration interval or window violating its ordering/containment rules.
class IntervalError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Time grid that is invalid or does not match another input's grid.
class GridError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace fracops
