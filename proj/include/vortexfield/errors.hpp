#pragma once

#include <stdexcept>
#include <string>

namespace vortexfield {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A point, parameter or grid lies outside the set an operation is defined on.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation too close to a boundary vortex.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Vortex configuration the closed-form formulas do not cover (N != 2, d != (1,1), ...).
class UnsupportedConfig : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace vortexfield
