#pragma once

#include <stdexcept>
#include <string>

namespace patex {

/// Malformed or out-of-contract input (bad coordinates, parse failures, wrong shape).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A request exceeds a configured enumeration or search limit.
class CapacityError : public std::runtime_error {
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// A construction produced an object that failed its own re-check.
class PostconditionError : public std::runtime_error {
public:
    explicit PostconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent routes that must agree did not.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace patex
