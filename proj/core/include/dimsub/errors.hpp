#pragma once

#include <stdexcept>
#include <string>

namespace dimsub {

// Malformed input: bad syntax, unknown symbols, dimension mismatches.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A configured resource cap was exceeded.
class ResourceLimit : public std::runtime_error {
public:
    ResourceLimit(const std::string& what, int last_complete_class)
        : std::runtime_error(what), last_complete_class_(last_complete_class)
    {
    }
    int last_complete_class() const { return last_complete_class_; }

private:
    int last_complete_class_;
};

}  // namespace dimsub
