#pragma once

#include <stdexcept>
#include <string>

namespace rfkit {

// Thrown when an input or output file cannot be read, parsed or written.
class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a request would exceed a configured memory or work ceiling
// (e.g. oversized tables, exhaustive enumerations past the guard).
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rfkit
