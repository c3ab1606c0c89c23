#pragma once

#include <stdexcept>
#include <string>

namespace kuhnnet {

// Bad argument values (dimension mismatches, out-of-range parameters).
class input_error : public std::runtime_error {
public:
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of an operation.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed document; carries a location string ("layers[2].bias").
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::string location)
        : std::runtime_error(what + " (at " + location + ")"), location_(std::move(location)) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

// Sample set too large for the requested architecture.
class capacity_error : public std::runtime_error {
public:
    capacity_error(const std::string& what, long long computed_bound)
        : std::runtime_error(what), bound_(computed_bound) {}
    long long computed_bound() const { return bound_; }

private:
    long long bound_;
};

// Build would exceed the configured lattice cap.
class resource_error : public std::runtime_error {
public:
    explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

class io_error : public std::runtime_error {
public:
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace kuhnnet
