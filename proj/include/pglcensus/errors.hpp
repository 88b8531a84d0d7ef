#ifndef PGLCENSUS_ERRORS_HPP
#define PGLCENSUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pglcensus {

// Enumeration would exceed the configured subgroup budget (see
// enumeration_budget() in subgroup.hpp).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// The requested computation has no supported method (e.g. a duality
// reduction outside the implemented base cases).
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

// Two independent computation routes disagreed.  Always a bug, never
// a data error.
class InternalConsistencyError : public std::logic_error {
public:
    explicit InternalConsistencyError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pglcensus

#endif
