#pragma once

#include <stdexcept>
#include <string>

namespace flowcoh {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Incompatible shapes (matrix products, lattice ambients, vector lengths).
struct DimensionError : Error {
    explicit DimensionError(const std::string& what) : Error(what) {}
};

// Malformed textual or JSON input.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A value outside an operation's domain: singular matrix where an inverse is
// needed, infinite group where a finite one is required, inconsistent
// descriptor flags, and the like.
struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A theorem-backed operation was invoked on inputs that do not assert the
// theorem's hypotheses. Distinct from falsity: the question is not answered.
struct NotApplicableError : Error {
    explicit NotApplicableError(const std::string& what) : Error(what) {}
};

// Two independent computation routes disagreed. Always a library bug.
struct ConsistencyError : Error {
    explicit ConsistencyError(const std::string& what) : Error(what) {}
};

} // namespace flowcoh
