#ifndef PERMKIT_ERRORS_HPP
#define PERMKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permkit {

/// Base class for all permkit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Malformed textual input (cycle notation, group files, flag values).
class ParseError : public Error {
public:
  explicit ParseError(const std::string &what) : Error(what) {}
};

/// A precondition on the mathematical input is violated (degree mismatch,
/// group not transitive / not cyclic, orbit bound exceeded, ...).
class DomainError : public Error {
public:
  explicit DomainError(const std::string &what) : Error(what) {}
};

/// A configured resource cap would be exceeded (enumeration size,
/// inclusion-exclusion degree, factorization bound).
class ResourceError : public Error {
public:
  explicit ResourceError(const std::string &what) : Error(what) {}
};

/// A self-check that must hold by construction failed; indicates a bug.
class InternalError : public Error {
public:
  explicit InternalError(const std::string &what) : Error(what) {}
};

} // namespace permkit

#endif
