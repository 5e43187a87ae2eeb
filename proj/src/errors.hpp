#ifndef HIGLIM_ERRORS_HPP
#define HIGLIM_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace higlim {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller supplied an out-of-range or ill-typed argument.
struct ArgumentError : Error {
  using Error::Error;
};

// Domain/codomain ranks of maps do not line up.
struct RankMismatchError : ArgumentError {
  using ArgumentError::ArgumentError;
};

// An operation that requires a surjective map was given one that is not.
struct NotSurjectiveError : Error {
  using Error::Error;
};

// The requested coordinate needs more depth than the inputs provide.
struct InsufficientDepthError : Error {
  std::uint32_t required_depth;
  InsufficientDepthError(const std::string& what, std::uint32_t required)
      : Error(what), required_depth(required) {}
};

// An internal consistency check failed; indicates a bug, not bad input.
struct InternalError : Error {
  using Error::Error;
};

namespace detail {
// Throws InternalError when `cond` is false.  Used for postcondition checks
// that guard algebraic identities the algorithms are supposed to maintain.
inline void check(bool cond, const char* what) {
  if (!cond) throw InternalError(std::string("internal check failed: ") + what);
}
}  // namespace detail

}  // namespace higlim

#endif
