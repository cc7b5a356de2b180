#ifndef CYCLOLAB_ERRORS_HPP
#define CYCLOLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cyclolab {

/* Domain violation in a caller-supplied value (wrong congruence class,
 * composite where a prime is required, non-fundamental discriminant, ...). */
class argument_error : public std::invalid_argument {
public:
  explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

/* A search or enumeration hit a configured bound (search radius, memory cap)
 * without producing a result.  Retrying with a larger bound may succeed. */
class resource_error : public std::runtime_error {
public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

/* Structurally valid input outside the implemented scope
 * (e.g. a subfield request inside a non-cyclic unit group). */
class unsupported_error : public std::runtime_error {
public:
  explicit unsupported_error(const std::string& what) : std::runtime_error(what) {}
};

/* An internal exactness certificate failed (a value that must be rational or
 * integral is not).  Never downgraded to a rounded result. */
class certification_error : public std::logic_error {
public:
  explicit certification_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace cyclolab

#endif
