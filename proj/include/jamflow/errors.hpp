#pragma once

#include <stdexcept>
#include <string>

namespace jamflow {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad argument values: parameters out of range, undefined quantities.
struct DomainError : Error {
  using Error::Error;
};

// Operation requires a dynamics mode the configuration is not in
// (e.g. nonnegative velocities, or vmax = 1).
struct ModeError : Error {
  using Error::Error;
};

// Two particles landed on the same site during a general-mode shift.
struct CollisionError : Error {
  using Error::Error;
};

// An observable referenced lattice sites or particles the trajectory
// does not determine.
struct WindowError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct RangeError : Error {
  using Error::Error;
};

struct AdmissibilityError : Error {
  using Error::Error;
};

struct DensityError : Error {
  using Error::Error;
};

struct SizeError : Error {
  using Error::Error;
};

struct AuditError : Error {
  using Error::Error;
};

}  // namespace jamflow
