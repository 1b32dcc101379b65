#pragma once

#include <stdexcept>
#include <string>

namespace cevian {

/// Malformed user input: bad fractions, feet outside (0,1), broken
/// preconditions on counting formulas. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A geometric configuration that a valid cevian arrangement can never
/// produce (e.g. two overlapping collinear segments).
class GeometryError : public std::logic_error {
 public:
  explicit GeometryError(const std::string& what) : std::logic_error(what) {}
};

/// The brute-force enumerator refused an arrangement above its size limit.
class GuardRailError : public std::runtime_error {
 public:
  explicit GuardRailError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cevian
