#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace latcontact {

// Root of every error raised by the library. The CLI maps subclasses onto
// exit codes, so new error kinds should derive from one of the groups below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateBasis : public Error {
 public:
  using Error::Error;
};

class OverlappingLattice : public Error {
 public:
  OverlappingLattice(double min_length, double diameter);
  double min_length() const { return min_length_; }
  double diameter() const { return diameter_; }

 private:
  double min_length_;
  double diameter_;
};

class UnknownPreset : public Error {
 public:
  explicit UnknownPreset(const std::string& name);
};

class BoxTooLarge : public Error {
 public:
  BoxTooLarge(std::uint64_t points, std::uint64_t cap);
  std::uint64_t points() const { return points_; }

 private:
  std::uint64_t points_;
};

// Two spheres closer than one diameter: the input is not a packing.
class OverlapDetected : public Error {
 public:
  OverlapDetected(std::size_t i, std::size_t j, double distance_sq);
  std::size_t first() const { return i_; }
  std::size_t second() const { return j_; }

 private:
  std::size_t i_;
  std::size_t j_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class InstanceTooLarge : public Error {
 public:
  InstanceTooLarge(long double subset_count, std::uint64_t cap);
  long double subset_count() const { return subset_count_; }

 private:
  long double subset_count_;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A computed result contradicts a proven bound. Indicates a bug, never bad input.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace latcontact
