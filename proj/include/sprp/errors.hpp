#pragma once

#include <stdexcept>
#include <string>

namespace sprp {

// Invalid layout or instance data. The message names the offending field.
class ValidationError : public std::invalid_argument {
public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

private:
  std::string field_;
};

// Position index outside the cells of an aisle.
class RangeError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

// Malformed instance/config file; message carries the field path.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Formulation asked to model a layout it does not cover (e.g. GS on two blocks).
class UnsupportedLayout : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Exact solver refusing an input beyond its size budget.
class BudgetExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

// A consistency check between two computation routes failed.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

}  // namespace sprp
