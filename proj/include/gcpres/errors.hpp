#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gcpres {

/// Caller violated a precondition (mismatched rings, wrong shape, bad flag value).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An invariant that the algorithms guarantee was found broken. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Base for every rejection raised while turning a parsed source into a System.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonHomogeneousError : public ValidationError {
 public:
  NonHomogeneousError(std::string form, std::string first, std::string second)
      : ValidationError("form '" + form + "' is not homogeneous in the x-block: monomials " + first + " and " + second +
                        " have different x-degrees"),
        form_(std::move(form)),
        witnesses_{std::move(first), std::move(second)} {}

  const std::string& form() const noexcept { return form_; }
  const std::string& witness(std::size_t i) const { return witnesses_[i]; }

 private:
  std::string form_;
  std::string witnesses_[2];
};

class ZeroXDegreeError : public ValidationError {
 public:
  explicit ZeroXDegreeError(std::string form)
      : ValidationError("form '" + form + "' has x-degree 0"), form_(std::move(form)) {}

  const std::string& form() const noexcept { return form_; }

 private:
  std::string form_;
};

class FormCountMismatchError : public ValidationError {
 public:
  FormCountMismatchError(std::size_t variables, std::size_t forms)
      : ValidationError("system has " + std::to_string(variables) + " x-variables but " + std::to_string(forms) +
                        " forms"),
        variables_(variables),
        forms_(forms) {}

  std::size_t variables() const noexcept { return variables_; }
  std::size_t forms() const noexcept { return forms_; }

 private:
  std::size_t variables_;
  std::size_t forms_;
};

/// The Macaulay extraneous minor vanished identically even after random changes of x-coordinates.
class DegenerateLayoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gcpres
