#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace suplogic {

/// Error with a position in a text input (formula, model or derivation file).
class SourceError : public std::runtime_error {
public:
  SourceError(std::size_t line, std::size_t column, std::string message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line), column_(column), message_(std::move(message)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// Model construction or validation failure.
class ModelError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Evaluation failure: unknown world, or the model lacks the relation an
/// operator needs (binary R for Box/Delta/D/strict implication, ternary S
/// for the agreement and supervenience operators).
class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Search bounds violation (exhaustive caps, relation/class mismatch).
class BoundsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A translation was applied outside its language fragment.
class FragmentError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace suplogic
