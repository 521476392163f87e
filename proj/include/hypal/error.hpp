#pragma once

#include <stdexcept>
#include <string>

namespace hypal {

/// Bad input: malformed tables, unknown symbols, unparsable documents.
/// The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class StructureError : public InputError {
 public:
  using InputError::InputError;
};

class UnknownElement : public InputError {
 public:
  explicit UnknownElement(const std::string& symbol)
      : InputError("unknown element \"" + symbol + "\""), symbol_(symbol) {}
  const std::string& symbol() const { return symbol_; }

 private:
  std::string symbol_;
};

/// A computation could not produce the requested object (e.g. K is empty).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypal
