#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace osculant {

// Base class for failures raised by the computation engine (as opposed to
// malformed user input, which raises ParseError).
class EngineError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DenominatorVanishes : public EngineError {
 public:
  DenominatorVanishes() : EngineError("denominator vanishes at the sample point") {}
};

class NonGenericPoint : public EngineError {
 public:
  NonGenericPoint() : EngineError("no generic sample point found; increase samples or bound") {}
};

class UnsupportedRationalCoords : public EngineError {
 public:
  UnsupportedRationalCoords()
      : EngineError("constant-coefficient relations require polynomial coordinates") {}
};

class UnknownVariety : public EngineError {
 public:
  explicit UnknownVariety(const std::string& name)
      : EngineError("unknown catalog variety: " + name) {}
};

class DegreeMismatch : public EngineError {
 public:
  DegreeMismatch() : EngineError("form systems have mismatched degree or variable count") {}
};

class EmptySystem : public EngineError {
 public:
  EmptySystem() : EngineError("operation requires a nonempty form system") {}
};

// Raised while parsing coordinate expressions or input documents.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t position)
      : std::runtime_error(std::move(message) + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace osculant
