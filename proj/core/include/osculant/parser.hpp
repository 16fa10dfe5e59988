#pragma once

#include <string>
#include <vector>

#include "osculant/errors.hpp"
#include "osculant/parametrization.hpp"
#include "osculant/poly.hpp"

namespace osculant {

class UnknownVariable : public ParseError {
 public:
  UnknownVariable(const std::string& name, std::size_t position)
      : ParseError("unknown variable '" + name + "'", position) {}
};

class IndexOutOfRange : public ParseError {
 public:
  IndexOutOfRange(int index, int k, std::size_t position)
      : ParseError("variable index " + std::to_string(index) + " exceeds k = " + std::to_string(k),
                   position) {}
};

class DivisionByZeroLiteral : public ParseError {
 public:
  explicit DivisionByZeroLiteral(std::size_t position)
      : ParseError("rational literal with zero denominator", position) {}
};

// Grammar:
//   expr     := term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := base ('^' nat)?
//   base     := rational | var | '(' expr ')'
//   var      := 'u' index          with 1 <= index <= k
//   rational := int ('/' posint)?
// Whitespace is ignored; there is no implicit multiplication.
Poly parse_polynomial(const std::string& text, int k);

// Canonical serialization, re-parsable under the grammar above.
std::string print_polynomial(const Poly& p);

struct InputDocument {
  std::string name;
  int k = 0;
  int N = 0;
  std::vector<std::string> coordinates;
};

// JSON object with fields name / k / N / coordinates.
InputDocument load_input_document(const std::string& json_text);
std::string save_input_document(const InputDocument& doc);

Parametrization parse_parametrization(const InputDocument& doc);

}  // namespace osculant
