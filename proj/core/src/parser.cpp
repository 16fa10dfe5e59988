#include "osculant/parser.hpp"

#include <cctype>
#include <json.hpp>

namespace osculant {

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& text, int k) : text_(text), k_(k) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing input", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  Poly expr() {
    Poly p = term();
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    while (accept('*')) p = p * factor();
    return p;
  }

  Poly factor() {
    Poly p = base();
    if (accept('^')) {
      long e = read_nat();
      p = p.pow(static_cast<int>(e));
    }
    return p;
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      skip_ws();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == 'u') return variable();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return rational();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string name;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        name += text_[pos_++];
      }
      throw UnknownVariable(name, start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Poly variable() {
    std::size_t start = pos_;
    ++pos_;  // consume 'u'
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("variable needs a numeric index", pos_);
    }
    long idx = read_digits();
    if (idx < 1 || idx > k_) throw IndexOutOfRange(static_cast<int>(idx), k_, start);
    return Poly::variable(k_, static_cast<int>(idx) - 1);
  }

  Poly rational() {
    std::size_t start = pos_;
    bool negative = accept('-');
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected a number", pos_);
    }
    std::string digits = read_digit_string();
    std::string denom;
    if (accept('/')) {
      skip_ws();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        throw ParseError("expected a denominator", pos_);
      }
      denom = read_digit_string();
      bool zero = denom.find_first_not_of('0') == std::string::npos;
      if (zero) throw DivisionByZeroLiteral(start);
    }
    std::string literal = (negative ? "-" : "") + digits + (denom.empty() ? "" : "/" + denom);
    return Poly::constant(k_, Rational::from_string(literal));
  }

  long read_nat() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected an exponent", pos_);
    }
    return read_digits();
  }

  long read_digits() {
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (v > 1000000) throw ParseError("number too large", pos_);
    }
    return v;
  }

  std::string read_digit_string() {
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_++];
    }
    return s;
  }

  const std::string& text_;
  int k_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_polynomial(const std::string& text, int k) { return ExprParser(text, k).parse(); }

std::string print_polynomial(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = c.abs();
    bool leading_negative = first && c.sign() < 0;
    if (first) {
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string monomial;
    for (int i = 0; i < p.vars(); ++i) {
      int e = m[i];
      if (e == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "u" + std::to_string(i + 1);
      if (e > 1) monomial += "^" + std::to_string(e);
    }
    if (monomial.empty()) {
      out += leading_negative ? "-" + a.str() : a.str();
    } else if (leading_negative) {
      // "-u1" is not a term under the grammar; spell the coefficient out.
      out += "-" + a.str() + "*" + monomial;
    } else if (a.is_one()) {
      out += monomial;
    } else {
      out += a.str() + "*" + monomial;
    }
  }
  return out;
}

InputDocument load_input_document(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), 0);
  }
  InputDocument doc;
  try {
    doc.name = j.at("name").get<std::string>();
    doc.k = j.at("k").get<int>();
    doc.N = j.at("N").get<int>();
    doc.coordinates = j.at("coordinates").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad input document: ") + e.what(), 0);
  }
  return doc;
}

std::string save_input_document(const InputDocument& doc) {
  nlohmann::ordered_json j;
  j["name"] = doc.name;
  j["k"] = doc.k;
  j["N"] = doc.N;
  j["coordinates"] = doc.coordinates;
  return j.dump(2);
}

Parametrization parse_parametrization(const InputDocument& doc) {
  if (doc.k < 1) throw ParseError("k must be positive", 0);
  if (doc.N < 1) throw ParseError("N must be positive", 0);
  if (static_cast<int>(doc.coordinates.size()) != doc.N) {
    throw ParseError("coordinate count must equal N", 0);
  }
  std::vector<Poly> coords;
  coords.reserve(doc.coordinates.size());
  for (const std::string& text : doc.coordinates) {
    coords.push_back(parse_polynomial(text, doc.k));
  }
  return make_polynomial_parametrization(doc.name, doc.k, std::move(coords));
}

}  // namespace osculant
