#include "osculant/rational.hpp"

#include <ostream>

#include "osculant/errors.hpp"

namespace osculant {

Rational::Rational(long num, long den) {
  if (den == 0) throw EngineError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) {
  if (sgn(v_.get_den()) == 0) throw EngineError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::from_string(const std::string& text) {
  mpq_class v;
  if (v.set_str(text, 10) != 0) throw EngineError("malformed rational literal: " + text);
  if (sgn(v.get_den()) == 0) throw EngineError("rational with zero denominator");
  v.canonicalize();
  Rational r;
  r.v_ = std::move(v);
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw EngineError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::abs() const {
  Rational r(*this);
  if (r.sign() < 0) r.v_ = -r.v_;
  return r;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace osculant
