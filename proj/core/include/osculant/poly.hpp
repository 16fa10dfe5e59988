#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osculant/multiindex.hpp"
#include "osculant/rational.hpp"

namespace osculant {

// Sparse multivariate polynomial over the rationals. Terms are kept in the
// canonical listing order and zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<MultiIndex, Rational, MiListingLess>;

  explicit Poly(int vars) : vars_(vars) {}
  static Poly constant(int vars, Rational c);
  static Poly variable(int vars, int i);  // monomial u_i, slots are 0-based

  int vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Total degree; -1 for the zero polynomial.
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coeff(const MultiIndex& m) const;
  void set_coeff(const MultiIndex& m, Rational c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;
  Poly scaled(const Rational& c) const;
  Poly pow(int e) const;
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  Poly diff(int var) const;
  Rational eval(const std::vector<Rational>& point) const;
  // Substitute u_i -> sum_j A[i][j] u_j (square k x k matrix of rationals).
  Poly compose_linear(const std::vector<std::vector<Rational>>& a) const;
  // Re-embed into a ring with more variables; existing slots keep position.
  Poly widened(int new_vars) const;

  // gcd of all coefficients as a positive rational (content); 0 for zero.
  Rational content() const;
  // Leading term under the graded order used for exact division.
  const std::pair<const MultiIndex, Rational>& leading_term() const;
  // Exact division; nullopt when the divisor does not divide exactly.
  std::optional<Poly> divided_exactly_by(const Poly& d) const;

 private:
  int vars_;
  TermMap terms_;
};

// Quotient of two polynomials. Denominators are normalised (positive leading
// coefficient, content 1, common monomial and exact factors cancelled) but no
// full multivariate gcd is attempted.
class RatFunc {
 public:
  explicit RatFunc(Poly num);
  RatFunc(Poly num, Poly den);
  static RatFunc constant(int vars, Rational c) { return RatFunc(Poly::constant(vars, std::move(c))); }

  int vars() const { return num_.vars(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;

  RatFunc diff(int var) const;
  Rational eval(const std::vector<Rational>& point) const;  // throws DenominatorVanishes
  bool denominator_vanishes(const std::vector<Rational>& point) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  RatFunc operator-() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace osculant
