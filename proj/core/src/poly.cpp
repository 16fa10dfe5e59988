#include "osculant/poly.hpp"

#include <stdexcept>

#include "osculant/errors.hpp"

namespace osculant {

Poly Poly::constant(int vars, Rational c) {
  Poly p(vars);
  if (!c.is_zero()) p.terms_.emplace(MultiIndex::zero(vars), std::move(c));
  return p;
}

Poly Poly::variable(int vars, int i) {
  if (i < 0 || i >= vars) throw std::invalid_argument("variable slot out of range");
  Poly p(vars);
  p.terms_.emplace(MultiIndex::zero(vars).bumped(i), Rational(1));
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.order() == 0);
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.order();
}

Rational Poly::coeff(const MultiIndex& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::set_coeff(const MultiIndex& m, Rational c) {
  if (m.size() != vars_) throw std::invalid_argument("multi-index length mismatch");
  if (c.is_zero()) {
    terms_.erase(m);
  } else {
    terms_[m] = std::move(c);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (vars_ != o.vars_) throw std::invalid_argument("polynomial variable count mismatch");
  for (const auto& [m, c] : o.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, -c);
    } else {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.vars_ != b.vars_) throw std::invalid_argument("polynomial variable count mismatch");
  Poly out(a.vars_);
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      MultiIndex m = ma.plus(mb);
      Rational c = ca * cb;
      auto it = out.terms_.find(m);
      if (it == out.terms_.end()) {
        out.terms_.emplace(std::move(m), std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out(vars_);
  if (c.is_zero()) return out;
  for (const auto& [m, coef] : terms_) out.terms_.emplace(m, coef * c);
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly acc = Poly::constant(vars_, Rational(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::diff(int var) const {
  if (var < 0 || var >= vars_) throw std::invalid_argument("variable slot out of range");
  Poly out(vars_);
  for (const auto& [m, c] : terms_) {
    int e = m[var];
    if (e == 0) continue;
    out.terms_.emplace(m.lowered(var), c * Rational(e));
  }
  return out;
}

Rational Poly::eval(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != vars_) {
    throw std::invalid_argument("evaluation point length mismatch");
  }
  // Per-variable power cache keeps repeated jet evaluations cheap.
  std::vector<std::vector<Rational>> powers(vars_);
  for (int i = 0; i < vars_; ++i) powers[i].push_back(Rational(1));
  Rational acc(0);
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < vars_; ++i) {
      int e = m[i];
      auto& cache = powers[i];
      while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * point[i]);
      if (e > 0) term *= cache[e];
    }
    acc += term;
  }
  return acc;
}

Poly Poly::compose_linear(const std::vector<std::vector<Rational>>& a) const {
  if (static_cast<int>(a.size()) != vars_) {
    throw std::invalid_argument("substitution matrix must be square of size vars");
  }
  std::vector<Poly> images;
  images.reserve(vars_);
  for (int i = 0; i < vars_; ++i) {
    Poly img(vars_);
    for (int j = 0; j < vars_; ++j) {
      if (!a[i][j].is_zero()) img += Poly::variable(vars_, j).scaled(a[i][j]);
    }
    images.push_back(std::move(img));
  }
  Poly out(vars_);
  for (const auto& [m, c] : terms_) {
    Poly term = Poly::constant(vars_, c);
    for (int i = 0; i < vars_; ++i) {
      if (m[i] > 0) term = term * images[i].pow(m[i]);
    }
    out += term;
  }
  return out;
}

Poly Poly::widened(int new_vars) const {
  if (new_vars < vars_) throw std::invalid_argument("cannot shrink variable count");
  Poly out(new_vars);
  for (const auto& [m, c] : terms_) {
    std::vector<int> e = m.entries();
    e.resize(new_vars, 0);
    out.terms_.emplace(MultiIndex(std::move(e)), c);
  }
  return out;
}

Rational Poly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class num_gcd(0);
  mpz_class den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_class n = c.num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_class d = c.den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  return Rational(mpq_class(num_gcd, den_lcm));
}

const std::pair<const MultiIndex, Rational>& Poly::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return *terms_.rbegin();
}

std::optional<Poly> Poly::divided_exactly_by(const Poly& d) const {
  if (d.is_zero()) throw EngineError("polynomial division by zero");
  Poly q(vars_);
  Poly r = *this;
  const auto& [dm, dc] = d.leading_term();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.leading_term();
    if (!dm.divides(rm)) return std::nullopt;
    Poly t(vars_);
    t.terms_.emplace(rm.minus(dm), rc / dc);
    q += t;
    r -= t * d;
  }
  return q;
}

// ---------------------------------------------------------------------------

RatFunc::RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.vars(), Rational(1))) {}

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw EngineError("rational function with zero denominator");
  normalize();
}

bool RatFunc::is_polynomial() const {
  return den_.is_constant();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.vars(), Rational(1));
    return;
  }
  if (den_.is_constant()) {
    Rational c = den_.leading_term().second;
    if (!c.is_one()) {
      num_ = num_.scaled(Rational(1) / c);
      den_ = Poly::constant(num_.vars(), Rational(1));
    }
    return;
  }
  // Pull out any shared monomial factor.
  std::vector<int> shared(num_.vars(), 0);
  bool first = true;
  for (const Poly* p : {&num_, &den_}) {
    for (const auto& [m, c] : p->terms()) {
      for (int i = 0; i < num_.vars(); ++i) {
        shared[i] = first ? m[i] : std::min(shared[i], m[i]);
      }
      first = false;
    }
  }
  bool any = false;
  for (int e : shared) any = any || e > 0;
  if (any) {
    Poly mono(num_.vars());
    mono.set_coeff(MultiIndex(shared), Rational(1));
    num_ = *num_.divided_exactly_by(mono);
    den_ = *den_.divided_exactly_by(mono);
  }
  if (auto q = num_.divided_exactly_by(den_)) {
    num_ = std::move(*q);
    den_ = Poly::constant(num_.vars(), Rational(1));
    return;
  }
  // Scale so the denominator has content 1 and positive leading coefficient.
  Rational c = den_.content();
  if (den_.leading_term().second.sign() < 0) c = -c;
  if (!c.is_one()) {
    Rational inv = Rational(1) / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc RatFunc::diff(int var) const {
  if (is_polynomial()) return RatFunc(num_.diff(var));
  Poly n = num_.diff(var) * den_ - num_ * den_.diff(var);
  return RatFunc(std::move(n), den_ * den_);
}

Rational RatFunc::eval(const std::vector<Rational>& point) const {
  Rational d = den_.eval(point);
  if (d.is_zero()) throw DenominatorVanishes();
  return num_.eval(point) / d;
}

bool RatFunc::denominator_vanishes(const std::vector<Rational>& point) const {
  return den_.eval(point).is_zero();
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

}  // namespace osculant
