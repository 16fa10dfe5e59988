#include "osculant/parametrization.hpp"

#include <stdexcept>

#include "osculant/errors.hpp"

namespace osculant {

bool Parametrization::polynomial() const {
  for (const RatFunc& c : coords) {
    if (!c.is_polynomial()) return false;
  }
  return true;
}

void Parametrization::validate() const {
  if (k < 1) throw EngineError("parametrization needs at least one parameter");
  if (N < k) throw EngineError("ambient dimension below source dimension");
  if (static_cast<int>(coords.size()) != N) {
    throw EngineError("parametrization coordinate count differs from N");
  }
  for (const RatFunc& c : coords) {
    if (c.vars() != k) throw EngineError("coordinate uses a foreign variable count");
  }
}

Parametrization make_polynomial_parametrization(std::string name, int k,
                                                std::vector<Poly> coords) {
  Parametrization p;
  p.name = std::move(name);
  p.k = k;
  p.N = static_cast<int>(coords.size());
  p.coords.reserve(coords.size());
  for (Poly& c : coords) p.coords.emplace_back(std::move(c));
  p.validate();
  return p;
}

Parametrization reparametrized(const Parametrization& p,
                               const std::vector<std::vector<Rational>>& a) {
  Parametrization out = p;
  out.name = p.name + "#reparam";
  out.coords.clear();
  for (const RatFunc& c : p.coords) {
    out.coords.emplace_back(c.num().compose_linear(a), c.den().compose_linear(a));
  }
  return out;
}

Parametrization projectively_transformed(const Parametrization& p, const MatrixQ& m) {
  if (m.rows() != p.N + 1 || m.cols() != p.N + 1) {
    throw std::invalid_argument("projective transform must be (N+1) x (N+1)");
  }
  // Images of the lift coordinates: y_i = sum_j m[i][j] * lift_j.
  std::vector<RatFunc> lift;
  lift.reserve(p.N + 1);
  lift.emplace_back(Poly::constant(p.k, Rational(1)));
  for (const RatFunc& c : p.coords) lift.push_back(c);

  std::vector<RatFunc> image;
  image.reserve(p.N + 1);
  for (int i = 0; i <= p.N; ++i) {
    RatFunc acc(Poly(p.k));
    for (int j = 0; j <= p.N; ++j) {
      const Rational& w = m.at(i, j);
      if (!w.is_zero()) acc = acc + RatFunc(lift[j].num().scaled(w), lift[j].den());
    }
    image.push_back(std::move(acc));
  }
  if (image[0].is_zero()) throw EngineError("transform sends the chart row to zero");

  Parametrization out;
  out.name = p.name + "#projective";
  out.k = p.k;
  out.N = p.N;
  for (int i = 1; i <= p.N; ++i) {
    out.coords.emplace_back(image[i].num() * image[0].den(), image[i].den() * image[0].num());
  }
  out.validate();
  return out;
}

}  // namespace osculant
