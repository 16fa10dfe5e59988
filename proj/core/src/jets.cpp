#include "osculant/jets.hpp"

#include <map>
#include <stdexcept>
#include <string>

#include "osculant/errors.hpp"

namespace osculant {

namespace {

constexpr int kMaxResamples = 200;

// Rows of the jet matrix as rational functions, lift convention.
std::vector<std::vector<RatFunc>> jet_rows_ratfunc(const Parametrization& p, int t) {
  auto derivs = jet_derivatives(p, t);
  auto listing = mi_enumerate(p.k, t, MiRange::up_to_order);
  std::vector<std::vector<RatFunc>> rows;
  rows.reserve(listing.size());
  for (std::size_t i = 0; i < listing.size(); ++i) {
    std::vector<RatFunc> row;
    row.reserve(p.N + 1);
    bool base = listing[i].order() == 0;
    row.push_back(RatFunc::constant(p.k, Rational(base ? 1 : 0)));
    for (int j = 0; j < p.N; ++j) row.push_back(derivs[i][j]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

std::vector<std::vector<RatFunc>> jet_derivatives(const Parametrization& p, int t) {
  p.validate();
  auto listing = mi_enumerate(p.k, t, MiRange::up_to_order);
  std::vector<std::vector<RatFunc>> table;
  table.reserve(listing.size());
  std::map<MultiIndex, int, MiListingLess> position;
  for (std::size_t i = 0; i < listing.size(); ++i) {
    const MultiIndex& mi = listing[i];
    if (mi.order() == 0) {
      table.push_back(p.coords);
    } else {
      int var = 0;
      while (mi[var] == 0) ++var;
      const auto& parent = table[position.at(mi.lowered(var))];
      std::vector<RatFunc> row;
      row.reserve(p.N);
      for (const RatFunc& f : parent) row.push_back(f.diff(var));
      table.push_back(std::move(row));
    }
    position.emplace(mi, static_cast<int>(i));
  }
  return table;
}

JetMatrix jet_matrix(const Parametrization& p, const std::vector<Rational>& u, int t) {
  auto rows = jet_rows_ratfunc(p, t);
  JetMatrix jm;
  jm.order = t;
  jm.point = u;
  jm.rows = MatrixQ(static_cast<int>(rows.size()), p.N + 1);
  for (int r = 0; r < jm.rows.rows(); ++r) {
    for (int c = 0; c <= p.N; ++c) jm.rows.at(r, c) = rows[r][c].eval(u);
  }
  return jm;
}

MatrixP jet_matrix_symbolic(const Parametrization& p, int t) {
  auto rows = jet_rows_ratfunc(p, t);
  MatrixP m(static_cast<int>(rows.size()), p.N + 1, p.k);
  for (int r = 0; r < m.rows(); ++r) {
    Poly common = Poly::constant(p.k, Rational(1));
    for (const RatFunc& e : rows[r]) {
      if (!e.is_polynomial()) common = common * e.den();
    }
    for (int c = 0; c <= p.N; ++c) {
      const RatFunc& e = rows[r][c];
      if (e.is_polynomial()) {
        m.at(r, c) = e.num() * common;
      } else {
        auto cofactor = common.divided_exactly_by(e.den());
        if (!cofactor) throw std::logic_error("row denominator clearing failed");
        m.at(r, c) = e.num() * *cofactor;
      }
    }
  }
  return m;
}

int jet_rank(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto) {
  if (mode == RankMode::symbolic) return rank_symbolic(jet_matrix_symbolic(p, t));
  auto rows = jet_rows_ratfunc(p, t);
  PointSampler sampler(proto, "jets/rank/t=" + std::to_string(t));
  int best = 0;
  int produced = 0, attempts = 0;
  while (produced < proto.samples && attempts < kMaxResamples) {
    ++attempts;
    std::vector<Rational> u = sampler.point(p.k);
    try {
      MatrixQ m(static_cast<int>(rows.size()), p.N + 1);
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c <= p.N; ++c) m.at(r, c) = rows[r][c].eval(u);
      best = std::max(best, rank_exact(m));
      ++produced;
    } catch (const DenominatorVanishes&) {
      continue;  // resample
    }
  }
  if (produced == 0) throw DenominatorVanishes();
  return best;
}

int osc_dim(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto) {
  if (t < 1) throw std::invalid_argument("osculating dimension needs t >= 1");
  return jet_rank(p, t, mode, proto) - 1;
}

GenericPoint find_generic_point(const Parametrization& p, int t, const SampleProtocol& proto,
                                std::string_view tag) {
  auto rows = jet_rows_ratfunc(p, t);
  PointSampler sampler(proto, std::string(tag) + "/t=" + std::to_string(t));
  std::vector<std::pair<std::vector<Rational>, int>> candidates;
  int produced = 0, attempts = 0;
  while (produced < proto.samples && attempts < kMaxResamples) {
    ++attempts;
    std::vector<Rational> u = sampler.point(p.k);
    try {
      MatrixQ m(static_cast<int>(rows.size()), p.N + 1);
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c <= p.N; ++c) m.at(r, c) = rows[r][c].eval(u);
      candidates.emplace_back(std::move(u), rank_exact(m));
      ++produced;
    } catch (const DenominatorVanishes&) {
      continue;
    }
  }
  if (candidates.empty()) throw NonGenericPoint();
  int best = 0;
  for (const auto& [u, r] : candidates) best = std::max(best, r);
  for (auto& [u, r] : candidates) {
    if (r == best) return GenericPoint{std::move(u), r};
  }
  throw NonGenericPoint();
}

int laplace_count(const Parametrization& p, int s, RankMode mode, const SampleProtocol& proto) {
  if (s < 2) throw std::invalid_argument("relation count needs order s >= 2");
  int d_s = jet_rank(p, s, mode, proto) - 1;
  int d_prev = jet_rank(p, s - 1, mode, proto) - 1;
  return static_cast<int>(binomial(p.k - 1 + s, s)) - (d_s - d_prev);
}

namespace {

// Rows of `kernel` (vectors over the up-to-order listing) that are new at
// order s: echelonise with the exact-order-s block leading and keep the rows
// whose pivot lands in that block.
MatrixQ new_relations(const MatrixQ& kernel, int k, int s) {
  int total = kernel.cols();
  int low = static_cast<int>(binomial(k + s - 1, s - 1));  // |I| <= s-1 block size
  std::vector<int> order;
  order.reserve(total);
  for (int c = low; c < total; ++c) order.push_back(c);
  for (int c = 0; c < low; ++c) order.push_back(c);
  std::vector<int> pivots;
  MatrixQ r = rref_in_column_order(kernel, order, &pivots);
  int keep = 0;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= low) ++keep;
  }
  // Top-block pivots are discovered first, so they occupy the leading rows.
  MatrixQ out(keep, total);
  for (int i = 0; i < keep; ++i)
    for (int c = 0; c < total; ++c) out.at(i, c) = r.at(i, c);
  return out;
}

}  // namespace

LaplaceSystem laplace_basis(const Parametrization& p, int s, const std::vector<Rational>& u,
                            const SampleProtocol& proto) {
  if (s < 2) throw std::invalid_argument("relation basis needs order s >= 2");
  JetMatrix upper = jet_matrix(p, u, s);
  // Genericity: the point must realise the generic rank at order s-1 and s,
  // otherwise spurious relations appear.
  int low_rows = static_cast<int>(binomial(p.k + s - 1, s - 1));
  MatrixQ lower(low_rows, p.N + 1);
  for (int r = 0; r < low_rows; ++r)
    for (int c = 0; c <= p.N; ++c) lower.at(r, c) = upper.rows.at(r, c);
  if (rank_exact(lower) != jet_rank(p, s - 1, RankMode::sampled, proto) ||
      rank_exact(upper.rows) != jet_rank(p, s, RankMode::sampled, proto)) {
    throw NonGenericPoint();
  }
  std::vector<std::vector<Rational>> kernel = nullspace(upper.rows.transposed());
  MatrixQ km(0, upper.rows.rows());
  for (const auto& v : kernel) km.append_row(v);

  LaplaceSystem out;
  out.order = s;
  out.vars = p.k;
  out.mode = LaplaceMode::pointwise;
  out.basis = new_relations(km, p.k, s);
  return out;
}

LaplaceSystem global_laplace_basis(const Parametrization& p, int s) {
  if (s < 2) throw std::invalid_argument("relation basis needs order s >= 2");
  if (!p.polynomial()) throw UnsupportedRationalCoords();
  auto listing = mi_enumerate(p.k, s, MiRange::up_to_order);
  auto derivs = jet_derivatives(p, s);
  int m = static_cast<int>(listing.size());

  // Identity in u: one equation per coordinate per monomial, plus the lift
  // row forcing the order-zero coefficient to vanish.
  MatrixQ a(0, m);
  {
    std::vector<Rational> lift_row(m);
    lift_row[0] = Rational(1);
    a.append_row(lift_row);
  }
  for (int j = 0; j < p.N; ++j) {
    std::map<MultiIndex, std::vector<Rational>, MiListingLess> rows_by_monomial;
    for (int i = 0; i < m; ++i) {
      const Poly& g = derivs[i][j].num();
      for (const auto& [mono, c] : g.terms()) {
        auto [it, inserted] = rows_by_monomial.try_emplace(mono, std::vector<Rational>(m));
        it->second[i] = c;
      }
    }
    for (auto& [mono, row] : rows_by_monomial) a.append_row(row);
  }

  std::vector<std::vector<Rational>> kernel = nullspace(a);
  MatrixQ km(0, m);
  for (const auto& v : kernel) km.append_row(v);

  LaplaceSystem out;
  out.order = s;
  out.vars = p.k;
  out.mode = LaplaceMode::constant_coefficient;
  out.basis = new_relations(km, p.k, s);
  return out;
}

ExpectedDims expected_dims(int k, int N, int d_prev, int t) {
  ExpectedDims e;
  long long unclamped = d_prev + binomial(k - 1 + t, t);
  e.e = static_cast<int>(std::min<long long>(N, unclamped));
  e.k_t = binomial(k + t, t) - 1;
  e.trivial = std::max<long long>(0, e.k_t - N);
  return e;
}

int OsculatingProfile::d(int t) const {
  if (t <= 0) return 0;
  if (t > static_cast<int>(orders.size())) throw std::out_of_range("order beyond profile");
  return orders[t - 1].d;
}

OsculatingProfile build_profile(const Parametrization& p, int t_max, RankMode mode,
                                const SampleProtocol& proto, bool with_global) {
  OsculatingProfile prof;
  prof.k = p.k;
  prof.N = p.N;
  int d_prev = 0;
  for (int t = 1; t <= t_max; ++t) {
    OrderRow row;
    row.t = t;
    row.d = osc_dim(p, t, mode, proto);
    ExpectedDims e = expected_dims(p.k, p.N, d_prev, t);
    row.e = e.e;
    row.k_t = e.k_t;
    row.trivial = e.trivial;
    row.delta = static_cast<int>(binomial(p.k - 1 + t, t)) - (row.d - d_prev);
    if (with_global && p.polynomial() && t >= 2) {
      row.delta_global = global_laplace_basis(p, t).count();
    }
    if (t == 1) prof.immersion = (row.d == p.k);
    prof.orders.push_back(std::move(row));
    d_prev = prof.orders.back().d;
  }
  return prof;
}

}  // namespace osculant
