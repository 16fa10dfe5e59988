#include "osculant/defects.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "osculant/errors.hpp"

namespace osculant {

namespace {

constexpr int kMaxResamples = 200;

// Columns of the differential of Psi(u, lambda) at a numeric point, as rows
// of a matrix over Q^(N+1). Needs the jet table up to order t+1.
MatrixQ join_differential_at(const Parametrization& p, int t,
                             const std::vector<std::vector<RatFunc>>& derivs,
                             const std::vector<MultiIndex>& listing,
                             const std::vector<Rational>& u, const std::vector<Rational>& lambda) {
  auto upper = mi_enumerate(p.k, t + 1, MiRange::up_to_order);
  // Evaluate every lift row once.
  std::vector<std::vector<Rational>> lift(upper.size(), std::vector<Rational>(p.N + 1));
  for (std::size_t i = 0; i < upper.size(); ++i) {
    lift[i][0] = Rational(upper[i].order() == 0 ? 1 : 0);
    for (int j = 0; j < p.N; ++j) lift[i][j + 1] = derivs[i][j].eval(u);
  }
  MatrixQ cols(0, p.N + 1);
  // d/du_j: sum over lambda entries of the shifted derivative lifts. The
  // |I| = 0 summand differentiates the full lift (1, x), whose derivative is
  // the plain shifted row, so the same formula covers it.
  for (int j = 0; j < p.k; ++j) {
    std::vector<Rational> col(p.N + 1);
    for (std::size_t i = 0; i < listing.size(); ++i) {
      int pos = mi_position(upper, listing[i].bumped(j));
      for (int c = 0; c <= p.N; ++c) col[c] += lambda[i] * lift[pos][c];
    }
    cols.append_row(col);
  }
  for (std::size_t i = 0; i < listing.size(); ++i) {
    cols.append_row(lift[mi_position(upper, listing[i])]);
  }
  return cols;
}

// Symbolic differential of Psi over the ring Q[u, lambda].
MatrixP join_differential_symbolic(const Parametrization& p, int t) {
  auto upper = mi_enumerate(p.k, t + 1, MiRange::up_to_order);
  auto listing = mi_enumerate(p.k, t, MiRange::up_to_order);
  auto derivs = jet_derivatives(p, t + 1);
  int m = static_cast<int>(listing.size());
  int vars = p.k + m;

  // Lift rows widened into the joint ring.
  std::vector<std::vector<RatFunc>> lift(upper.size());
  for (std::size_t i = 0; i < upper.size(); ++i) {
    lift[i].reserve(p.N + 1);
    lift[i].emplace_back(Poly::constant(vars, Rational(upper[i].order() == 0 ? 1 : 0)));
    for (int j = 0; j < p.N; ++j) {
      lift[i].emplace_back(derivs[i][j].num().widened(vars), derivs[i][j].den().widened(vars));
    }
  }

  std::vector<std::vector<RatFunc>> cols;
  for (int j = 0; j < p.k; ++j) {
    std::vector<RatFunc> col(p.N + 1, RatFunc(Poly(vars)));
    for (int i = 0; i < m; ++i) {
      RatFunc lam(Poly::variable(vars, p.k + i));
      int pos = mi_position(upper, listing[i].bumped(j));
      for (int c = 0; c <= p.N; ++c) col[c] = col[c] + lam * lift[pos][c];
    }
    cols.push_back(std::move(col));
  }
  for (int i = 0; i < m; ++i) cols.push_back(lift[mi_position(upper, listing[i])]);

  // Rows of the matrix are ambient coordinates; clear denominators per row.
  MatrixP out(p.N + 1, static_cast<int>(cols.size()), vars);
  for (int r = 0; r <= p.N; ++r) {
    Poly common = Poly::constant(vars, Rational(1));
    for (const auto& col : cols) {
      if (!col[r].is_polynomial()) common = common * col[r].den();
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const RatFunc& e = cols[c][r];
      if (e.is_polynomial()) {
        out.at(r, static_cast<int>(c)) = e.num() * common;
      } else {
        auto cofactor = common.divided_exactly_by(e.den());
        if (!cofactor) throw std::logic_error("row denominator clearing failed");
        out.at(r, static_cast<int>(c)) = e.num() * *cofactor;
      }
    }
  }
  return out;
}

}  // namespace

int tan_variety_dim(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto) {
  if (t < 1) throw std::invalid_argument("osculating variety needs t >= 1");
  if (mode == RankMode::symbolic) {
    return rank_symbolic(join_differential_symbolic(p, t)) - 1;
  }
  auto listing = mi_enumerate(p.k, t, MiRange::up_to_order);
  auto derivs = jet_derivatives(p, t + 1);
  PointSampler sampler(proto, "defects/tan/t=" + std::to_string(t));
  int best = 0;
  int produced = 0, attempts = 0;
  while (produced < proto.samples && attempts < kMaxResamples) {
    ++attempts;
    std::vector<Rational> u = sampler.point(p.k);
    std::vector<Rational> lambda = sampler.nonzero_point(static_cast<int>(listing.size()));
    try {
      MatrixQ cols = join_differential_at(p, t, derivs, listing, u, lambda);
      best = std::max(best, rank_exact(cols));
      ++produced;
    } catch (const DenominatorVanishes&) {
      continue;
    }
  }
  if (produced == 0) throw DenominatorVanishes();
  return best - 1;
}

namespace {

// Condition matrix for the Gauss-map kernel at one point: one block of rows
// per exact-order-t index I, pairing each annihilator covector against the
// shifted lifts x^{I+e_j}.
MatrixQ gauss_conditions_at(const Parametrization& p, int t,
                            const std::vector<std::vector<RatFunc>>& derivs,
                            const std::vector<MultiIndex>& upper,
                            const std::vector<std::vector<Rational>>& annihilator,
                            const std::vector<Rational>& u) {
  auto tops = mi_enumerate(p.k, t, MiRange::exact_order);
  MatrixQ a(0, p.k);
  for (const MultiIndex& mi : tops) {
    // Shifted lifts evaluated once per block.
    std::vector<std::vector<Rational>> shifted(p.k, std::vector<Rational>(p.N + 1));
    for (int j = 0; j < p.k; ++j) {
      int pos = mi_position(upper, mi.bumped(j));
      shifted[j][0] = Rational(0);
      for (int c = 0; c < p.N; ++c) shifted[j][c + 1] = derivs[pos][c].eval(u);
    }
    for (const auto& cvec : annihilator) {
      std::vector<Rational> row(p.k);
      for (int j = 0; j < p.k; ++j) {
        Rational acc(0);
        for (int c = 0; c <= p.N; ++c) acc += cvec[c] * shifted[j][c];
        row[j] = acc;
      }
      a.append_row(row);
    }
  }
  return a;
}

}  // namespace

int gauss_image_dim(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto) {
  if (t < 1) throw std::invalid_argument("Gauss image needs t >= 1");
  int d_t = osc_dim(p, t, mode, proto);
  if (d_t == p.N) return 0;  // constant map: the osculating space fills the ambient

  auto upper = mi_enumerate(p.k, t + 1, MiRange::up_to_order);
  auto derivs = jet_derivatives(p, t + 1);

  if (mode == RankMode::symbolic) {
    MatrixP jets = jet_matrix_symbolic(p, t);
    std::vector<std::vector<Poly>> annihilator = nullspace_symbolic(jets);
    auto tops = mi_enumerate(p.k, t, MiRange::exact_order);
    std::vector<std::vector<RatFunc>> rows;
    for (const MultiIndex& mi : tops) {
      for (const auto& cvec : annihilator) {
        std::vector<RatFunc> row;
        row.reserve(p.k);
        for (int j = 0; j < p.k; ++j) {
          int pos = mi_position(upper, mi.bumped(j));
          RatFunc acc(Poly(p.k));
          for (int c = 0; c < p.N; ++c) {
            acc = acc + RatFunc(cvec[c + 1]) * derivs[pos][c];
          }
          row.push_back(std::move(acc));
        }
        rows.push_back(std::move(row));
      }
    }
    MatrixP a(static_cast<int>(rows.size()), p.k, p.k);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Poly common = Poly::constant(p.k, Rational(1));
      for (const RatFunc& e : rows[r]) {
        if (!e.is_polynomial()) common = common * e.den();
      }
      for (int c = 0; c < p.k; ++c) {
        const RatFunc& e = rows[r][c];
        if (e.is_polynomial()) {
          a.at(static_cast<int>(r), c) = e.num() * common;
        } else {
          auto cofactor = common.divided_exactly_by(e.den());
          if (!cofactor) throw std::logic_error("row denominator clearing failed");
          a.at(static_cast<int>(r), c) = e.num() * *cofactor;
        }
      }
    }
    return rank_symbolic(a);
  }

  // Sampled: only points realising the generic jet rank are trusted.
  auto jet_rows = jet_derivatives(p, t);
  auto listing_t = mi_enumerate(p.k, t, MiRange::up_to_order);
  PointSampler sampler(proto, "defects/gauss/t=" + std::to_string(t));
  int generic_rank = d_t + 1;
  int best = -1;
  int produced = 0, attempts = 0;
  while (produced < proto.samples && attempts < kMaxResamples) {
    ++attempts;
    std::vector<Rational> u = sampler.point(p.k);
    try {
      MatrixQ jm(static_cast<int>(listing_t.size()), p.N + 1);
      for (std::size_t i = 0; i < listing_t.size(); ++i) {
        jm.at(static_cast<int>(i), 0) = Rational(listing_t[i].order() == 0 ? 1 : 0);
        for (int j = 0; j < p.N; ++j) jm.at(static_cast<int>(i), j + 1) = jet_rows[i][j].eval(u);
      }
      if (rank_exact(jm) != generic_rank) {
        ++produced;
        continue;  // non-generic point, skip
      }
      std::vector<std::vector<Rational>> annihilator = nullspace(jm);
      MatrixQ a = gauss_conditions_at(p, t, derivs, upper, annihilator, u);
      best = std::max(best, rank_exact(a));
      ++produced;
    } catch (const DenominatorVanishes&) {
      continue;
    }
  }
  if (best < 0) throw NonGenericPoint();
  return best;
}

int dual_variety_dim(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto) {
  int d_t = osc_dim(p, t, mode, proto);
  if (d_t >= p.N) return -1;  // every hyperplane misses the osculating space
  int h = gauss_image_dim(p, t, mode, proto);
  int dim = h + p.N - 1 - d_t;
  int lo = p.N - d_t - 1;
  int hi = lo + p.k;
  return std::clamp(dim, lo, hi);
}

DefectReport defect_report(const Parametrization& p, int t, RankMode mode,
                           const SampleProtocol& proto) {
  DefectReport r;
  r.t = t;
  r.d = osc_dim(p, t, mode, proto);
  r.tan_dim = tan_variety_dim(p, t, mode, proto);
  r.expdim = std::min(p.k + r.d, p.N);
  r.ambient_clamped = p.k + r.d > p.N;
  r.o = r.ambient_clamped ? 0 : r.expdim - r.tan_dim;
  r.h = gauss_image_dim(p, t, mode, proto);
  if (r.d < p.N) {
    int lo = p.N - r.d - 1;
    r.dual_dim = std::clamp(r.h + p.N - 1 - r.d, lo, lo + p.k);
    r.dual_degenerate = r.dual_dim < p.N - 1 - r.d + p.k;
  }
  return r;
}

int osculating_defect(const Parametrization& p, int t, RankMode mode,
                      const SampleProtocol& proto) {
  return defect_report(p, t, mode, proto).o;
}

int form_dimension(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto) {
  if (mode == RankMode::symbolic) {
    return jet_rank(p, t, mode, proto) - jet_rank(p, t - 1, mode, proto) - 1;
  }
  GenericPoint gp = find_generic_point(p, t - 1, proto, "forms/ff");
  return fundamental_form(p, t, gp.u, proto).projdim();
}

TheoremVerdict tangent_lemma_check(const Parametrization& p, int t, RankMode mode,
                                   const SampleProtocol& proto) {
  if (t < 2) throw std::invalid_argument("tangent lemma needs t >= 2");
  TheoremVerdict v;
  v.theorem = "tangent-lemma";
  v.order = t;
  v.applicable = true;

  int tan_prev = tan_variety_dim(p, t - 1, mode, proto);
  int d_t = osc_dim(p, t, mode, proto);
  bool dims_ok = tan_prev <= d_t;

  // Column span of the join differential at order t-1 against the order-t
  // jet rows, at seeded generic samples.
  auto listing = mi_enumerate(p.k, t - 1, MiRange::up_to_order);
  auto derivs = jet_derivatives(p, t);
  PointSampler sampler(proto, "defects/lemma/t=" + std::to_string(t));
  bool span_ok = true;
  int produced = 0, attempts = 0;
  while (produced < proto.samples && attempts < kMaxResamples) {
    ++attempts;
    std::vector<Rational> u = sampler.point(p.k);
    std::vector<Rational> lambda = sampler.nonzero_point(static_cast<int>(listing.size()));
    try {
      MatrixQ cols = join_differential_at(p, t - 1, derivs, listing, u, lambda);
      JetMatrix jm = jet_matrix(p, u, t);
      span_ok = span_ok && row_space_contained(cols, jm.rows);
      ++produced;
    } catch (const DenominatorVanishes&) {
      continue;
    }
  }
  if (produced == 0) throw DenominatorVanishes();

  v.pass = dims_ok && span_ok;
  v.inputs = {{"tan_dim_prev", tan_prev}, {"d_t", d_t}};
  if (!dims_ok) v.notes.push_back("dimension consequence failed");
  if (!span_ok) v.notes.push_back("span containment failed at a sample point");
  return v;
}

TheoremVerdict check_theorem_A(const Parametrization& p, int t, RankMode mode,
                               const SampleProtocol& proto) {
  if (t < 2) throw std::invalid_argument("theorem A needs t >= 2");
  TheoremVerdict v;
  v.theorem = "A";
  v.order = t;

  int d_prev = osc_dim(p, t - 1, mode, proto);
  int delta_t = form_dimension(p, t, mode, proto);
  int ell = p.k - 1 - delta_t;
  bool regime = p.k + d_prev <= p.N;
  v.applicable = ell > 0 && regime;
  v.inputs = {{"k", p.k},       {"Delta_t", delta_t}, {"ell", ell},
              {"d_prev", d_prev}, {"regime", regime ? 1 : 0}};
  if (!v.applicable) {
    if (ell <= 0) v.notes.push_back("fundamental form too large: k - 1 - Delta_t <= 0");
    if (!regime) {
      v.notes.push_back("expected dimension truncated by the ambient (k + d_{t-1} > N)");
    }
    return v;
  }

  DefectReport prev = defect_report(p, t - 1, mode, proto);
  int h = gauss_image_dim(p, t, mode, proto);
  v.inputs.emplace_back("o_prev", prev.o);
  v.inputs.emplace_back("h", h);
  v.pass = prev.o >= ell && h <= p.k - ell;
  if (p.k == 1) {
    v.notes.push_back("k=1: curve spans only a linear space of dimension " +
                      std::to_string(d_prev));
  }
  if (ell == p.k - 1 && t == 2 && h == 1) {
    v.notes.push_back("developable bundle case: fibres are linear spaces of dimension k-1");
  }
  if (h == 0) {
    v.notes.push_back("constant Gauss map: variety spans only a linear space");
  }
  return v;
}

TheoremVerdict check_theorem_B(const Parametrization& p, int t, RankMode mode,
                               const SampleProtocol& proto) {
  if (t < 1) throw std::invalid_argument("theorem B needs t >= 1");
  TheoremVerdict v;
  v.theorem = "B";
  v.order = t;

  DefectReport rep = defect_report(p, t, mode, proto);
  int ell = rep.o;
  int delta = form_dimension(p, t + 1, mode, proto);

  GenericPoint gp = find_generic_point(p, t, proto, "defects/thmB");
  FormSystem ff = fundamental_form(p, t + 1, gp.u, proto);
  int jr = jacobian(ff, mode, proto).generic_rank;
  int ell_prime = p.k - jr;

  bool forward_gate = ell > 0 && delta >= p.k - ell;
  bool forward_pass = jr == p.k - ell;
  bool reverse_gate = delta >= jr;
  bool reverse_pass = rep.o == ell_prime;
  v.applicable = forward_gate || reverse_gate;
  v.pass = (!forward_gate || forward_pass) && (!reverse_gate || reverse_pass);
  v.inputs = {{"k", p.k},
              {"ell", ell},
              {"Delta", delta},
              {"jacobian_rank", jr},
              {"ell_prime", ell_prime},
              {"forward_gate", forward_gate ? 1 : 0},
              {"reverse_gate", reverse_gate ? 1 : 0},
              {"affine_forward_gate", (ell > 0 && delta + 1 >= p.k - ell) ? 1 : 0},
              {"affine_reverse_gate", (delta + 1 >= jr) ? 1 : 0}};
  if (!v.applicable) {
    v.notes.push_back("form dimension below both gating thresholds");
    if (jr == p.k - ell && ell > 0) {
      v.notes.push_back("rank condition holds but the form-dimension hypothesis fails");
    }
  }
  return v;
}

bool jacobian_chain_at(const Parametrization& p, int t, const std::vector<Rational>& u,
                       const SampleProtocol& proto) {
  FormSystem top = fundamental_form(p, t, u, proto);
  FormSystem prev = fundamental_form(p, t - 1, u, proto);
  return contains(derivative_span(top), prev);
}

TheoremVerdict check_jacobian_chain(const Parametrization& p, int t, RankMode mode,
                                    const SampleProtocol& proto) {
  if (t < 2) throw std::invalid_argument("jacobian chain needs t >= 2");
  (void)mode;  // the containment is checked pointwise in both modes
  TheoremVerdict v;
  v.theorem = "jacobian-chain";
  v.order = t;
  v.applicable = true;

  GenericPoint gp = find_generic_point(p, t, proto, "defects/chain");
  FormSystem top = fundamental_form(p, t, gp.u, proto);
  FormSystem prev = fundamental_form(p, t - 1, gp.u, proto);
  v.pass = contains(derivative_span(top), prev);
  v.inputs = {{"dim_form_t", top.projdim()}, {"dim_form_prev", prev.projdim()}};
  return v;
}

}  // namespace osculant
