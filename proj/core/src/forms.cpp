#include "osculant/forms.hpp"

#include <stdexcept>
#include <string>

#include "osculant/errors.hpp"

namespace osculant {

namespace {

long long form_cols(int degree, int vars) { return binomial(vars - 1 + degree, degree); }

}  // namespace

Poly FormSystem::form(int row) const {
  auto monomials = mi_enumerate(vars, degree, MiRange::exact_order);
  Poly f(vars);
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    f.set_coeff(monomials[i], basis.at(row, static_cast<int>(i)));
  }
  return f;
}

FormSystem make_form_system(int degree, int vars, const MatrixQ& rows) {
  FormSystem s;
  s.degree = degree;
  s.vars = vars;
  int cols = static_cast<int>(form_cols(degree, vars));
  if (rows.rows() == 0) {
    s.basis = MatrixQ(0, cols);
    return s;
  }
  if (rows.cols() != cols) throw std::invalid_argument("form coefficient width mismatch");
  s.basis = row_space_echelon(rows);
  return s;
}

FormSystem make_form_system(int degree, int vars, const std::vector<Poly>& forms) {
  auto monomials = mi_enumerate(vars, degree, MiRange::exact_order);
  MatrixQ rows(static_cast<int>(forms.size()), static_cast<int>(monomials.size()));
  for (std::size_t r = 0; r < forms.size(); ++r) {
    for (const auto& [m, c] : forms[r].terms()) {
      if (m.order() != degree) throw std::invalid_argument("generator of the wrong degree");
      int pos = mi_position(monomials, m);
      rows.at(static_cast<int>(r), pos) = c;
    }
  }
  return make_form_system(degree, vars, rows);
}

FormSystem fundamental_form(const Parametrization& p, int t, const std::vector<Rational>& u,
                            const SampleProtocol& proto) {
  if (t < 1) throw std::invalid_argument("fundamental form needs t >= 1");
  JetMatrix jm = jet_matrix(p, u, t);
  int low_rows = static_cast<int>(binomial(p.k + t - 1, t - 1));
  MatrixQ lower(low_rows, p.N + 1);
  for (int r = 0; r < low_rows; ++r)
    for (int c = 0; c <= p.N; ++c) lower.at(r, c) = jm.rows.at(r, c);
  if (rank_exact(lower) != jet_rank(p, t - 1, RankMode::sampled, proto)) {
    throw NonGenericPoint();
  }

  std::vector<std::vector<Rational>> annihilator = nullspace(lower);
  int top = jm.rows.rows() - low_rows;  // exact-order-t rows
  MatrixQ coeffs(static_cast<int>(annihilator.size()), top);
  for (std::size_t r = 0; r < annihilator.size(); ++r) {
    for (int i = 0; i < top; ++i) {
      Rational acc(0);
      for (int c = 0; c <= p.N; ++c) acc += annihilator[r][c] * jm.rows.at(low_rows + i, c);
      coeffs.at(static_cast<int>(r), i) = acc;
    }
  }
  return make_form_system(t, p.k, coeffs);
}

FormSystem associated_system(const LaplaceSystem& l) {
  int k = l.vars;
  int s = l.order;
  int total = static_cast<int>(binomial(k + s, s));
  int low = static_cast<int>(binomial(k + s - 1, s - 1));
  MatrixQ tops(l.count(), total - low);
  for (int r = 0; r < l.count(); ++r)
    for (int c = low; c < total; ++c) tops.at(r, c - low) = l.basis.at(r, c);
  return make_form_system(s, k, tops);
}

Rational apolar_pair(const FormSystem& a, int row_a, const FormSystem& b, int row_b) {
  if (a.degree != b.degree || a.vars != b.vars) throw DegreeMismatch();
  Rational acc(0);
  for (int c = 0; c < a.basis.cols(); ++c) acc += a.basis.at(row_a, c) * b.basis.at(row_b, c);
  return acc;
}

bool apolar_orthogonal(const FormSystem& a, const FormSystem& b) {
  for (int i = 0; i < a.basis.rows(); ++i) {
    for (int j = 0; j < b.basis.rows(); ++j) {
      if (!apolar_pair(a, i, b, j).is_zero()) return false;
    }
  }
  return true;
}

FormSystem apolar_complement(const FormSystem& s) {
  std::vector<std::vector<Rational>> kernel = nullspace(s.basis);
  MatrixQ rows(0, s.basis.cols());
  for (const auto& v : kernel) rows.append_row(v);
  return make_form_system(s.degree, s.vars, rows);
}

namespace {

Poly poly_det(const std::vector<std::vector<Poly>>& m, const std::vector<int>& rows,
              const std::vector<int>& cols, int vars) {
  std::size_t n = rows.size();
  if (n == 1) return m[rows[0]][cols[0]];
  Poly acc(vars);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < n; ++j) {
    if (m[rows[0]][cols[j]].is_zero()) continue;
    std::vector<int> sub_cols;
    for (std::size_t l = 0; l < n; ++l) {
      if (l != j) sub_cols.push_back(cols[l]);
    }
    Poly minor = poly_det(m, sub_rows, sub_cols, vars);
    Poly contrib = m[rows[0]][cols[j]] * minor;
    if (j % 2 == 0) {
      acc += contrib;
    } else {
      acc -= contrib;
    }
  }
  return acc;
}

void subsets(int n, int r, std::vector<int>& cur, int start, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, r, cur, i + 1, out);
    cur.pop_back();
  }
}

}  // namespace

JacobianData jacobian(const FormSystem& s, RankMode mode, const SampleProtocol& proto) {
  JacobianData jd;
  if (s.empty()) {
    jd.jacobian_system = make_form_system(std::max(0, s.degree - 1), s.vars, MatrixQ(0, 0));
    return jd;
  }
  int gens = s.basis.rows();
  jd.matrix.assign(gens, std::vector<Poly>(s.vars, Poly(s.vars)));
  for (int i = 0; i < gens; ++i) {
    Poly f = s.form(i);
    for (int g = 0; g < s.vars; ++g) jd.matrix[i][g] = f.diff(g);
  }

  MatrixP jm = MatrixP::from_rows(jd.matrix, s.vars);
  if (mode == RankMode::symbolic) {
    jd.generic_rank = rank_symbolic(jm);
  } else {
    PointSampler sampler(proto, "forms/jacobian/deg=" + std::to_string(s.degree));
    int best = 0;
    for (int i = 0; i < proto.samples; ++i) {
      best = std::max(best, rank_exact(jm.eval(sampler.point(s.vars))));
    }
    jd.generic_rank = best;
  }

  int r = jd.generic_rank;
  int minor_degree = r == 0 ? 0 : (s.degree - 1) * r;
  if (r == 0) {
    jd.jacobian_system = make_form_system(minor_degree, s.vars, MatrixQ(0, 0));
    return jd;
  }
  std::vector<std::vector<int>> row_sets, col_sets;
  std::vector<int> cur;
  subsets(gens, r, cur, 0, row_sets);
  subsets(s.vars, r, cur, 0, col_sets);
  std::vector<Poly> minors;
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) {
      Poly d = poly_det(jd.matrix, rs, cs, s.vars);
      if (!d.is_zero()) minors.push_back(std::move(d));
    }
  }
  jd.jacobian_system = make_form_system(minor_degree, s.vars, minors);
  return jd;
}

bool contains(const FormSystem& a, const FormSystem& b) {
  if (a.empty()) return true;
  if (a.degree != b.degree || a.vars != b.vars) throw DegreeMismatch();
  return row_space_contained(a.basis, b.basis);
}

FormSystem derivative_span(const FormSystem& s) {
  int degree = std::max(0, s.degree - 1);
  if (s.empty() || s.degree == 0) {
    FormSystem out;
    out.degree = degree;
    out.vars = s.vars;
    out.basis = MatrixQ(0, static_cast<int>(form_cols(degree, s.vars)));
    return out;
  }
  std::vector<Poly> partials;
  for (int i = 0; i < s.basis.rows(); ++i) {
    Poly f = s.form(i);
    for (int g = 0; g < s.vars; ++g) {
      Poly d = f.diff(g);
      if (!d.is_zero()) partials.push_back(std::move(d));
    }
  }
  FormSystem out = make_form_system(degree, s.vars, partials);
  return out;
}

}  // namespace osculant
