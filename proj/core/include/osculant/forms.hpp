#pragma once

#include <vector>

#include "osculant/jets.hpp"
#include "osculant/matrix.hpp"

namespace osculant {

// Linear system of degree-t forms in k variables. Rows of `basis` are
// coefficient vectors over mi_enumerate(k, t, exact_order), kept in reduced
// row echelon form, so the basis is the canonical representative of the row
// space. projdim() == -1 encodes the empty system.
struct FormSystem {
  int degree = 0;
  int vars = 0;
  MatrixQ basis;  // cols == binom(vars-1+degree, degree), possibly 0 rows

  int projdim() const { return basis.rows() - 1; }
  bool empty() const { return basis.rows() == 0; }
  Poly form(int row) const;  // row as a polynomial in the v-variables
};

FormSystem make_form_system(int degree, int vars, const MatrixQ& rows);
FormSystem make_form_system(int degree, int vars, const std::vector<Poly>& forms);

// The t-th fundamental form at u: one generator per annihilator covector of
// the order-(t-1) osculating span, with coefficient at v^I equal to the
// covector paired against the lifted derivative x^I(u), |I| = t. Its
// projective dimension is the per-order growth d_t - d_{t-1} - 1.
FormSystem fundamental_form(const Parametrization& p, int t, const std::vector<Rational>& u,
                            const SampleProtocol& proto);

// Degree-s forms built from the top-order coefficients of a relation basis.
FormSystem associated_system(const LaplaceSystem& l);

// Coefficient dot product of two generators of equal degree and variable
// count (no multinomial weights).
Rational apolar_pair(const FormSystem& a, int row_a, const FormSystem& b, int row_b);

// True when every generator of `a` pairs to zero with every generator of `b`.
bool apolar_orthogonal(const FormSystem& a, const FormSystem& b);

// Orthogonal complement under the pairing, as a system of the same degree.
FormSystem apolar_complement(const FormSystem& s);

struct JacobianData {
  std::vector<std::vector<Poly>> matrix;  // generators x vars, degree t-1 entries
  int generic_rank = 0;
  FormSystem jacobian_system;  // span of the rank-sized minors
};

JacobianData jacobian(const FormSystem& s, RankMode mode, const SampleProtocol& proto);

// Row-space containment of equal-degree systems; empty `a` is contained in
// anything.
bool contains(const FormSystem& a, const FormSystem& b);

// Echelon span of all first partials of the generators (degree drops by 1).
FormSystem derivative_span(const FormSystem& s);

}  // namespace osculant
