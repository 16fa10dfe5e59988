#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "osculant/matrix.hpp"
#include "osculant/parametrization.hpp"
#include "osculant/sampling.hpp"

namespace osculant {

enum class RankMode { sampled, symbolic };

// Partial derivatives of the coordinate functions for |I| <= t, in the
// canonical multi-index listing order. Entry [i][j] is the j-th coordinate
// differentiated by the i-th index.
std::vector<std::vector<RatFunc>> jet_derivatives(const Parametrization& p, int t);

// Jet matrix at a point, in the homogeneous-lift convention: the |I| = 0 row
// is (1, x(u)); every row with |I| >= 1 is (0, x^I(u)). Rows follow
// mi_enumerate(k, t, up_to_order); there are binom(k+t, t) of them.
struct JetMatrix {
  int order = 0;
  std::vector<Rational> point;
  MatrixQ rows;
};

JetMatrix jet_matrix(const Parametrization& p, const std::vector<Rational>& u, int t);

// Same rows with polynomial entries, each row cleared of denominators, for
// ranks over the function field of the parameters.
MatrixP jet_matrix_symbolic(const Parametrization& p, int t);

// Generic rank of the order-t jet matrix. Sampled mode takes the maximum
// over the protocol's seeded points; symbolic mode eliminates over the
// function field and is the in-repo cross-check for every sampled rank.
int jet_rank(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto);

// Dimension d_t of the t-th osculating space at a general point.
int osc_dim(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto);

// A seeded sample point where the order-t jet matrix attains its generic
// sampled rank, together with that rank.
struct GenericPoint {
  std::vector<Rational> u;
  int jet_rank = 0;
};
GenericPoint find_generic_point(const Parametrization& p, int t, const SampleProtocol& proto,
                                std::string_view tag);

// Number of independent order-s relations among the jet rows that are new at
// order s (each has a nonzero top-order coefficient).
int laplace_count(const Parametrization& p, int s, RankMode mode, const SampleProtocol& proto);

enum class LaplaceMode { pointwise, constant_coefficient };

// Basis of relation coefficient vectors E indexed by mi_enumerate(k, s,
// up_to_order). Pointwise: J_s(u)^T E = 0 at the sample point. Constant
// mode: the relation holds identically in the parameters.
struct LaplaceSystem {
  int order = 0;
  int vars = 0;
  LaplaceMode mode = LaplaceMode::pointwise;
  MatrixQ basis;  // rows are the coefficient vectors, canonical echelon form
  int count() const { return basis.rows(); }
};

LaplaceSystem laplace_basis(const Parametrization& p, int s, const std::vector<Rational>& u,
                            const SampleProtocol& proto);
LaplaceSystem global_laplace_basis(const Parametrization& p, int s);

struct ExpectedDims {
  int e = 0;             // min(N, d_{t-1} + binom(k-1+t, t))
  long long k_t = 0;     // binom(k+t, t) - 1
  long long trivial = 0; // max(0, k_t - N)
};
ExpectedDims expected_dims(int k, int N, int d_prev, int t);

struct OrderRow {
  int t = 0;
  int d = 0;
  int e = 0;
  long long k_t = 0;
  long long trivial = 0;
  int delta = 0;                    // pointwise count
  std::optional<int> delta_global;  // constant-coefficient count, polynomial coords only
};

struct OsculatingProfile {
  int k = 0;
  int N = 0;
  bool immersion = true;  // d_1 == k at a general point
  std::vector<OrderRow> orders;
  int d(int t) const;  // d_0 = 0
};

OsculatingProfile build_profile(const Parametrization& p, int t_max, RankMode mode,
                                const SampleProtocol& proto, bool with_global);

}  // namespace osculant
