#pragma once

#include <string>
#include <utility>
#include <vector>

#include "osculant/forms.hpp"
#include "osculant/jets.hpp"

namespace osculant {

// Dimension of the variety swept by the order-t osculating spaces: generic
// rank of the differential of (u, lambda) -> sum over |I| <= t of
// lambda_I * lift(x^I(u)), minus one.
int tan_variety_dim(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto);

// Dimension of the image of the order-t Gauss map, through the kernel of its
// differential: directions w with sum_j w_j x^{I+e_j} inside the order-t
// span for every |I| = t.
int gauss_image_dim(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto);

// Dimension of the family of hyperplanes containing an order-t osculating
// space: h + N - 1 - d_t, or -1 when d_t = N and the family is empty.
int dual_variety_dim(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto);

struct DefectReport {
  int t = 0;
  int d = 0;        // osculating dimension at order t
  int tan_dim = 0;  // dim of the order-t osculating variety
  int expdim = 0;   // min(k + d_t, N)
  // Defect charged against the expected dimension. When the ambient space
  // truncates the expectation (k + d_t > N) no defect is charged; the raw
  // tan_dim and expdim stay visible here.
  int o = 0;
  bool ambient_clamped = false;
  int h = 0;
  int dual_dim = -1;
  bool dual_degenerate = false;
};

DefectReport defect_report(const Parametrization& p, int t, RankMode mode,
                           const SampleProtocol& proto);

int osculating_defect(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto);

// Projective dimension of the order-t fundamental form at a generic point
// (symbolic mode derives it from the jet rank growth).
int form_dimension(const Parametrization& p, int t, RankMode mode, const SampleProtocol& proto);

struct TheoremVerdict {
  std::string theorem;  // "A", "B", "jacobian-chain", "tangent-lemma"
  int order = 0;
  bool applicable = false;
  bool pass = false;  // meaningful only when applicable
  std::vector<std::pair<std::string, long long>> inputs;
  std::vector<std::string> notes;
};

// Tangent spaces of the order-(t-1) osculating variety stay inside the
// order-t osculating space of the variety, with the dimension consequence
// tan_variety_dim(t-1) <= d_t.
TheoremVerdict tangent_lemma_check(const Parametrization& p, int t, RankMode mode,
                                   const SampleProtocol& proto);

// Small fundamental form: when the order-t form has projective dimension
// k - l - 1 with l > 0 (and the expected dimension is not ambient-truncated
// at order t-1), the order-(t-1) defect is at least l and the order-t Gauss
// image has dimension at most k - l.
TheoremVerdict check_theorem_A(const Parametrization& p, int t, RankMode mode,
                               const SampleProtocol& proto);

// Rank criterion: defect o_t = l > 0 with a large enough order-(t+1) form
// if and only if the Jacobian of the order-(t+1) form has rank k - l. Both
// directions are gated on the form-dimension hypothesis.
TheoremVerdict check_theorem_B(const Parametrization& p, int t, RankMode mode,
                               const SampleProtocol& proto);

// First partials of the order-t fundamental form lie in the order-(t-1)
// fundamental form.
TheoremVerdict check_jacobian_chain(const Parametrization& p, int t, RankMode mode,
                                    const SampleProtocol& proto);

// Same containment at one explicit generic point; used to repeat the check
// across independent samples.
bool jacobian_chain_at(const Parametrization& p, int t, const std::vector<Rational>& u,
                       const SampleProtocol& proto);

}  // namespace osculant
