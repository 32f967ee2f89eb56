#pragma once

#include <string>
#include <vector>

#include "eqeta/embedding.hpp"
#include "eqeta/laurent_series.hpp"
#include "eqeta/weyl_group.hpp"

namespace eqeta {

struct FlowTerm {
  QVector gamma;  // dominant weight of G
  long coeff = 0;

  bool operator==(const FlowTerm&) const = default;
};

/// Chern–Simons and spectral-flow contributions, supplied from outside.
struct ExternalTerms {
  LaurentSeries chern_simons;
  std::vector<FlowTerm> spectral_flow;

  /// Chern–Simons term equal to a constant.
  static ExternalTerms constant(const GaussianRational& c);

  bool operator==(const ExternalTerms&) const = default;
};

enum class DefectFormula { Auto, Localized, Collapsed };

struct EngineOptions {
  Execution mode = Execution::Parallel;
  // Auto uses the collapsed (W_H-quotient) form and falls back to the
  // localized form where an isotropy weight vanishes along the direction.
  DefectFormula defect = DefectFormula::Auto;
};

struct EtaDiagnostics {
  int working_degree = 0;
  std::string defect_formula;
  std::string fallback_reason;
  int eta_tilde_valuation = 0;
  int defect_valuation = 0;
  int result_valuation = 0;
  std::size_t components = 0;
};

struct EtaResult {
  LaurentSeries series;
  GaussianRational classical_eta;
  EtaDiagnostics diagnostics;
};

/// Working truncation for a requested degree n.
int working_degree(const EmbeddingData& emb, int n);

/// (η+h)(D̃^κ) along t X0; zero unless rank G = rank H + 1.
LaurentSeries eta_tilde_series(const EmbeddingData& emb, const QVector& kappa, const QVector& x0,
                               int n, const EngineOptions& opt = {});

/// (1/#W_H) Σ_{w∈W_G} sign(w) f(w X0).
LaurentSeries s_gh(const EmbeddingData& emb, const DirectionEvaluator& f, const QVector& x0,
                   Execution mode = Execution::Parallel);

/// The same sum grouped by cosets: Σ_r (1/#W_H) Σ_{w'} sign(L(w') r) f(L(w') r X0),
/// with L the chosen lift or, where one exists, the other lift.
LaurentSeries s_gh_cosets(const EmbeddingData& emb, const DirectionEvaluator& f,
                          const QVector& x0, bool use_alternate_lifts,
                          Execution mode = Execution::Parallel);

/// Bott localisation defect, localized form over all of W_G.
LaurentSeries bott_defect_v1(const EmbeddingData& emb, const QVector& kappa, const QVector& x0,
                             int n, const EngineOptions& opt = {});
/// Bott localisation defect via the H-character, summed over W_G / W_H.
LaurentSeries bott_defect_v2(const EmbeddingData& emb, const QVector& kappa, const QVector& x0,
                             int n, const EngineOptions& opt = {});

/// Integrand of the collapsed defect at the direction y (series in t along t y),
/// without the Weyl sum. Exposed for lift-independence checks.
LaurentSeries collapsed_defect_integrand(const EmbeddingData& emb, const QVector& kappa,
                                         const QVector& y, int n);

/// Σ coeff_γ χ_G^γ(e^{-t X0}).
LaurentSeries spectral_flow_series(const RootSystemData& g, const WeylGroupData& wg,
                                   const std::vector<FlowTerm>& terms, const QVector& x0, int n,
                                   Execution mode = Execution::Parallel);

/// η_X(D^κ) along t X0 to degree n.
EtaResult eta_dirac_series(const EmbeddingData& emb, const QVector& kappa,
                           const ExternalTerms& ext, const QVector& x0, int n,
                           const EngineOptions& opt = {});

/// η_X(B) of the odd signature operator along t X0 to degree n.
EtaResult eta_signature_series(const EmbeddingData& emb, const ExternalTerms& ext,
                               const QVector& x0, int n, const EngineOptions& opt = {});

}  // namespace eqeta
