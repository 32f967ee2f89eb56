#include "eqeta/eta_engine.hpp"

#include <cstdlib>

#include "eqeta/characters.hpp"
#include "eqeta/errors.hpp"
#include "eqeta/standard_series.hpp"

namespace eqeta {

namespace {

int env_margin() {
  const char* v = std::getenv("EQETA_WORK_MARGIN");
  if (!v) return 0;
  char* end = nullptr;
  const long m = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || m < 0 || m > 1000) return 0;
  return static_cast<int>(m);
}

// Runs fn at increasing working degrees until the result is reliable to n.
template <class Fn>
LaurentSeries reliable_to(const EmbeddingData& emb, int n, Fn&& fn) {
  int m = working_degree(emb, n);
  for (int attempt = 0; attempt < 4; ++attempt) {
    LaurentSeries s = fn(m);
    if (s.reliable_degree() >= n) return s.truncated(n);
    m += m - n + 2;
  }
  fail(ErrorKind::UnreliableCoefficient, "could not reach degree " + std::to_string(n));
}

// Wraps a Weyl-sum term so a vanishing linear form names the element.
template <class Fn>
LaurentSeries regular_term(std::size_t element, Fn&& fn) {
  try {
    return fn();
  } catch (const EtaError& e) {
    if (e.kind() != ErrorKind::ZeroLinearForm) throw;
    fail(ErrorKind::NonRegularDirection,
         std::string(e.what()) + " (Weyl group element " + std::to_string(element) + ")");
  }
}

void check_direction(const EmbeddingData& emb, const QVector& x0) {
  if (x0.size() != emb.g.ambient_dim) {
    fail(ErrorKind::InvalidArgument, "direction has " + std::to_string(x0.size()) +
                                         " coordinates, expected " +
                                         std::to_string(emb.g.ambient_dim));
  }
  if (!is_regular(emb.g, x0)) {
    fail(ErrorKind::NonRegularDirection, "a root of G vanishes on " + to_string(x0));
  }
}

// ∏_{β ∈ Δ_G⁺} 1/β(t y), exact.
LaurentSeries inverse_root_product(const EmbeddingData& emb, const QVector& y) {
  LaurentSeries p = LaurentSeries::constant(1);
  for (const auto& beta : emb.g.positive_roots) p *= inv_linear(imaginary_pairing(beta, y));
  return p;
}

// A_G(e^{(α-δ/2)} / sinh(δ/2)) / A_G(e^{ρ_G}) at working degree m.
LaurentSeries eta_tilde_raw(const EmbeddingData& emb, const QVector& alpha, const QVector& x0,
                            int m, Execution mode) {
  const QVector& delta = *emb.delta;
  const QVector shift = alpha - Rational(1, 2) * delta;
  const LaurentSeries numerator = indexed_sum(
      emb.wg.size(),
      [&](std::size_t i) {
        return regular_term(i, [&] {
          const QVector y = emb.wg.element(i) * x0;
          LaurentSeries term = exp_linear(imaginary_pairing(shift, y), m) *
                               inv_two_sinh_half(imaginary_pairing(delta, y), m);
          term *= GaussianRational(2 * emb.wg.sign(i));
          return term;
        });
      },
      mode);
  LaurentSeries denominator = LaurentSeries::constant(1);
  for (const auto& beta : emb.g.positive_roots) {
    denominator *= two_sinh_half(imaginary_pairing(beta, x0), m);
  }
  return numerator / denominator;
}

// Shared part of the collapsed integrands: checks and the exact factor
// ∏_{Δ_G⁺} β(Y|_s) / δ(Y). Returns false when Y|_s is singular for H.
bool collapsed_prefactor(const EmbeddingData& emb, const QVector& y, LaurentSeries& out) {
  const QVector ys = s_coordinates(emb, y);
  for (const auto& mu : emb.isotropy_weights) {
    if (dot(mu, ys) == 0) {
      fail(ErrorKind::NonRegularDirection,
           "isotropy weight " + to_string(mu) + " vanishes on the projection of " + to_string(y));
    }
  }
  if (!is_regular(emb.h, ys)) return false;
  const QVector py = project_to_s(emb, y);
  out = inv_linear(imaginary_pairing(*emb.delta, y));
  for (const auto& beta : emb.g.positive_roots) {
    out *= LaurentSeries::monomial(imaginary_pairing(beta, py), 1);
  }
  return true;
}

LaurentSeries signature_integrand(const EmbeddingData& emb, const QVector& y, int m) {
  LaurentSeries f;
  if (!collapsed_prefactor(emb, y, f)) return LaurentSeries();
  const QVector ys = s_coordinates(emb, y);
  for (const auto& mu : emb.isotropy_weights) f *= coth_half(imaginary_pairing(mu, ys), m);
  return f;
}

// Σ_r sign(r) F(r(-X0)) / ∏ β(-t X0) over coset representatives r.
template <class Integrand>
LaurentSeries collapsed_sum(const EmbeddingData& emb, const QVector& x0, Execution mode,
                            Integrand&& integrand) {
  const QVector minus_x = -x0;
  const auto& reps = emb.coset_representatives;
  LaurentSeries sum = indexed_sum(
      reps.size(),
      [&](std::size_t j) {
        const std::size_t i = reps[j];
        return regular_term(i, [&] {
          LaurentSeries term = integrand(emb.wg.element(i) * minus_x);
          if (emb.wg.sign(i) < 0) term = -term;
          return term;
        });
      },
      mode);
  return sum * inverse_root_product(emb, minus_x);
}

LaurentSeries bott_defect_v1_raw(const EmbeddingData& emb, const QVector& kappa,
                                 const QVector& x0, int m, Execution mode) {
  const QVector weight = kappa + emb.h.rho;
  const QVector& delta = *emb.delta;
  const LaurentSeries sum = indexed_sum(
      emb.wg.size(),
      [&](std::size_t i) {
        return regular_term(i, [&] {
          const QVector y = -(emb.wg.element(i) * x0);
          const QVector ys = s_coordinates(emb, y);
          const QVector py = project_to_s(emb, y);
          LaurentSeries term = exp_linear(imaginary_pairing(weight, ys), m) *
                               inv_linear(imaginary_pairing(delta, y));
          for (const auto& beta : emb.g.positive_roots) {
            term *= ahat_series(imaginary_pairing(beta, py), m);
          }
          if (emb.wg.sign(i) < 0) term = -term;
          return term;
        });
      },
      mode);
  LaurentSeries factor = inverse_root_product(emb, x0);
  if (emb.g.positive_roots.size() % 2 == 1) factor = -factor;
  return sum * factor;
}

LaurentSeries bott_defect_v2_raw(const EmbeddingData& emb, const QVector& kappa,
                                 const QVector& x0, int m, Execution mode) {
  return collapsed_sum(emb, x0, mode,
                       [&](const QVector& y) { return collapsed_defect_integrand(emb, kappa, y, m); });
}

void require_corank_one_data(const EmbeddingData& emb) {
  if (!emb.delta || !emb.normal) fail(ErrorKind::InvalidArgument, "embedding has no delta");
  if (!emb.isotropy_error.empty()) fail(ErrorKind::ValidationError, emb.isotropy_error);
}

LaurentSeries external_series(const EmbeddingData& emb, const ExternalTerms& ext,
                              const QVector& x0, int n, Execution mode) {
  return ext.chern_simons.truncated(n) +
         spectral_flow_series(emb.g, emb.wg, ext.spectral_flow, x0, n, mode);
}

void finish(EtaResult& r, int n) {
  r.series = r.series.truncated(n);
  if (!r.series.is_zero() && r.series.valuation() < 0) {
    fail(ErrorKind::SingularityNotCancelled,
         "assembled series has a pole of order " + std::to_string(-r.series.valuation()));
  }
  r.diagnostics.result_valuation = r.series.valuation();
  r.classical_eta = r.series.coefficient(0);
}

}  // namespace

ExternalTerms ExternalTerms::constant(const GaussianRational& c) {
  ExternalTerms e;
  e.chern_simons = LaurentSeries::constant(c);
  return e;
}

int working_degree(const EmbeddingData& emb, int n) {
  return n + static_cast<int>(emb.g.positive_roots.size()) + emb.g.rank() + 2 + env_margin();
}

LaurentSeries eta_tilde_series(const EmbeddingData& emb, const QVector& kappa, const QVector& x0,
                               int n, const EngineOptions& opt) {
  check_direction(emb, x0);
  if (emb.corank() != 1) return LaurentSeries::zero(n);
  require_corank_one_data(emb);
  const QVector alpha = compute_alpha(emb, kappa);
  return reliable_to(emb, n, [&](int m) { return eta_tilde_raw(emb, alpha, x0, m, opt.mode); });
}

LaurentSeries s_gh(const EmbeddingData& emb, const DirectionEvaluator& f, const QVector& x0,
                   Execution mode) {
  LaurentSeries sum = alternating_sum(emb.wg, f, x0, mode);
  return sum * GaussianRational(Rational(1, static_cast<long>(emb.wh.size())));
}

LaurentSeries s_gh_cosets(const EmbeddingData& emb, const DirectionEvaluator& f,
                          const QVector& x0, bool use_alternate_lifts, Execution mode) {
  const std::size_t nh = emb.wh.size();
  const auto& reps = emb.coset_representatives;
  LaurentSeries sum = indexed_sum(
      reps.size() * nh,
      [&](std::size_t idx) {
        const std::size_t r = reps[idx / nh];
        const std::size_t j = idx % nh;
        auto lift = emb.wh_in_wg[j];
        if (use_alternate_lifts && emb.alternate_lift[j]) lift = emb.alternate_lift[j];
        if (!lift) fail(ErrorKind::ValidationError, "W_H element without a lift");
        const QMatrix w = emb.wg.element(*lift) * emb.wg.element(r);
        LaurentSeries term = f(w * x0);
        if (emb.wg.sign(*lift) * emb.wg.sign(r) < 0) term = -term;
        return term;
      },
      mode);
  return sum * GaussianRational(Rational(1, static_cast<long>(nh)));
}

LaurentSeries collapsed_defect_integrand(const EmbeddingData& emb, const QVector& kappa,
                                         const QVector& y, int n) {
  LaurentSeries f;
  if (!collapsed_prefactor(emb, y, f)) return LaurentSeries();
  const QVector ys = s_coordinates(emb, y);
  f *= weyl_character_series(emb.h, emb.wh, kappa, ys, n, Execution::Serial);
  for (const auto& mu : emb.isotropy_weights) f *= inv_two_sinh_half(imaginary_pairing(mu, ys), n);
  return f;
}

LaurentSeries bott_defect_v1(const EmbeddingData& emb, const QVector& kappa, const QVector& x0,
                             int n, const EngineOptions& opt) {
  check_direction(emb, x0);
  if (emb.corank() != 1) return LaurentSeries::zero(n);
  require_corank_one_data(emb);
  if (kappa.size() != emb.h.ambient_dim) fail(ErrorKind::InvalidArgument, "kappa has wrong dimension");
  return reliable_to(emb, n, [&](int m) { return bott_defect_v1_raw(emb, kappa, x0, m, opt.mode); });
}

LaurentSeries bott_defect_v2(const EmbeddingData& emb, const QVector& kappa, const QVector& x0,
                             int n, const EngineOptions& opt) {
  check_direction(emb, x0);
  if (emb.corank() != 1) return LaurentSeries::zero(n);
  require_corank_one_data(emb);
  if (!is_dominant(emb.h, kappa)) fail(ErrorKind::NonDominantWeight, to_string(kappa) + " is not dominant");
  return reliable_to(emb, n, [&](int m) { return bott_defect_v2_raw(emb, kappa, x0, m, opt.mode); });
}

LaurentSeries spectral_flow_series(const RootSystemData& g, const WeylGroupData& wg,
                                   const std::vector<FlowTerm>& terms, const QVector& x0, int n,
                                   Execution mode) {
  LaurentSeries total;
  const QVector minus_x = -x0;
  for (const auto& t : terms) {
    total += weyl_character_series(g, wg, t.gamma, minus_x, n, mode) * GaussianRational(t.coeff);
  }
  return total;
}

EtaResult eta_dirac_series(const EmbeddingData& emb, const QVector& kappa,
                           const ExternalTerms& ext, const QVector& x0, int n,
                           const EngineOptions& opt) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "degree must be nonnegative");
  require_valid(emb);
  check_direction(emb, x0);
  EtaResult r;
  r.diagnostics.working_degree = working_degree(emb, n);
  r.series = external_series(emb, ext, x0, n, opt.mode);
  if (emb.corank() != 1) {
    r.diagnostics.defect_formula = "none";
    finish(r, n);
    return r;
  }
  const LaurentSeries tilde = eta_tilde_series(emb, kappa, -x0, n, opt);
  LaurentSeries defect;
  if (opt.defect == DefectFormula::Localized) {
    defect = bott_defect_v1(emb, kappa, x0, n, opt);
    r.diagnostics.defect_formula = "localized";
  } else {
    try {
      defect = bott_defect_v2(emb, kappa, x0, n, opt);
      r.diagnostics.defect_formula = "collapsed";
    } catch (const EtaError& e) {
      if (opt.defect == DefectFormula::Collapsed || e.kind() != ErrorKind::NonRegularDirection) throw;
      r.diagnostics.fallback_reason = e.what();
      defect = bott_defect_v1(emb, kappa, x0, n, opt);
      r.diagnostics.defect_formula = "localized";
    }
  }
  r.diagnostics.eta_tilde_valuation = tilde.valuation();
  r.diagnostics.defect_valuation = defect.valuation();
  r.diagnostics.components = 1;
  r.series += -tilde + GaussianRational(2) * defect;
  finish(r, n);
  return r;
}

EtaResult eta_signature_series(const EmbeddingData& emb, const ExternalTerms& ext,
                               const QVector& x0, int n, const EngineOptions& opt) {
  if (n < 0) fail(ErrorKind::InvalidArgument, "degree must be nonnegative");
  require_valid(emb);
  check_direction(emb, x0);
  EtaResult r;
  r.diagnostics.working_degree = working_degree(emb, n);
  r.series = external_series(emb, ext, x0, n, opt.mode);
  if (emb.corank() != 1) {
    r.diagnostics.defect_formula = "none";
    finish(r, n);
    return r;
  }
  require_corank_one_data(emb);
  const auto components = decompose_spinor(emb);
  const QVector minus_x = -x0;
  LaurentSeries tilde;
  for (const auto& c : components) {
    tilde += reliable_to(emb, n, [&](int m) { return eta_tilde_raw(emb, c.alpha, minus_x, m, opt.mode); });
  }
  LaurentSeries defect;
  auto localized = [&] {
    LaurentSeries d;
    for (const auto& c : components) d += bott_defect_v1(emb, c.kappa, x0, n, opt);
    r.diagnostics.defect_formula = "localized";
    return d;
  };
  if (opt.defect == DefectFormula::Localized) {
    defect = localized();
  } else {
    try {
      defect = reliable_to(emb, n, [&](int m) {
        return collapsed_sum(emb, x0, opt.mode,
                             [&](const QVector& y) { return signature_integrand(emb, y, m); });
      });
      r.diagnostics.defect_formula = "collapsed";
    } catch (const EtaError& e) {
      if (opt.defect == DefectFormula::Collapsed || e.kind() != ErrorKind::NonRegularDirection) throw;
      r.diagnostics.fallback_reason = e.what();
      defect = localized();
    }
  }
  r.diagnostics.eta_tilde_valuation = tilde.valuation();
  r.diagnostics.defect_valuation = defect.valuation();
  r.diagnostics.components = components.size();
  r.series += -tilde + GaussianRational(2) * defect;
  finish(r, n);
  return r;
}

}  // namespace eqeta
