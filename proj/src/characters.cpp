#include "eqeta/characters.hpp"

#include <algorithm>

#include "eqeta/errors.hpp"
#include "eqeta/standard_series.hpp"

namespace eqeta {

namespace {

void check_weight(const RootSystemData& rs, const QVector& kappa) {
  if (kappa.size() != rs.ambient_dim) fail(ErrorKind::InvalidArgument, "weight has wrong dimension");
  if (!is_dominant(rs, kappa)) {
    fail(ErrorKind::NonDominantWeight, to_string(kappa) + " is not dominant");
  }
}

}  // namespace

LaurentSeries weyl_character_series(const RootSystemData& rs, const WeylGroupData& w,
                                    const QVector& kappa, const QVector& x0, int n,
                                    Execution mode) {
  check_weight(rs, kappa);
  if (x0.size() != rs.ambient_dim) fail(ErrorKind::InvalidArgument, "direction has wrong dimension");
  if (!is_regular(rs, x0)) {
    fail(ErrorKind::NonRegularDirection, "a root vanishes on " + to_string(x0));
  }
  const int p = static_cast<int>(rs.positive_roots.size());
  const QVector shifted = kappa + rs.rho;
  const LaurentSeries numerator = alternating_sum(
      w, [&](const QVector& y) { return exp_linear(imaginary_pairing(shifted, y), n + p); }, x0,
      mode);
  LaurentSeries denominator = LaurentSeries::constant(1);
  for (const auto& beta : rs.positive_roots) {
    denominator *= two_sinh_half(imaginary_pairing(beta, x0), n + 1);
  }
  return numerator / denominator;
}

mpz_class weyl_dimension(const RootSystemData& rs, const QVector& kappa) {
  check_weight(rs, kappa);
  const QVector shifted = kappa + rs.rho;
  Rational d = 1;
  for (const auto& beta : rs.positive_roots) d *= dot(shifted, beta) / dot(rs.rho, beta);
  if (d.get_den() != 1) fail(ErrorKind::InvalidArgument, "weight is not integral");
  return d.get_num();
}

WeightMultiset freudenthal_multiplicities(const RootSystemData& rs, const QVector& kappa,
                                          long dimension_bound) {
  const mpz_class dim = weyl_dimension(rs, kappa);
  if (dim > dimension_bound) {
    fail(ErrorKind::DimensionBoundExceeded,
         "dimension " + dim.get_str() + " exceeds bound " + std::to_string(dimension_bound));
  }
  const QVector shifted = kappa + rs.rho;
  const Rational top = dot(shifted, shifted);

  WeightMultiset mult{{kappa, 1}};
  std::map<QVector, long> level_of{{kappa, 0}};
  std::vector<QVector> current{kappa};
  long level = 0;
  while (!current.empty()) {
    ++level;
    std::vector<QVector> candidates;
    for (const auto& mu : current) {
      for (const auto& a : rs.simple_roots) {
        QVector nu = mu - a;
        if (level_of.count(nu)) continue;
        level_of.emplace(nu, level);
        candidates.push_back(std::move(nu));
      }
    }
    std::vector<QVector> next;
    for (const auto& mu : candidates) {
      const QVector mr = mu + rs.rho;
      const Rational denom = top - dot(mr, mr);
      if (denom == 0) continue;
      Rational sum = 0;
      for (const auto& beta : rs.positive_roots) {
        QVector up = mu;
        for (long k = 1; k <= level; ++k) {
          up = up + beta;
          const auto it = mult.find(up);
          if (it != mult.end()) sum += Rational(it->second) * dot(up, beta);
        }
      }
      const Rational m = 2 * sum / denom;
      if (m == 0) continue;
      if (m.get_den() != 1 || m < 0) {
        fail(ErrorKind::InvalidArgument, "non-integral multiplicity; weight not integral");
      }
      mult.emplace(mu, m.get_num().get_si());
      next.push_back(mu);
    }
    current = std::move(next);
  }
  return mult;
}

LaurentSeries weight_multiset_series(const WeightMultiset& weights, const QVector& x0, int n) {
  LaurentSeries total = LaurentSeries::zero(n);
  for (const auto& [lambda, m] : weights) {
    total += exp_linear(imaginary_pairing(lambda, x0), n) * GaussianRational(m);
  }
  return total;
}

WeightMultiset spinor_weights(const std::vector<QVector>& isotropy_weights, std::size_t dim) {
  WeightMultiset out;
  const std::size_t r = isotropy_weights.size();
  for (unsigned long mask = 0; mask < (1UL << r); ++mask) {
    QVector mu = zeros(dim);
    for (std::size_t j = 0; j < r; ++j) {
      const Rational s = (mask >> j) & 1UL ? Rational(-1, 2) : Rational(1, 2);
      mu = mu + s * isotropy_weights[j];
    }
    ++out[mu];
  }
  return out;
}

std::vector<SpinorComponent> decompose_spinor(const EmbeddingData& emb) {
  if (emb.corank() != 1) fail(ErrorKind::InvalidArgument, "spinor decomposition needs rank G = rank H + 1");
  if (!emb.isotropy_error.empty()) fail(ErrorKind::DecompositionFailure, emb.isotropy_error);
  WeightMultiset remaining = spinor_weights(emb.isotropy_weights, emb.h.ambient_dim);
  const QVector& rho_h = emb.h.rho;
  std::vector<SpinorComponent> out;
  while (!remaining.empty()) {
    auto best = remaining.begin();
    for (auto it = std::next(remaining.begin()); it != remaining.end(); ++it) {
      const Rational a = dot(it->first, rho_h);
      const Rational b = dot(best->first, rho_h);
      if (a > b || (a == b && best->first < it->first)) best = it;
    }
    const QVector kappa = best->first;
    if (!is_dominant(emb.h, kappa)) {
      fail(ErrorKind::DecompositionFailure, "highest remaining weight " + to_string(kappa) + " is not dominant");
    }
    for (const auto& [mu, m] : freudenthal_multiplicities(emb.h, kappa)) {
      const auto it = remaining.find(mu);
      if (it == remaining.end() || it->second < m) {
        fail(ErrorKind::DecompositionFailure, "weight " + to_string(mu) + " missing from the spin module");
      }
      it->second -= m;
      if (it->second == 0) remaining.erase(it);
    }
    out.push_back({kappa, compute_alpha(emb, kappa)});
  }
  return out;
}

}  // namespace eqeta
