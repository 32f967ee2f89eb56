#pragma once

#include <map>
#include <vector>

#include "eqeta/embedding.hpp"
#include "eqeta/laurent_series.hpp"
#include "eqeta/root_system.hpp"
#include "eqeta/weyl_group.hpp"

namespace eqeta {

/// Weight -> multiplicity, ordered lexicographically by coordinates.
using WeightMultiset = std::map<QVector, long>;

inline constexpr long kDefaultDimensionBound = 10000;

/// χ_κ(e^{t X0}) = A(e^{κ+ρ}) / ∏ 2 sinh(β/2), reliable to degree n.
LaurentSeries weyl_character_series(const RootSystemData& rs, const WeylGroupData& w,
                                    const QVector& kappa, const QVector& x0, int n,
                                    Execution mode = Execution::Parallel);

/// ∏ <κ+ρ, β> / <ρ, β> over positive roots.
mpz_class weyl_dimension(const RootSystemData& rs, const QVector& kappa);

/// Weight multiplicities of the irreducible representation with highest weight κ.
WeightMultiset freudenthal_multiplicities(const RootSystemData& rs, const QVector& kappa,
                                          long dimension_bound = kDefaultDimensionBound);

/// Σ m_λ e^{λ(t X0)} over a weight multiset.
LaurentSeries weight_multiset_series(const WeightMultiset& weights, const QVector& x0, int n);

struct SpinorComponent {
  QVector kappa;  // highest weight on s
  QVector alpha;  // lift to t
};

/// The spin module of the isotropy representation split into H-irreducibles.
std::vector<SpinorComponent> decompose_spinor(const EmbeddingData& emb);

/// The 2^r weights (±β₁ ± … ± β_r)/2 of the spin module.
WeightMultiset spinor_weights(const std::vector<QVector>& isotropy_weights, std::size_t dim);

}  // namespace eqeta
