#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eqeta/root_system.hpp"
#include "eqeta/weyl_group.hpp"

namespace eqeta {

/// User-facing description of a pair H ⊂ G with tori S ⊂ T.
struct EmbeddingInput {
  std::vector<RootComponent> g;
  std::vector<RootComponent> h;
  QMatrix iota;                  // dim t x dim s, columns span s inside t
  std::optional<QMatrix> gram;   // defaults to the identity
  std::optional<QVector> delta;  // covector on t; derived from the lattice if absent
  std::optional<QVector> normal; // direction E; derived from gram if absent

  bool operator==(const EmbeddingInput&) const = default;
};

struct EmbeddingData {
  RootSystemData g;
  RootSystemData h;
  WeylGroupData wg;
  WeylGroupData wh;
  QMatrix iota;
  QMatrix gram;
  // X -> coordinates of X|_s in s, and X -> X|_s in t.
  QMatrix restrict_to_s;
  QMatrix projection;
  // Present only when rank G = rank H + 1.
  std::optional<QVector> delta;
  std::optional<QVector> normal;

  // Restrictions of Δ_G⁺ not in Δ_H⁺, as covectors on s; empty with
  // isotropy_error set if the restriction does not split as required.
  std::vector<QVector> isotropy_weights;
  std::string isotropy_error;

  // Lift in W_G of each W_H element (by index), and the other lift when two exist.
  std::vector<std::optional<std::size_t>> wh_in_wg;
  std::vector<std::optional<std::size_t>> alternate_lift;
  // Representatives of the right cosets K w, K the image of W_H.
  std::vector<std::size_t> coset_representatives;

  int corank() const { return g.rank() - h.rank(); }
};

/// Builds the derived data. Structural problems (dimension mismatch, rank of
/// iota, unsupported types) throw; invariant violations are left for
/// validate_embedding to report.
EmbeddingData make_embedding(const EmbeddingInput& input);

/// Orthogonal projection X0 -> X0|_s (as a vector in t).
QVector project_to_s(const EmbeddingData& emb, const QVector& x0);
/// Coordinates of X0|_s in s.
QVector s_coordinates(const EmbeddingData& emb, const QVector& x0);

/// W_π⁺ as covectors on s; throws IncompatiblePositivity.
std::vector<QVector> compute_isotropy_weights(const RootSystemData& g, const RootSystemData& h,
                                              const QMatrix& iota);

/// The lattice weight α of G with α|_s = κ + ρ_H and α(E) in [0, δ(E)).
QVector compute_alpha(const EmbeddingData& emb, const QVector& kappa);

/// Primitive lattice covector annihilating s, signed by E (or by its first
/// nonzero coordinate when E is absent).
QVector derive_delta(const RootSystemData& g, const QMatrix& iota,
                     const std::optional<QVector>& normal);

struct ValidationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool ok() const;
  std::string summary() const;  // failed checks, one per line
};

ValidationReport validate_embedding(const EmbeddingData& emb);

/// Throws ValidationError with the failed checks.
void require_valid(const EmbeddingData& emb);

}  // namespace eqeta
