#pragma once

#include "eqeta/embedding.hpp"
#include "eqeta/laurent_series.hpp"

namespace eqeta {

/// Spin(2n)/Spin(2n-1) = S^{2n-1}: G = D_n, H = B_{n-1}, s = {x_n = 0}.
struct SphereModel {
  int n = 0;
  EmbeddingData emb;
};

inline constexpr int kMaxBuiltinSphere = 4;

/// The validated builtin model, 2 <= n <= 4; δ = E = -e_n.
SphereModel builtin_sphere(int n);

/// The same pair with δ = E = sign·e_n (sign = ±1), any n >= 2.
EmbeddingInput sphere_embedding_input(int n, int sign);
EmbeddingData sphere_embedding(int n, int sign);

/// Closed form of η_X(D) on S^{2n-1} along t X0, degree n_terms.
LaurentSeries sphere_eta_dirac_closed(int n, const QVector& x0, int degree);
/// Closed form of η_X(B) on S^{2n-1}.
LaurentSeries sphere_eta_signature_closed(int n, const QVector& x0, int degree);

}  // namespace eqeta
