#include "doctest.h"

#include "generators.hpp"

#include "eqeta/characters.hpp"
#include "eqeta/errors.hpp"
#include "eqeta/eta_engine.hpp"
#include "eqeta/sphere_models.hpp"
#include "eqeta/standard_series.hpp"

using namespace eqeta;
using eqeta::testing::Gen;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
GaussianRational re(long n, long d = 1) { return GaussianRational(q(n, d)); }

QVector random_regular(Gen& g, const EmbeddingData& emb) {
  for (;;) {
    QVector x = g.vector(static_cast<std::size_t>(emb.g.ambient_dim), 7, 5);
    bool ok = is_regular(emb.g, x) && dot(*emb.delta, x) != 0;
    for (const auto& w : emb.isotropy_weights) ok = ok && dot(w, s_coordinates(emb, x)) != 0;
    if (ok) return x;
  }
}

// B2 ⊃ B1 x B1 on the same torus: equal rank, so the η terms of the engine vanish.
EmbeddingInput equal_rank_input() {
  EmbeddingInput in;
  in.g = {{RootType::B, 2}};
  in.h = {{RootType::B, 1}, {RootType::B, 1}};
  in.iota = QMatrix::identity(2);
  return in;
}

}  // namespace

TEST_SUITE("eta_engine") {

TEST_CASE("eta_tilde for S^3 matches an independent evaluation") {
  // Weyl-sum quotient along (1,2) expanded symbolically in a separate computer algebra system
  const auto emb = builtin_sphere(2).emb;
  const auto s = eta_tilde_series(emb, zeros(1), make_qvector({1, 2}), 6);
  CHECK(s.valuation() == -2);
  CHECK(s.coefficient(-2) == re(1));
  CHECK(s.coefficient(-1) == re(0));
  CHECK(s.coefficient(0) == re(5, 24));
  CHECK(s.coefficient(2) == re(53, 1920));
  CHECK(s.coefficient(4) == re(599, 193536));
  CHECK(s.coefficient(6) == re(7193, 22118400));
}

TEST_CASE("the two defect formulas agree") {
  Gen g(8);
  for (int n : {2, 3}) {
    const auto emb = builtin_sphere(n).emb;
    for (int trial = 0; trial < 5; ++trial) {
      const QVector x0 = random_regular(g, emb);
      CAPTURE(to_string(x0));
      QVector kappa = zeros(static_cast<std::size_t>(n - 1));
      if (trial % 2 == 1) kappa[0] = 1;
      const auto v1 = bott_defect_v1(emb, kappa, x0, 8);
      const auto v2 = bott_defect_v2(emb, kappa, x0, 8);
      CHECK(v1 == v2);
      CHECK(v1.reliable_degree() == 8);
    }
  }
}

TEST_CASE("twisted defects agree") {
  const auto emb = builtin_sphere(3).emb;
  const QVector x0 = make_qvector({1, 3, 7});
  for (const auto& kappa : {make_qvector({1, 0}), make_qvector({1, 1}), make_qvector({2, 1})}) {
    CHECK(bott_defect_v1(emb, kappa, x0, 6) == bott_defect_v2(emb, kappa, x0, 6));
  }
}

TEST_CASE("assembled series has no pole") {
  Gen g(12);
  for (int n : {2, 3}) {
    const auto emb = builtin_sphere(n).emb;
    for (int trial = 0; trial < 3; ++trial) {
      const QVector x0 = random_regular(g, emb);
      const auto r = eta_dirac_series(emb, zeros(static_cast<std::size_t>(n - 1)), {}, x0, 6);
      CHECK(r.series.valuation() >= 0);
      CHECK(r.diagnostics.eta_tilde_valuation < 0);
      CHECK(r.series.reliable_degree() == 6);
      CHECK(r.classical_eta == r.series.coefficient(0));
    }
  }
}

TEST_CASE("classical eta does not depend on the direction") {
  for (int n : {2, 3}) {
    const auto emb = builtin_sphere(n).emb;
    const QVector kappa = zeros(static_cast<std::size_t>(n - 1));
    const QVector base = n == 2 ? make_qvector({1, 2}) : make_qvector({1, 2, 4});
    const auto eta0 = eta_dirac_series(emb, kappa, {}, base, 2).classical_eta;
    for (long k = 1; k <= 3; ++k) {
      QVector x = base;
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += make_rational(k * static_cast<long>(i * i + 1), 5);
      CHECK(eta_dirac_series(emb, kappa, {}, x, 2).classical_eta == eta0);
    }
  }
}

TEST_CASE("Weyl invariance of the assembled series") {
  const auto emb = builtin_sphere(2).emb;
  const QVector x0 = make_qvector({1, 3});
  const auto base = eta_dirac_series(emb, zeros(1), {}, x0, 6).series;
  for (const auto& w : emb.wg.elements()) {
    CHECK(eta_dirac_series(emb, zeros(1), {}, w * x0, 6).series == base);
  }
}

TEST_CASE("s_gh is independent of the chosen lifts") {
  const auto emb = builtin_sphere(3).emb;
  const QVector x0 = make_qvector({1, 2, 4});
  const DirectionEvaluator f = [](const QVector& y) {
    return exp_linear(imaginary_pairing(make_qvector({3, 1, 0}), y), 6) *
           LaurentSeries::constant(re(1) + GaussianRational(dot(make_qvector({1, 0, 0}), y)));
  };
  const auto direct = s_gh(emb, f, x0);
  CHECK(s_gh_cosets(emb, f, x0, false) == direct);
  CHECK(s_gh_cosets(emb, f, x0, true) == direct);
  const DirectionEvaluator one = [](const QVector&) { return LaurentSeries::constant(1); };
  CHECK(s_gh(emb, one, x0).is_zero());
}

TEST_CASE("collapsed integrand refuses vanishing isotropy weights") {
  const auto emb = builtin_sphere(2).emb;
  try {
    collapsed_defect_integrand(emb, zeros(1), make_qvector({0, 1}), 4);
    FAIL("expected NonRegularDirection");
  } catch (const EtaError& e) {
    CHECK(e.kind() == ErrorKind::NonRegularDirection);
  }
}

TEST_CASE("spectral flow terms") {
  const auto emb = builtin_sphere(2).emb;
  const QVector x0 = make_qvector({1, 2});
  const auto constant = spectral_flow_series(emb.g, emb.wg, {{zeros(2), 3}}, x0, 4);
  CHECK(constant == LaurentSeries::constant(3, 4));
  const auto vec = spectral_flow_series(emb.g, emb.wg, {{make_qvector({1, 0}), 1}}, x0, 4);
  CHECK(vec.coefficient(0) == re(4));
  // vector representation: 2 cos t + 2 cos 2t
  CHECK(vec.coefficient(2) == re(-5));
  CHECK(spectral_flow_series(emb.g, emb.wg, {}, x0, 4).is_zero());
}

TEST_CASE("external terms enter additively") {
  const auto emb = builtin_sphere(2).emb;
  const QVector x0 = make_qvector({1, 2});
  const auto plain = eta_dirac_series(emb, zeros(1), {}, x0, 6).series;
  ExternalTerms ext = ExternalTerms::constant(re(2, 3));
  ext.spectral_flow = {{zeros(2), -1}};
  const auto shifted = eta_dirac_series(emb, zeros(1), ext, x0, 6).series;
  CHECK(shifted == plain + LaurentSeries::constant(re(-1, 3), 6));
}

TEST_CASE("rank mismatch returns exactly the external terms") {
  const auto emb = make_embedding(equal_rank_input());
  REQUIRE(validate_embedding(emb).ok());
  CHECK(eta_tilde_series(emb, zeros(2), make_qvector({1, 3}), 6).is_zero());
  ExternalTerms ext;
  ext.chern_simons = LaurentSeries::from_coefficients(0, {re(1, 5), re(0), re(2)}, 6);
  ext.spectral_flow = {{make_qvector({1, 0}), 2}};
  const QVector x0 = make_qvector({1, 3});
  const auto r = eta_dirac_series(emb, zeros(2), ext, x0, 6);
  const auto expected = ext.chern_simons + spectral_flow_series(emb.g, emb.wg, ext.spectral_flow, x0, 6);
  CHECK(r.series == expected.truncated(6));
  const auto none = eta_dirac_series(emb, zeros(2), {}, x0, 6);
  CHECK(none.series.is_zero());
  CHECK(eta_signature_series(emb, ext, x0, 6).series == expected.truncated(6));
}

TEST_CASE("non-regular directions") {
  const auto emb = builtin_sphere(2).emb;
  CHECK_THROWS_AS(eta_dirac_series(emb, zeros(1), {}, make_qvector({1, 1}), 4), EtaError);
  EngineOptions opt;
  opt.defect = DefectFormula::Collapsed;
  CHECK_THROWS_AS(bott_defect_v2(emb, zeros(1), make_qvector({0, 1}), 4, opt), EtaError);
  // on spheres a vanishing isotropy weight also makes δ vanish on a Weyl image
  try {
    bott_defect_v1(emb, zeros(1), make_qvector({0, 1}), 4);
    FAIL("expected NonRegularDirection");
  } catch (const EtaError& e) {
    CHECK(e.kind() == ErrorKind::NonRegularDirection);
  }
}

TEST_CASE("invalid models are refused") {
  auto input = sphere_embedding_input(2, -1);
  input.delta = make_qvector({0, 1});
  const auto emb = make_embedding(input);
  try {
    eta_dirac_series(emb, zeros(1), {}, make_qvector({1, 2}), 4);
    FAIL("expected ValidationError");
  } catch (const EtaError& e) {
    CHECK(e.kind() == ErrorKind::ValidationError);
  }
}

TEST_CASE("working degree covers the pole order") {
  const auto emb = builtin_sphere(3).emb;
  CHECK(working_degree(emb, 8) >= 8 + static_cast<int>(emb.g.positive_roots.size()) + 1);
}

TEST_CASE("signature sums the twisted operators over the spinor components") {
  const auto emb = builtin_sphere(3).emb;
  const QVector x0 = make_qvector({1, 2, 4});
  const auto sig = eta_signature_series(emb, {}, x0, 6);
  CHECK(sig.series.valuation() >= 0);
  CHECK(sig.diagnostics.components == decompose_spinor(emb).size());
  CHECK((sig.series - LaurentSeries::constant(sig.classical_eta, 6)).is_odd());
}

}  // TEST_SUITE
