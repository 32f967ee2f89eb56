#include "doctest.h"

#include "generators.hpp"

#include "eqeta/characters.hpp"
#include "eqeta/errors.hpp"
#include "eqeta/sphere_models.hpp"
#include "eqeta/standard_series.hpp"

using namespace eqeta;
using eqeta::testing::Gen;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
GaussianRational re(long n, long d = 1) { return GaussianRational(q(n, d)); }

long total(const WeightMultiset& m) {
  long s = 0;
  for (const auto& [mu, k] : m) s += k;
  return s;
}

// Random dominant weight in the lattice of a B, C or D system of rank r.
QVector random_dominant(Gen& g, RootType type, int r) {
  std::vector<long> v(static_cast<std::size_t>(r));
  long prev = 3;
  for (auto& x : v) {
    x = g.integer(0, prev);
    prev = x;
  }
  QVector out;
  const bool half = type != RootType::C && g.integer(0, 1) == 1;
  for (long x : v) out.push_back(half ? q(2 * x + 1, 2) : q(x));
  if (type == RootType::D && r >= 2 && g.integer(0, 1) == 1) out.back() = -out.back();
  return out;
}

}  // namespace

TEST_SUITE("characters") {

TEST_CASE("B1 spin character") {
  const auto rs = build_root_system({{RootType::B, 1}});
  const auto w = enumerate_weyl_group(rs);
  // χ = 2 cos(t/2)
  const auto chi = weyl_character_series(rs, w, {q(1, 2)}, make_qvector({1}), 4);
  CHECK(chi.coefficient(0) == re(2));
  CHECK(chi.coefficient(1) == re(0));
  CHECK(chi.coefficient(2) == re(-1, 4));
  CHECK(chi.coefficient(4) == re(1, 192));
}

TEST_CASE("dimensions") {
  const auto b2 = build_root_system({{RootType::B, 2}});
  CHECK(weyl_dimension(b2, zeros(2)) == 1);
  CHECK(weyl_dimension(b2, {q(1, 2), q(1, 2)}) == 4);
  CHECK(weyl_dimension(b2, make_qvector({1, 0})) == 5);
  CHECK(weyl_dimension(b2, make_qvector({1, 1})) == 10);
  const auto d3 = build_root_system({{RootType::D, 3}});
  CHECK(weyl_dimension(d3, make_qvector({1, 0, 0})) == 6);
  CHECK(weyl_dimension(d3, {q(1, 2), q(1, 2), q(1, 2)}) == 4);
  const auto a2 = build_root_system({{RootType::A, 2}});
  CHECK(weyl_dimension(a2, make_qvector({1, 0, -1})) == 8);
  const auto d3v = weyl_character_series(d3, enumerate_weyl_group(d3), make_qvector({1, 0, 0}),
                                         make_qvector({1, 2, 4}), 2);
  CHECK(d3v.coefficient(0) == re(6));
}

TEST_CASE("Freudenthal examples") {
  const auto a2 = build_root_system({{RootType::A, 2}});
  const auto adj = freudenthal_multiplicities(a2, make_qvector({1, 0, -1}));
  CHECK(adj.at(zeros(3)) == 2);
  CHECK(adj.size() == 7);
  CHECK(total(adj) == 8);

  const auto b2 = build_root_system({{RootType::B, 2}});
  const auto vec = freudenthal_multiplicities(b2, make_qvector({1, 0}));
  CHECK(vec.size() == 5);
  CHECK(vec.at(zeros(2)) == 1);
  const auto adjb = freudenthal_multiplicities(b2, make_qvector({1, 1}));
  CHECK(adjb.at(zeros(2)) == 2);

  const auto d2 = build_root_system({{RootType::D, 2}});
  const auto d2v = freudenthal_multiplicities(d2, make_qvector({1, 0}));
  CHECK(d2v == WeightMultiset{{make_qvector({-1, 0}), 1},
                              {make_qvector({0, -1}), 1},
                              {make_qvector({0, 1}), 1},
                              {make_qvector({1, 0}), 1}});
}

TEST_CASE("errors") {
  const auto b2 = build_root_system({{RootType::B, 2}});
  try {
    freudenthal_multiplicities(b2, make_qvector({0, 1}));
    FAIL("expected NonDominantWeight");
  } catch (const EtaError& e) {
    CHECK(e.kind() == ErrorKind::NonDominantWeight);
  }
  try {
    freudenthal_multiplicities(b2, make_qvector({30, 30}), 100);
    FAIL("expected DimensionBoundExceeded");
  } catch (const EtaError& e) {
    CHECK(e.kind() == ErrorKind::DimensionBoundExceeded);
  }
}

TEST_CASE("Freudenthal agrees with the Weyl character formula") {
  Gen g(41);
  const int n = 8;
  int cases = 0;
  for (const auto& [type, rank] : std::vector<std::pair<RootType, int>>{
           {RootType::B, 2}, {RootType::C, 2}, {RootType::D, 3}, {RootType::B, 3}, {RootType::D, 2}}) {
    const auto rs = build_root_system({{type, rank}});
    const auto w = enumerate_weyl_group(rs);
    for (int trial = 0; trial < 4; ++trial, ++cases) {
      const auto kappa = random_dominant(g, type, rank);
      CAPTURE(to_string(kappa));
      REQUIRE(is_dominant(rs, kappa));
      QVector x0;
      do {
        x0 = g.vector(static_cast<std::size_t>(rank));
      } while (!is_regular(rs, x0));
      const auto m = freudenthal_multiplicities(rs, kappa);
      CHECK(mpz_class(total(m)) == weyl_dimension(rs, kappa));
      const auto lhs = weyl_character_series(rs, w, kappa, x0, n);
      CHECK(lhs.agrees_with(weight_multiset_series(m, x0, n), n));
      // multiplicities are W-invariant
      for (const auto& [mu, k] : m) {
        for (const auto& el : w.elements()) {
          const auto it = m.find(el * mu);
          REQUIRE(it != m.end());
          CHECK(it->second == k);
        }
      }
    }
  }
  CHECK(cases == 20);
}

TEST_CASE("characters are Weyl invariant in the direction") {
  const auto rs = build_root_system({{RootType::B, 2}});
  const auto w = enumerate_weyl_group(rs);
  const QVector x0 = make_qvector({1, 3});
  const auto base = weyl_character_series(rs, w, make_qvector({1, 0}), x0, 8);
  for (const auto& el : w.elements()) {
    CHECK(weyl_character_series(rs, w, make_qvector({1, 0}), el * x0, 8) == base);
  }
}

TEST_CASE("spinor weights") {
  const auto sw = spinor_weights({make_qvector({1, 0}), make_qvector({0, 1})}, 2);
  CHECK(total(sw) == 4);
  CHECK(sw.at({q(1, 2), q(-1, 2)}) == 1);
  const auto doubled = spinor_weights({make_qvector({1}), make_qvector({1})}, 1);
  CHECK(doubled.at(zeros(1)) == 2);
}

TEST_CASE("spinor decomposition for spheres") {
  const auto e2 = builtin_sphere(2).emb;
  const auto c2 = decompose_spinor(e2);
  REQUIRE(c2.size() == 1);
  CHECK(c2[0].kappa == QVector{q(1, 2)});
  CHECK(c2[0].alpha == make_qvector({1, 0}));

  const auto e3 = builtin_sphere(3).emb;
  const auto c3 = decompose_spinor(e3);
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].kappa == QVector{q(1, 2), q(1, 2)});
  CHECK(c3[0].alpha == make_qvector({2, 1, 0}));

  // the components rebuild the spin module
  for (int n = 2; n <= 4; ++n) {
    const auto emb = builtin_sphere(n).emb;
    WeightMultiset sum;
    for (const auto& c : decompose_spinor(emb)) {
      for (const auto& [mu, k] : freudenthal_multiplicities(emb.h, c.kappa)) sum[mu] += k;
    }
    CHECK(sum == spinor_weights(emb.isotropy_weights, static_cast<std::size_t>(emb.h.ambient_dim)));
  }
}

}  // TEST_SUITE
