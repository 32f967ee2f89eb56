#include "doctest.h"

#include "generators.hpp"

#include "eqeta/errors.hpp"
#include "eqeta/gaussian_rational.hpp"
#include "eqeta/laurent_series.hpp"
#include "eqeta/standard_series.hpp"

using namespace eqeta;
using eqeta::testing::Gen;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
GaussianRational re(long n, long d = 1) { return GaussianRational(q(n, d)); }
GaussianRational im(long n, long d = 1) { return GaussianRational(Rational(0), q(n, d)); }

LaurentSeries poly(int valuation, std::vector<GaussianRational> c, int rel = LaurentSeries::kExact) {
  return LaurentSeries::from_coefficients(valuation, std::move(c), rel);
}

// Bernoulli numbers from sum_{j<=m} C(m+1, j) B_j = 0.
std::vector<Rational> bernoulli(int n) {
  std::vector<Rational> b(static_cast<std::size_t>(n + 1));
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    Rational acc = 0;
    mpz_class binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += Rational(binom) * b[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    b[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return b;
}

Rational fact(int k) {
  mpz_class f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return Rational(f);
}

Rational pow2(int k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k));
  return Rational(p);
}

}  // namespace

TEST_SUITE("exact_series") {

TEST_CASE("gaussian rationals are exact and canonical") {
  const GaussianRational a(q(2, 4), q(-3, 9));
  CHECK(a.real() == q(1, 2));
  CHECK(a.imag().get_den() == 3);
  CHECK(a * a.inverse() == re(1));
  CHECK(GaussianRational::i() * GaussianRational::i() == re(-1));
  CHECK(GaussianRational::i().pow(-1) == im(-1));
  CHECK_THROWS_AS(GaussianRational().inverse(), EtaError);
  CHECK(im(1, 12).to_string() == "1/12*i");
}

TEST_CASE("field axioms hold on random elements") {
  Gen g(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = g.gaussian();
    const auto b = g.gaussian();
    const auto c = g.gaussian();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("polynomial product") {
  const auto a = poly(-1, {re(1), re(1)});
  const auto b = poly(0, {re(-1), re(1)});
  const auto p = a * b;
  CHECK(p == poly(-1, {re(-1), re(0), re(1)}));
  CHECK(p.reliable_degree() == LaurentSeries::kExact);
  CHECK(a + LaurentSeries() == a);
}

TEST_CASE("reliable degree under multiplication") {
  const auto a = poly(-2, {re(1), re(3)}, 4);
  const auto b = poly(1, {re(2)}, 5);
  const auto p = a * b;
  CHECK(p.reliable_degree() == 3);  // min(4 + 1, 5 - 2)
  CHECK(p.valuation() == -1);
  CHECK_THROWS_AS(p.coefficient(4), EtaError);
}

TEST_CASE("geometric series by long division") {
  const int n = 12;
  const auto inv = invert(poly(0, {re(1), re(1)}, n));
  for (int k = 0; k <= n; ++k) CHECK(inv.coefficient(k) == re(k % 2 == 0 ? 1 : -1));
  const auto one = poly(0, {re(1), re(1)}, n) * inv;
  CHECK(one.agrees_with(LaurentSeries::constant(1), n));
}

TEST_CASE("invert examples") {
  const auto a = invert(LaurentSeries::monomial(re(2), 1));
  CHECK(a == LaurentSeries::monomial(re(1, 2), -1));
  const auto b = invert(poly(0, {re(1), re(0), re(1, 24)}, 6));
  CHECK(b.coefficient(0) == re(1));
  CHECK(b.coefficient(2) == re(-1, 24));
  CHECK(b.coefficient(4) == re(1, 576));
  CHECK(b.coefficient(6) == re(-1, 13824));
  CHECK(b.valuation() == 0);
  try {
    invert(LaurentSeries::zero(5));
    FAIL("expected ZeroSeries");
  } catch (const EtaError& e) {
    CHECK(e.kind() == ErrorKind::ZeroSeries);
  }
}

TEST_CASE("ring axioms on random series") {
  Gen g(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = g.series(static_cast<int>(g.integer(-2, 2)), 4, 6);
    const auto b = g.series(static_cast<int>(g.integer(-2, 2)), 4, 7);
    const auto c = g.series(static_cast<int>(g.integer(-2, 2)), 4, 5);
    const auto lhs = (a + b) + c;
    const auto rhs = a + (b + c);
    CHECK(lhs == rhs);
    const auto d1 = a * (b + c);
    const auto d2 = a * b + a * c;
    const int deg = std::min(d1.reliable_degree(), d2.reliable_degree());
    CHECK(d1.agrees_with(d2, deg));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("invert is a two-sided inverse for random unit series") {
  Gen g(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int v = static_cast<int>(g.integer(-3, 3));
    const auto a = g.unit_series(v, 5, v + 6);
    const auto inv = invert(a);
    CHECK(inv.valuation() == -v);
    const auto left = a * inv;
    const auto right = inv * a;
    CHECK(left.reliable_degree() >= 6);
    CHECK(left.agrees_with(LaurentSeries::constant(1), left.reliable_degree()));
    CHECK(right.agrees_with(LaurentSeries::constant(1), right.reliable_degree()));
  }
}

TEST_CASE("exp_linear") {
  CHECK(exp_linear(re(0), 5) == LaurentSeries::constant(1));
  const auto e = exp_linear(GaussianRational::i(), 3);
  CHECK(e == poly(0, {re(1), im(1), re(-1, 2), im(-1, 6)}, 3));
  CHECK(exp_linear(re(1), 2) == poly(0, {re(1), re(1), re(1, 2)}, 2));
  // exp(a t) exp(b t) = exp((a + b) t)
  Gen g(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = g.gaussian();
    const auto b = g.gaussian();
    CHECK((exp_linear(a, 8) * exp_linear(b, 8)).agrees_with(exp_linear(a + b, 8), 8));
  }
}

TEST_CASE("ahat_series against Bernoulli numbers") {
  const int n = 16;
  const auto b = bernoulli(n);
  const auto a = ahat_series(re(1), n);
  for (int k = 0; 2 * k <= n; ++k) {
    // x/sinh x = sum -(2^{2k} - 2) B_{2k} x^{2k} / (2k)!, x = t/2
    const Rational expected =
        -(pow2(2 * k) - 2) * b[static_cast<std::size_t>(2 * k)] / fact(2 * k) / pow2(2 * k);
    CHECK(a.coefficient(2 * k) == GaussianRational(expected));
  }
  CHECK(a.coefficient(2) == re(-1, 24));
  CHECK(a.coefficient(4) == re(7, 5760));
  CHECK(ahat_series(re(0), 6) == LaurentSeries::constant(1));
  const auto a2 = ahat_series(re(2), 4);
  CHECK(a2.coefficient(2) == re(-1, 6));
  CHECK(a2.coefficient(4) == re(7, 360));
}

TEST_CASE("inv_two_sinh_half against the cosech expansion") {
  const int n = 13;
  const auto b = bernoulli(n + 1);
  const auto s = inv_two_sinh_half(re(1), n);
  CHECK(s.valuation() == -1);
  CHECK(s.coefficient(-1) == re(1));
  for (int k = 1; 2 * k - 1 <= n; ++k) {
    // csch x = 1/x - sum 2 (2^{2k-1} - 1) B_{2k} x^{2k-1} / (2k)!, halved at x = t/2
    const Rational expected = -(pow2(2 * k - 1) - 1) * b[static_cast<std::size_t>(2 * k)] /
                              fact(2 * k) / pow2(2 * k - 1);
    CHECK(s.coefficient(2 * k - 1) == GaussianRational(expected));
  }
  CHECK(s.coefficient(1) == re(-1, 24));
  CHECK(s.coefficient(3) == re(7, 5760));
  const auto si = inv_two_sinh_half(GaussianRational::i(), 3);
  CHECK(si.coefficient(-1) == im(-1));
  CHECK(si.coefficient(1) == im(-1, 24));
  CHECK(si.coefficient(3) == im(-7, 5760));
  try {
    inv_two_sinh_half(re(0), 3);
    FAIL("expected ZeroLinearForm");
  } catch (const EtaError& e) {
    CHECK(e.kind() == ErrorKind::ZeroLinearForm);
  }
}

TEST_CASE("coth_half against Bernoulli numbers") {
  const int n = 13;
  const auto b = bernoulli(n + 1);
  const auto c = coth_half(re(1), n);
  CHECK(c.coefficient(-1) == re(2));
  for (int k = 1; 2 * k - 1 <= n; ++k) {
    const Rational expected = 2 * b[static_cast<std::size_t>(2 * k)] / fact(2 * k);
    CHECK(c.coefficient(2 * k - 1) == GaussianRational(expected));
  }
  CHECK(c.coefficient(1) == re(1, 6));
  CHECK(c.coefficient(3) == re(-1, 360));
  const auto c2 = coth_half(re(2), 3);
  CHECK(c2.coefficient(-1) == re(1));
  CHECK(c2.coefficient(1) == re(1, 3));
  CHECK(c2.coefficient(3) == re(-1, 45));
  CHECK_THROWS_AS(coth_half(re(0), 3), EtaError);
}

TEST_CASE("standard function identities on random arguments") {
  Gen g(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto c = g.nonzero_gaussian();
    const int n = 10;
    // Â(ct) · 2 sinh(ct/2) = c t
    const auto lhs = ahat_series(c, n) * two_sinh_half(c, n);
    CHECK(lhs.agrees_with(LaurentSeries::monomial(c, 1), n));
    // coth(ct/2) · 2 sinh(ct/2) = 2 cosh(ct/2)
    const auto ch = coth_half(c, n) * two_sinh_half(c, n + 2);
    CHECK(ch.agrees_with(two_cosh_half(c, n), n));
    CHECK(ahat_series(c, n).is_even());
    CHECK(inv_two_sinh_half(c, n).is_odd());
    CHECK(coth_half(c, n).is_odd());
    CHECK((inv_two_sinh_half(c, n) * two_sinh_half(c, n + 1)).agrees_with(LaurentSeries::constant(1), n));
  }
}

TEST_CASE("reliable degree of standard functions") {
  CHECK(exp_linear(re(3), 7).reliable_degree() == 7);
  CHECK(ahat_series(re(3), 7).reliable_degree() == 7);
  CHECK(inv_two_sinh_half(re(3), 7).reliable_degree() == 7);
  CHECK(coth_half(re(3), 7).reliable_degree() == 7);
}

}  // TEST_SUITE
