#include "eqeta/sphere_models.hpp"

#include "eqeta/errors.hpp"

namespace eqeta {

namespace {

// sin(a t / 2) or cos(a t / 2) from their Taylor series, to degree m.
LaurentSeries half_angle(const Rational& a, int m, bool sine) {
  std::vector<GaussianRational> c(static_cast<std::size_t>(m + 1));
  const Rational half = a / 2;
  Rational term = 1;  // (a/2)^k / k!
  for (int k = 0; k <= m; ++k) {
    const bool odd = k % 2 == 1;
    if (odd == sine) {
      const int sign = ((sine ? k - 1 : k) / 2) % 2 == 0 ? 1 : -1;
      c[static_cast<std::size_t>(k)] = GaussianRational(Rational(sign) * term);
    }
    term *= half;
    term /= (k + 1);
  }
  return LaurentSeries::from_coefficients(0, std::move(c), m);
}

struct ClosedFormData {
  std::vector<Rational> a;
  std::vector<Rational> weight;  // ∏_{k≠j} a_k² / (a_k² - a_j²)
};

ClosedFormData prepare(int n, const QVector& x0) {
  if (n < 1) fail(ErrorKind::OutOfRange, "sphere index must be at least 1");
  if (static_cast<int>(x0.size()) != n) {
    fail(ErrorKind::InvalidArgument, "direction must have " + std::to_string(n) + " coordinates");
  }
  ClosedFormData d{x0, {}};
  for (int j = 0; j < n; ++j) {
    if (d.a[j] == 0) fail(ErrorKind::DegenerateDirection, "coordinate " + std::to_string(j + 1) + " is zero");
    Rational w = 1;
    for (int k = 0; k < n; ++k) {
      if (k == j) continue;
      const Rational diff = d.a[k] * d.a[k] - d.a[j] * d.a[j];
      if (diff == 0) {
        fail(ErrorKind::DegenerateDirection,
             "coordinates " + std::to_string(j + 1) + " and " + std::to_string(k + 1) + " agree up to sign");
      }
      w *= d.a[k] * d.a[k] / diff;
    }
    d.weight.push_back(w);
  }
  return d;
}

LaurentSeries inverse_monomial(const Rational& a) {
  return LaurentSeries::monomial(GaussianRational(1 / a), -1);
}

LaurentSeries finalize(const LaurentSeries& s, int degree) {
  if (s.reliable_degree() < degree) {
    fail(ErrorKind::UnreliableCoefficient, "closed form not reliable to degree " + std::to_string(degree));
  }
  return s.truncated(degree);
}

}  // namespace

EmbeddingInput sphere_embedding_input(int n, int sign) {
  if (n < 2) fail(ErrorKind::OutOfRange, "sphere model needs n >= 2");
  if (sign != 1 && sign != -1) fail(ErrorKind::InvalidArgument, "sign must be +1 or -1");
  EmbeddingInput in;
  in.g = {{RootType::D, n}};
  in.h = {{RootType::B, n - 1}};
  in.iota = QMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
  for (int j = 0; j + 1 < n; ++j) in.iota(static_cast<std::size_t>(j), static_cast<std::size_t>(j)) = 1;
  const QVector e = Rational(sign) * unit_vector(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1));
  in.delta = e;
  in.normal = e;
  return in;
}

EmbeddingData sphere_embedding(int n, int sign) { return make_embedding(sphere_embedding_input(n, sign)); }

SphereModel builtin_sphere(int n) {
  if (n < 2 || n > kMaxBuiltinSphere) {
    fail(ErrorKind::OutOfRange, "builtin sphere models cover 2 <= n <= " + std::to_string(kMaxBuiltinSphere));
  }
  SphereModel m{n, sphere_embedding(n, -1)};
  require_valid(m.emb);
  return m;
}

LaurentSeries sphere_eta_dirac_closed(int n, const QVector& x0, int degree) {
  const ClosedFormData d = prepare(n, x0);
  const int m = degree + 2 * n + 2;
  LaurentSeries bracket = LaurentSeries::constant(1);
  LaurentSeries prefactor = LaurentSeries::constant(GaussianRational::i().pow(n) *
                                                    GaussianRational(Rational(1, 1L << (n - 1))));
  for (int j = 0; j < n; ++j) {
    const LaurentSeries s = half_angle(d.a[j], m, true);
    prefactor *= invert(s);
    bracket -= GaussianRational(2 * d.weight[j]) * inverse_monomial(d.a[j]) * s;
  }
  return finalize(prefactor * bracket, degree);
}

LaurentSeries sphere_eta_signature_closed(int n, const QVector& x0, int degree) {
  const ClosedFormData d = prepare(n, x0);
  const int m = degree + 2 * n + 2;
  LaurentSeries bracket = LaurentSeries::constant(1);
  LaurentSeries prefactor = LaurentSeries::constant(GaussianRational::i().pow(n));
  for (int j = 0; j < n; ++j) {
    const LaurentSeries s = half_angle(d.a[j], m, true);
    const LaurentSeries c = half_angle(d.a[j], m, false);
    prefactor *= c / s;
    bracket -= GaussianRational(2 * d.weight[j]) * inverse_monomial(d.a[j]) * (s / c);
  }
  return finalize(prefactor * bracket, degree);
}

}  // namespace eqeta
