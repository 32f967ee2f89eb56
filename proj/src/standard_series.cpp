#include "eqeta/standard_series.hpp"

#include <mutex>

#include "eqeta/errors.hpp"

namespace eqeta {

namespace {

// Taylor coefficients of a fixed even/odd function of x, grown on demand.
class BaseSequence {
 public:
  using Builder = std::vector<Rational> (*)(int);

  explicit BaseSequence(Builder build) : build_(build) {}

  std::vector<Rational> get(int n) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (static_cast<int>(coeffs_.size()) <= n) coeffs_ = build_(std::max(n, 2 * size_hint()));
    return {coeffs_.begin(), coeffs_.begin() + n + 1};
  }

 private:
  int size_hint() const { return static_cast<int>(coeffs_.size()); }

  Builder build_;
  std::mutex mutex_;
  std::vector<Rational> coeffs_;
};

Rational factorial(int k) {
  mpz_class f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return Rational(f);
}

// exp(x) = sum x^k / k!
std::vector<Rational> build_exp(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  Rational term = 1;
  for (int k = 0; k <= n; ++k) {
    c[static_cast<std::size_t>(k)] = term;
    term /= (k + 1);
  }
  return c;
}

// sinh(x/2) / (x/2) = sum x^(2k) / (4^k (2k+1)!)
std::vector<Rational> build_sinhc(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int k = 0; 2 * k <= n; ++k) {
    Rational v = 1 / factorial(2 * k + 1);
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    v /= Rational(four_k);
    c[static_cast<std::size_t>(2 * k)] = v;
  }
  return c;
}

// cosh(x/2) = sum x^(2k) / (4^k (2k)!)
std::vector<Rational> build_cosh_half(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int k = 0; 2 * k <= n; ++k) {
    mpz_class four_k;
    mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
    c[static_cast<std::size_t>(2 * k)] = 1 / (factorial(2 * k) * Rational(four_k));
  }
  return c;
}

// Power-series reciprocal of a sequence with constant term 1.
std::vector<Rational> reciprocal(const std::vector<Rational>& a) {
  std::vector<Rational> b(a.size(), Rational(0));
  b[0] = 1;
  for (std::size_t k = 1; k < a.size(); ++k) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * b[k - j];
    b[k] = -acc;
  }
  return b;
}

std::vector<Rational> build_ahat(int n) { return reciprocal(build_sinhc(n)); }

// (x/2) coth(x/2) = Ahat(x) cosh(x/2)
std::vector<Rational> build_half_coth(int n) {
  const auto a = build_ahat(n);
  const auto ch = build_cosh_half(n);
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= k; ++j) {
      c[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(j)] *
                                        ch[static_cast<std::size_t>(k - j)];
    }
  }
  return c;
}

// 2 sinh(x/2) = sum x^(2k+1) / (4^k (2k+1)!)
std::vector<Rational> build_two_sinh_half(int n) {
  std::vector<Rational> c(static_cast<std::size_t>(n + 1), Rational(0));
  const auto s = build_sinhc(n);
  for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = s[static_cast<std::size_t>(k - 1)];
  return c;
}

std::vector<Rational> build_two_cosh_half(int n) {
  auto c = build_cosh_half(n);
  for (auto& v : c) v *= 2;
  return c;
}

BaseSequence& exp_base() {
  static BaseSequence s(build_exp);
  return s;
}
BaseSequence& ahat_base() {
  static BaseSequence s(build_ahat);
  return s;
}
BaseSequence& half_coth_base() {
  static BaseSequence s(build_half_coth);
  return s;
}
BaseSequence& two_sinh_half_base() {
  static BaseSequence s(build_two_sinh_half);
  return s;
}
BaseSequence& two_cosh_half_base() {
  static BaseSequence s(build_two_cosh_half);
  return s;
}

// f(c t) to degree n from the Taylor coefficients of f.
LaurentSeries compose_linear(BaseSequence& base, const GaussianRational& c, int n) {
  if (n < 0) {
    // Only the degree-0 term matters for valuation; keep reliability honest.
    const auto b = base.get(0);
    return LaurentSeries::from_coefficients(0, {GaussianRational(b[0])}, n);
  }
  const auto b = base.get(n);
  std::vector<GaussianRational> coeffs(b.size());
  GaussianRational power(1);
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k] != 0) coeffs[k] = power * GaussianRational(b[k]);
    power *= c;
  }
  if (c.is_zero()) return LaurentSeries::constant(GaussianRational(b[0]));
  return LaurentSeries::from_coefficients(0, std::move(coeffs), n);
}

}  // namespace

LaurentSeries exp_linear(const GaussianRational& c, int n) {
  return compose_linear(exp_base(), c, n);
}

LaurentSeries ahat_series(const GaussianRational& c, int n) {
  return compose_linear(ahat_base(), c, n);
}

LaurentSeries inv_linear(const GaussianRational& c) {
  if (c.is_zero()) fail(ErrorKind::ZeroLinearForm, "linear form vanishes along the direction");
  return LaurentSeries::monomial(c.inverse(), -1);
}

LaurentSeries inv_two_sinh_half(const GaussianRational& c, int n) {
  if (c.is_zero()) fail(ErrorKind::ZeroLinearForm, "1/(2 sinh) of a vanishing linear form");
  return ahat_series(c, n + 1) * inv_linear(c);
}

LaurentSeries coth_half(const GaussianRational& c, int n) {
  if (c.is_zero()) fail(ErrorKind::ZeroLinearForm, "coth of a vanishing linear form");
  return compose_linear(half_coth_base(), c, n + 1) * (GaussianRational(2) * inv_linear(c));
}

LaurentSeries two_sinh_half(const GaussianRational& c, int n) {
  return compose_linear(two_sinh_half_base(), c, n);
}

LaurentSeries two_cosh_half(const GaussianRational& c, int n) {
  return compose_linear(two_cosh_half_base(), c, n);
}

}  // namespace eqeta
