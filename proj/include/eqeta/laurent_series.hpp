#pragma once

#include <string>
#include <vector>

#include "eqeta/gaussian_rational.hpp"

namespace eqeta {

/// Truncated Laurent series  sum_k c_k t^k  over the Gaussian rationals.
///
/// Every coefficient of degree <= reliable_degree() is exact; coefficients
/// above it are unknown (not zero) and are never reported. The stored
/// coefficient vector starts at valuation() with a nonzero entry and ends
/// with a nonzero entry. The zero series stores nothing and reports
/// valuation() == reliable_degree() + 1.
class LaurentSeries {
 public:
  /// Marker for series whose coefficients are known to every degree
  /// (monomials, polynomials with exact linear-form coefficients).
  static constexpr int kExact = 1 << 24;

  LaurentSeries() = default;  // zero series, exact

  static LaurentSeries zero(int reliable_degree);
  static LaurentSeries constant(const GaussianRational& c, int reliable_degree = kExact);
  static LaurentSeries monomial(const GaussianRational& c, int exponent,
                                int reliable_degree = kExact);
  static LaurentSeries from_coefficients(int valuation, std::vector<GaussianRational> coeffs,
                                         int reliable_degree);

  bool is_zero() const { return coeffs_.empty(); }
  int valuation() const { return is_zero() ? reliable_ + 1 : valuation_; }
  int reliable_degree() const { return reliable_; }
  /// Highest stored degree; valuation()-1 for the zero series.
  int last_degree() const { return valuation() + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<GaussianRational>& coefficients() const { return coeffs_; }
  const GaussianRational& leading_coefficient() const;

  /// Coefficient of t^k; throws UnreliableCoefficient above reliable_degree().
  GaussianRational coefficient(int k) const;

  /// Forgets every coefficient above `degree`.
  LaurentSeries truncated(int degree) const;
  /// Multiplication by t^k.
  LaurentSeries shifted(int k) const;
  /// f(t) -> f(c t).
  LaurentSeries scaled_argument(const GaussianRational& c) const;
  /// f(t) -> f(-t).
  LaurentSeries reflected() const { return scaled_argument(GaussianRational(-1)); }

  bool is_even() const;
  bool is_odd() const;

  /// Coefficientwise equality on degrees <= degree (both must be reliable there).
  bool agrees_with(const LaurentSeries& other, int degree) const;

  LaurentSeries& operator+=(const LaurentSeries& o);
  LaurentSeries& operator-=(const LaurentSeries& o);
  LaurentSeries& operator*=(const LaurentSeries& o);
  LaurentSeries& operator*=(const GaussianRational& c);

  friend LaurentSeries operator+(LaurentSeries a, const LaurentSeries& b) { return a += b; }
  friend LaurentSeries operator-(LaurentSeries a, const LaurentSeries& b) { return a -= b; }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator*(LaurentSeries a, const GaussianRational& c) { return a *= c; }
  friend LaurentSeries operator*(const GaussianRational& c, LaurentSeries a) { return a *= c; }
  friend LaurentSeries operator-(const LaurentSeries& a);
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) = default;

  std::string to_string() const;

 private:
  void canonicalize();

  int valuation_ = 0;
  std::vector<GaussianRational> coeffs_;
  int reliable_ = kExact;
};

/// Multiplicative inverse; throws ZeroSeries if no coefficient is nonzero
/// within the reliable range. valuation(result) == -valuation(a).
LaurentSeries invert(const LaurentSeries& a);

inline LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
  return a * invert(b);
}

}  // namespace eqeta
