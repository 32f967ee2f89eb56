#include "eqeta/laurent_series.hpp"

#include <algorithm>

#include "eqeta/errors.hpp"

namespace eqeta {

namespace {

int clamp_reliable(long long r) {
  return static_cast<int>(std::min<long long>(r, LaurentSeries::kExact));
}

}  // namespace

LaurentSeries LaurentSeries::zero(int reliable_degree) {
  LaurentSeries s;
  s.reliable_ = clamp_reliable(reliable_degree);
  return s;
}

LaurentSeries LaurentSeries::constant(const GaussianRational& c, int reliable_degree) {
  return monomial(c, 0, reliable_degree);
}

LaurentSeries LaurentSeries::monomial(const GaussianRational& c, int exponent,
                                      int reliable_degree) {
  return from_coefficients(exponent, {c}, reliable_degree);
}

LaurentSeries LaurentSeries::from_coefficients(int valuation, std::vector<GaussianRational> coeffs,
                                               int reliable_degree) {
  LaurentSeries s;
  s.valuation_ = valuation;
  s.coeffs_ = std::move(coeffs);
  s.reliable_ = clamp_reliable(reliable_degree);
  s.canonicalize();
  return s;
}

void LaurentSeries::canonicalize() {
  const long long keep = static_cast<long long>(reliable_) - valuation_ + 1;
  if (keep <= 0) {
    coeffs_.clear();
  } else if (static_cast<long long>(coeffs_.size()) > keep) {
    coeffs_.resize(static_cast<std::size_t>(keep));
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
    valuation_ += static_cast<int>(lead);
  }
  if (coeffs_.empty()) valuation_ = 0;
}

const GaussianRational& LaurentSeries::leading_coefficient() const {
  if (is_zero()) fail(ErrorKind::ZeroSeries, "leading coefficient of zero series");
  return coeffs_.front();
}

GaussianRational LaurentSeries::coefficient(int k) const {
  if (k > reliable_) {
    fail(ErrorKind::UnreliableCoefficient,
         "degree " + std::to_string(k) + " exceeds reliable degree " + std::to_string(reliable_));
  }
  if (is_zero() || k < valuation_ || k > last_degree()) return GaussianRational();
  return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

LaurentSeries LaurentSeries::truncated(int degree) const {
  LaurentSeries s = *this;
  s.reliable_ = std::min(reliable_, degree);
  s.canonicalize();
  return s;
}

LaurentSeries LaurentSeries::shifted(int k) const {
  LaurentSeries s = *this;
  if (!s.is_zero()) s.valuation_ += k;
  s.reliable_ = clamp_reliable(static_cast<long long>(reliable_) + k);
  return s;
}

LaurentSeries LaurentSeries::scaled_argument(const GaussianRational& c) const {
  if (c.is_zero()) fail(ErrorKind::InvalidArgument, "scaled_argument by zero");
  LaurentSeries s = *this;
  GaussianRational power = c.pow(valuation_);
  for (auto& coeff : s.coeffs_) {
    coeff *= power;
    power *= c;
  }
  s.canonicalize();
  return s;
}

bool LaurentSeries::is_even() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const int deg = valuation_ + static_cast<int>(j);
    if (deg % 2 != 0 && !coeffs_[j].is_zero()) return false;
  }
  return true;
}

bool LaurentSeries::is_odd() const {
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const int deg = valuation_ + static_cast<int>(j);
    if (deg % 2 == 0 && !coeffs_[j].is_zero()) return false;
  }
  return true;
}

bool LaurentSeries::agrees_with(const LaurentSeries& other, int degree) const {
  if (degree > reliable_ || degree > other.reliable_) return false;
  const int lo = std::min(valuation(), other.valuation());
  for (int k = lo; k <= degree; ++k) {
    if (!(coefficient(k) == other.coefficient(k))) return false;
  }
  return true;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
  const int rel = std::min(reliable_, o.reliable_);
  if (o.is_zero()) {
    reliable_ = rel;
    canonicalize();
    return *this;
  }
  if (is_zero()) {
    const int keep_rel = rel;
    *this = o;
    reliable_ = keep_rel;
    canonicalize();
    return *this;
  }
  const int lo = std::min(valuation_, o.valuation_);
  const int hi = std::min(std::max(last_degree(), o.last_degree()), rel);
  if (hi < lo) {
    coeffs_.clear();
    reliable_ = rel;
    canonicalize();
    return *this;
  }
  std::vector<GaussianRational> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const int deg = valuation_ + static_cast<int>(j);
    if (deg > hi) break;
    sum[static_cast<std::size_t>(deg - lo)] += coeffs_[j];
  }
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
    const int deg = o.valuation_ + static_cast<int>(j);
    if (deg > hi) break;
    sum[static_cast<std::size_t>(deg - lo)] += o.coeffs_[j];
  }
  valuation_ = lo;
  coeffs_ = std::move(sum);
  reliable_ = rel;
  canonicalize();
  return *this;
}

LaurentSeries& LaurentSeries::operator-=(const LaurentSeries& o) { return *this += -o; }

LaurentSeries operator-(const LaurentSeries& a) {
  LaurentSeries s = a;
  for (auto& c : s.coeffs_) c = -c;
  return s;
}

LaurentSeries& LaurentSeries::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    canonicalize();
    return *this;
  }
  for (auto& coeff : coeffs_) coeff *= c;
  return *this;
}

LaurentSeries& LaurentSeries::operator*=(const LaurentSeries& o) {
  *this = *this * o;
  return *this;
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  const bool exact = a.reliable_ == LaurentSeries::kExact && b.reliable_ == LaurentSeries::kExact;
  const int rel = exact ? LaurentSeries::kExact
                        : clamp_reliable(std::min(static_cast<long long>(a.reliable_) + b.valuation(),
                                                  static_cast<long long>(b.reliable_) + a.valuation()));
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(rel);
  const int lo = a.valuation_ + b.valuation_;
  const int hi = std::min(a.last_degree() + b.last_degree(), rel);
  if (hi < lo) return LaurentSeries::zero(rel);
  std::vector<GaussianRational> prod(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    const int di = a.valuation_ + static_cast<int>(i);
    if (di + b.valuation_ > hi) break;
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      const int deg = di + b.valuation_ + static_cast<int>(j);
      if (deg > hi) break;
      prod[static_cast<std::size_t>(deg - lo)] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return LaurentSeries::from_coefficients(lo, std::move(prod), rel);
}

LaurentSeries invert(const LaurentSeries& a) {
  if (a.is_zero()) {
    fail(ErrorKind::ZeroSeries,
         "no nonzero coefficient up to reliable degree " + std::to_string(a.reliable_degree()));
  }
  const int v = a.valuation();
  const auto& c = a.coefficients();
  // Relative precision: the unit part 1 + u is known to t^(rel - v).
  const long long precision = static_cast<long long>(a.reliable_degree()) - v;
  if (precision >= LaurentSeries::kExact / 2) {
    if (c.size() == 1) return LaurentSeries::monomial(c.front().inverse(), -v);
    fail(ErrorKind::InvalidArgument,
         "inverse of an exact non-monomial series needs a finite reliable degree");
  }
  const int terms = static_cast<int>(precision) + 1;
  const GaussianRational lead_inv = c.front().inverse();
  std::vector<GaussianRational> b(static_cast<std::size_t>(terms));
  b[0] = lead_inv;
  for (int k = 1; k < terms; ++k) {
    GaussianRational acc;
    const int jmax = std::min<int>(k, static_cast<int>(c.size()) - 1);
    for (int j = 1; j <= jmax; ++j) {
      acc += c[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
    }
    b[static_cast<std::size_t>(k)] = -(acc * lead_inv);
  }
  const long long rel = static_cast<long long>(-v) + precision;
  return LaurentSeries::from_coefficients(-v, std::move(b), clamp_reliable(rel));
}

std::string LaurentSeries::to_string() const {
  std::string s;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const int deg = valuation_ + static_cast<int>(j);
    if (coeffs_[j].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + coeffs_[j].to_string() + ")";
    if (deg != 0) s += "t^" + std::to_string(deg);
  }
  if (s.empty()) s = "0";
  if (reliable_ < kExact) s += " + O(t^" + std::to_string(reliable_ + 1) + ")";
  return s;
}

}  // namespace eqeta
