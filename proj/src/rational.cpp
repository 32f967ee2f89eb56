#include "eqeta/rational.hpp"

#include <numeric>
#include <sstream>
#include <utility>

#include "eqeta/errors.hpp"

namespace eqeta {

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
  auto is_integer = [](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start >= s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den)) {
    fail(ErrorKind::ParseError, "not an exact rational: '" + text + "'");
  }
  mpz_class n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) fail(ErrorKind::ParseError, "zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

QVector zeros(std::size_t n) { return QVector(n, Rational(0)); }

QVector unit_vector(std::size_t n, std::size_t i) {
  QVector v = zeros(n);
  v.at(i) = 1;
  return v;
}

QVector make_qvector(std::initializer_list<long> values) {
  QVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Rational dot(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidArgument, "dot: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector operator+(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidArgument, "add: dimension mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidArgument, "sub: dimension mismatch");
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

QVector operator-(const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

QVector operator*(const Rational& s, const QVector& a) {
  QVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

bool is_zero(const QVector& a) {
  for (const auto& x : a) {
    if (x != 0) return false;
  }
  return true;
}

std::string to_string(const QVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorKind::InvalidArgument, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns, std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) fail(ErrorKind::InvalidArgument, "ragged matrix columns");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVector QMatrix::column(std::size_t j) const {
  QVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols_ != other.rows_) fail(ErrorKind::InvalidArgument, "matrix product: shape mismatch");
  QMatrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  }
  return r;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) fail(ErrorKind::InvalidArgument, "matrix-vector: shape mismatch");
  QVector r = zeros(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      const Rational& a = (*this)(i, j);
      if (a != 0) r[i] += a * v[j];
    }
  }
  return r;
}

QMatrix QMatrix::operator-(const QMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    fail(ErrorKind::InvalidArgument, "matrix difference: shape mismatch");
  }
  QMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - other.data_[i];
  return r;
}

Rational QMatrix::determinant() const {
  if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  QMatrix a = *this;
  Rational det = 1;
  const std::size_t n = rows_;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c) == 0) continue;
      const Rational f = a(r, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return det;
}

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) fail(ErrorKind::InvalidArgument, "inverse of non-square matrix");
  const std::size_t n = rows_;
  QMatrix a = *this;
  QMatrix inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) fail(ErrorKind::SingularMatrix, "matrix is not invertible");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rational pivot = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= pivot;
      inv(c, j) /= pivot;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational pivot = a(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a(r, j) /= pivot;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t QMatrix::rank() const {
  QMatrix a = *this;
  return rref(a).size();
}

std::vector<QVector> QMatrix::null_space() const {
  QMatrix a = *this;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    QVector v = zeros(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a(i, free);
    basis.push_back(primitive_integer_vector(v));
  }
  return basis;
}

std::string QMatrix::key() const {
  std::string k;
  for (const auto& x : data_) {
    k += x.get_str();
    k += ',';
  }
  return k;
}

QVector solve(const QMatrix& a, const QVector& b) { return a.inverse() * b; }

QVector primitive_integer_vector(const QVector& v) {
  mpz_class den_lcm = 1;
  for (const auto& x : v) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& x : v) {
    mpz_class scaled = x.get_num() * (den_lcm / x.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  if (num_gcd == 0) fail(ErrorKind::InvalidArgument, "primitive vector of zero vector");
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  return scale * v;
}

}  // namespace eqeta
