#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace eqeta {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
std::string to_string(const Rational& q);
// Accepts "p", "-p", "p/q"; throws ParseError otherwise.
Rational parse_rational(const std::string& text);

/// Exact rational coordinate vector. Used both for covectors on a Cartan
/// algebra (weights, roots) and for directions in it; which one is meant is
/// fixed by context.
using QVector = std::vector<Rational>;

QVector zeros(std::size_t n);
QVector unit_vector(std::size_t n, std::size_t i);
QVector make_qvector(std::initializer_list<long> values);
Rational dot(const QVector& a, const QVector& b);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator-(const QVector& a);
QVector operator*(const Rational& s, const QVector& a);
bool is_zero(const QVector& a);
std::string to_string(const QVector& v);

/// Small dense exact matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const;

  QMatrix transpose() const;
  QMatrix operator*(const QMatrix& other) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator-(const QMatrix& other) const;
  bool operator==(const QMatrix& other) const = default;

  Rational determinant() const;
  QMatrix inverse() const;  // throws SingularMatrix
  std::size_t rank() const;
  // Basis of {x : A x = 0}, each vector scaled to coprime integers.
  std::vector<QVector> null_space() const;

  // Stable textual key, used to hash group elements.
  std::string key() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Solves A x = b for square nonsingular A.
QVector solve(const QMatrix& a, const QVector& b);

// Rescales a nonzero rational vector to the primitive integer vector with the
// same direction.
QVector primitive_integer_vector(const QVector& v);

}  // namespace eqeta
