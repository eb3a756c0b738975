#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "filiform/rational.hpp"

namespace filiform {

using QVector = std::vector<Rational>;

QVector qvec_zero(std::size_t n);
// h is a 1-based basis index e_h.
QVector unit_vector(std::size_t n, int h);
bool qvec_is_zero(const QVector& v);
QVector qvec_add(const QVector& u, const QVector& v);
QVector qvec_sub(const QVector& u, const QVector& v);
QVector qvec_scale(const Rational& c, const QVector& v);
// acc += c * v
void qvec_axpy(QVector& acc, const Rational& c, const QVector& v);
// "2*e3 - 1/2*e2" with ascending basis index; "0" for the zero vector.
std::string qvec_str(const QVector& v);

struct QMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a; // row-major

  QMatrix() = default;
  QMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  QVector row(std::size_t i) const;
  QVector column(std::size_t j) const { return apply_unit(j); }
  QVector apply(const QVector& v) const; // M v
  QMatrix operator*(const QMatrix& other) const;
  bool operator==(const QMatrix&) const = default;

  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<QVector>& rows_in, std::size_t cols_in);
  static QMatrix from_columns(const std::vector<QVector>& cols_in, std::size_t rows_in);

private:
  QVector apply_unit(std::size_t j) const;
};

// Reduced row echelon form and rank.
std::pair<QMatrix, std::size_t> rref(QMatrix m);

// Basis of { x : M x = 0 }.
std::vector<QVector> kernel_basis(const QMatrix& m);

std::optional<QMatrix> inverse(const QMatrix& m);

// Canonical subspace of Q^ambient: basis rows in RREF, so equality of
// subspaces is equality of representations.
class Subspace {
public:
  static Subspace zero(std::size_t ambient);
  static Subspace span(const std::vector<QVector>& vectors, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<QVector>& basis() const { return basis_; }
  bool is_zero() const { return basis_.empty(); }

  bool contains(const QVector& v) const;
  bool contains_subspace(const Subspace& other) const;
  bool operator==(const Subspace&) const = default;

private:
  std::size_t ambient_ = 0;
  std::vector<QVector> basis_;
};

Subspace sum(const Subspace& s, const Subspace& t);

} // namespace filiform
