#include "filiform/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace filiform {

QVector qvec_zero(std::size_t n) { return QVector(n); }

QVector unit_vector(std::size_t n, int h) {
  if (h < 1 || static_cast<std::size_t>(h) > n)
    throw Error("basis index out of range");
  QVector v(n);
  v[static_cast<std::size_t>(h - 1)] = 1;
  return v;
}

bool qvec_is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& c) { return c == 0; });
}

QVector qvec_add(const QVector& u, const QVector& v) {
  if (u.size() != v.size())
    throw DimensionMismatch("vector dimension mismatch");
  QVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = u[i] + v[i];
  return out;
}

QVector qvec_sub(const QVector& u, const QVector& v) {
  if (u.size() != v.size())
    throw DimensionMismatch("vector dimension mismatch");
  QVector out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i)
    out[i] = u[i] - v[i];
  return out;
}

QVector qvec_scale(const Rational& c, const QVector& v) {
  QVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = c * v[i];
  return out;
}

void qvec_axpy(QVector& acc, const Rational& c, const QVector& v) {
  if (acc.size() != v.size())
    throw DimensionMismatch("vector dimension mismatch");
  if (c == 0)
    return;
  for (std::size_t i = 0; i < v.size(); ++i)
    acc[i] += c * v[i];
}

std::string qvec_str(const QVector& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0)
      continue;
    Rational c = v[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0)
        c = -c;
    }
    if (c != 1)
      os << rat_str(c) << "*";
    os << "e" << (i + 1);
  }
  if (first)
    return "0";
  return os.str();
}

QVector QMatrix::row(std::size_t i) const {
  return QVector(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                 a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
}

QVector QMatrix::apply(const QVector& v) const {
  if (v.size() != cols)
    throw DimensionMismatch("matrix-vector dimension mismatch");
  QVector out(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < cols; ++j)
      acc += at(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

QVector QMatrix::apply_unit(std::size_t j) const {
  QVector out(rows);
  for (std::size_t i = 0; i < rows; ++i)
    out[i] = at(i, j);
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& other) const {
  if (cols != other.rows)
    throw DimensionMismatch("matrix product dimension mismatch");
  QMatrix out(rows, other.cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) {
      const Rational& c = at(i, k);
      if (c == 0)
        continue;
      for (std::size_t j = 0; j < other.cols; ++j)
        out.at(i, j) += c * other.at(k, j);
    }
  return out;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows_in, std::size_t cols_in) {
  QMatrix m(rows_in.size(), cols_in);
  for (std::size_t i = 0; i < rows_in.size(); ++i) {
    if (rows_in[i].size() != cols_in)
      throw DimensionMismatch("row length mismatch");
    for (std::size_t j = 0; j < cols_in; ++j)
      m.at(i, j) = rows_in[i][j];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols_in, std::size_t rows_in) {
  QMatrix m(rows_in, cols_in.size());
  for (std::size_t j = 0; j < cols_in.size(); ++j) {
    if (cols_in[j].size() != rows_in)
      throw DimensionMismatch("column length mismatch");
    for (std::size_t i = 0; i < rows_in; ++i)
      m.at(i, j) = cols_in[j][i];
  }
  return m;
}

std::pair<QMatrix, std::size_t> rref(QMatrix m) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows && m.at(sel, col) == 0)
      ++sel;
    if (sel == m.rows)
      continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m.at(sel, j), m.at(pivot_row, j));
    Rational inv = Rational(1) / m.at(pivot_row, col);
    for (std::size_t j = col; j < m.cols; ++j)
      m.at(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == pivot_row || m.at(r, col) == 0)
        continue;
      Rational f = m.at(r, col);
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(r, j) -= f * m.at(pivot_row, j);
    }
    ++pivot_row;
  }
  return {std::move(m), pivot_row};
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  auto [r, rank] = rref(m);
  // pivot column of each of the first `rank` rows
  std::vector<std::size_t> pivot_cols(rank);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t i = 0; i < rank; ++i) {
    std::size_t j = 0;
    while (r.at(i, j) == 0)
      ++j;
    pivot_cols[i] = j;
    is_pivot[j] = true;
  }
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free])
      continue;
    QVector v(m.cols);
    v[free] = 1;
    for (std::size_t i = 0; i < rank; ++i)
      v[pivot_cols[i]] = -r.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QMatrix> inverse(const QMatrix& m) {
  if (m.rows != m.cols)
    return std::nullopt;
  std::size_t n = m.rows;
  QMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto [r, rank] = rref(std::move(aug));
  // invertible iff the left block reduced to the identity
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r.at(i, j) != (i == j ? 1 : 0))
        return std::nullopt;
  QMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv.at(i, j) = r.at(i, n + j);
  return inv;
}

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  return s;
}

Subspace Subspace::span(const std::vector<QVector>& vectors, std::size_t ambient) {
  // incremental reduced echelon form; rows stay sorted by pivot column
  std::vector<QVector> rows;
  std::vector<std::size_t> pivots;
  for (const auto& vec : vectors) {
    if (vec.size() != ambient)
      throw DimensionMismatch("span: vector does not live in the ambient space");
    QVector v = vec;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (v[pivots[r]] != 0)
        qvec_axpy(v, -v[pivots[r]], rows[r]);
    std::size_t p = 0;
    while (p < ambient && v[p] == 0)
      ++p;
    if (p == ambient)
      continue;
    if (v[p] != 1) {
      Rational inv = Rational(1) / v[p];
      for (auto& c : v)
        c *= inv;
    }
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (rows[r][p] != 0)
        qvec_axpy(rows[r], -rows[r][p], v);
    auto pos = std::lower_bound(pivots.begin(), pivots.end(), p);
    std::size_t idx = static_cast<std::size_t>(pos - pivots.begin());
    pivots.insert(pos, p);
    rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(idx), std::move(v));
  }
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = std::move(rows);
  return s;
}

bool Subspace::contains(const QVector& v) const {
  if (v.size() != ambient_)
    throw DimensionMismatch("contains: ambient dimension mismatch");
  // reduce against the RREF basis
  QVector w = v;
  for (const auto& b : basis_) {
    std::size_t p = 0;
    while (b[p] == 0)
      ++p;
    if (w[p] != 0)
      qvec_axpy(w, -w[p], b);
  }
  return qvec_is_zero(w);
}

bool Subspace::contains_subspace(const Subspace& other) const {
  if (other.ambient_ != ambient_)
    throw DimensionMismatch("contains_subspace: ambient dimension mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](const QVector& v) { return contains(v); });
}

Subspace sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    throw DimensionMismatch("sum: ambient dimension mismatch");
  std::vector<QVector> vectors = s.basis();
  vectors.insert(vectors.end(), t.basis().begin(), t.basis().end());
  return Subspace::span(vectors, s.ambient_dim());
}

} // namespace filiform
