#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tanaka/rational.hpp"

namespace tanaka {

// Dense row-major matrix over exact rationals.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    return Vec(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
               entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  Vec column(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
    Vec y = zero_vec(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != 0 && x[j] != 0) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> entries_;
};

struct RrefResult {
  Matrix R;
  std::vector<std::size_t> pivot_cols;  // strictly increasing
  std::size_t rank = 0;
};

// Unique reduced row echelon form. Empty matrices are fine (rank 0).
inline RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t i = r; i < nr; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == nr) continue;
    if (piv != r)
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(piv, j), m(r, j));
    const Rational inv = Rational(1) / m(r, c);
    for (std::size_t j = c; j < nc; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < nr; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < nc; ++j) m(i, j) -= f * m(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = out.pivot_cols.size();
  out.R = std::move(m);
  return out;
}

inline std::size_t rank_of(const Matrix& m) { return rref(m).rank; }

inline std::size_t rank_of_rows(const std::vector<Vec>& rows, std::size_t ambient) {
  return rank_of(Matrix::from_rows(rows, ambient));
}

// A subspace of Q^ambient given by an explicit (independent) basis.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, std::vector<Vec> basis)
      : ambient_(ambient_dim), basis_(std::move(basis)) {
    for (const auto& v : basis_)
      if (v.size() != ambient_) throw std::invalid_argument("basis vector has wrong length");
    if (rank_of_rows(basis_, ambient_) != basis_.size())
      throw std::invalid_argument("subspace basis is linearly dependent");
  }

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {}); }

  static Subspace full(std::size_t ambient_dim) {
    std::vector<Vec> b;
    for (std::size_t i = 0; i < ambient_dim; ++i) b.push_back(unit_vec(ambient_dim, i));
    return Subspace(ambient_dim, std::move(b));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }

 private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
};

// Canonical kernel basis: one vector per rref free column, in column order.
inline Subspace kernel_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  const std::size_t nc = m.cols();
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    Vec x = zero_vec(nc);
    x[f] = 1;
    for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivot_cols[r]] = -rr.R(r, f);
    basis.push_back(std::move(x));
  }
  return Subspace(nc, std::move(basis));
}

// Column-space basis: the original columns sitting at rref pivot positions.
inline Subspace image_basis(const Matrix& m) {
  const RrefResult rr = rref(m);
  std::vector<Vec> basis;
  for (std::size_t c : rr.pivot_cols) basis.push_back(m.column(c));
  return Subspace(m.rows(), std::move(basis));
}

// Deterministic complement: span of the standard vectors e_j for the
// non-pivot coordinates j of the subspace's echelonized basis.
inline Subspace complement_basis(const Subspace& s) {
  const RrefResult rr = rref(Matrix::from_rows(s.basis(), s.ambient_dim()));
  std::vector<bool> is_pivot(s.ambient_dim(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < s.ambient_dim(); ++j)
    if (!is_pivot[j]) basis.push_back(unit_vec(s.ambient_dim(), j));
  return Subspace(s.ambient_dim(), std::move(basis));
}

// Coordinates of target in the span of `vectors` (as columns), if any.
inline std::optional<Vec> solve_coordinates(const std::vector<Vec>& vectors, const Vec& target) {
  const std::size_t amb = target.size();
  Matrix aug(amb, vectors.size() + 1);
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != amb) throw std::invalid_argument("solve_coordinates size mismatch");
    for (std::size_t i = 0; i < amb; ++i) aug(i, j) = vectors[j][i];
  }
  for (std::size_t i = 0; i < amb; ++i) aug(i, vectors.size()) = target[i];
  const RrefResult rr = rref(aug);
  Vec coords = zero_vec(vectors.size());
  for (std::size_t r = 0; r < rr.rank; ++r) {
    const std::size_t p = rr.pivot_cols[r];
    if (p == vectors.size()) return std::nullopt;  // inconsistent
    coords[p] = rr.R(r, vectors.size());
  }
  return coords;
}

inline bool contains(const Subspace& s, const Vec& v) {
  if (v.size() != s.ambient_dim()) throw std::invalid_argument("contains: size mismatch");
  if (is_zero_vec(v)) return true;
  auto rows = s.basis();
  rows.push_back(v);
  return rank_of_rows(rows, s.ambient_dim()) == s.dim();
}

inline bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  auto rows = outer.basis();
  for (const auto& v : inner.basis()) rows.push_back(v);
  return rank_of_rows(rows, outer.ambient_dim()) == outer.dim();
}

inline bool subspace_equal(const Subspace& a, const Subspace& b) {
  return a.dim() == b.dim() && subspace_contains(a, b);
}

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  std::vector<Vec> rows = a.basis();
  for (const auto& v : b.basis()) rows.push_back(v);
  const RrefResult rr = rref(Matrix::from_rows(rows, a.ambient_dim()));
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < rr.rank; ++r) basis.push_back(rr.R.row(r));
  return Subspace(a.ambient_dim(), std::move(basis));
}

inline Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("intersection: ambient mismatch");
  std::vector<Vec> cols = a.basis();
  for (const auto& v : b.basis()) cols.push_back(v);
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(a.ambient_dim());
  const Subspace ker = kernel_basis(Matrix::from_columns(cols, a.ambient_dim()));
  std::vector<Vec> raw;
  for (const auto& cd : ker.basis()) {
    Vec x = zero_vec(a.ambient_dim());
    for (std::size_t j = 0; j < a.dim(); ++j) axpy(x, cd[j], a.basis()[j]);
    if (!is_zero_vec(x)) raw.push_back(std::move(x));
  }
  const RrefResult rr = rref(Matrix::from_rows(raw, a.ambient_dim()));
  std::vector<Vec> basis;
  for (std::size_t r = 0; r < rr.rank; ++r) basis.push_back(rr.R.row(r));
  return Subspace(a.ambient_dim(), std::move(basis));
}

// Row basis of the functionals vanishing on s; membership in s is
// equivalent to being killed by all of them.
inline std::vector<Vec> annihilator_rows(const Subspace& s) {
  if (s.dim() == 0) {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < s.ambient_dim(); ++i) rows.push_back(unit_vec(s.ambient_dim(), i));
    return rows;
  }
  return kernel_basis(Matrix::from_rows(s.basis(), s.ambient_dim())).basis();
}

}  // namespace tanaka
