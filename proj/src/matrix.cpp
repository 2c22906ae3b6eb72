#include "fdeg/matrix.hpp"

#include <map>

#include "fdeg/error.hpp"

namespace fdeg {

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<FE> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InputError("matrix dimensions must be positive");
  if (a_.size() != rows * cols) throw InputError("matrix entry count mismatch");
  for (FE x : a_) {
    if (x >= field_->q()) throw InputError("matrix entry is not a field element");
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) { return scalar(std::move(field), n, 1); }

Matrix Matrix::scalar(FieldPtr field, std::size_t n, FE s) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = s;
  return m;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_ || !(*field_ == *b.field_)) throw InputError("matrix product dimension mismatch");
  const Field& f = *field_;
  Matrix r(field_, rows_, b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      FE x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) = f.add(r.at(i, j), f.mul(x, b.at(k, j)));
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& b) const {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw InputError("matrix sum dimension mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(a_[i], b.a_[i]);
  return r;
}

Matrix Matrix::scaled(FE s) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = field_->mul(x, s);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw InputError("only square matrices are invertible");
  const Field& f = *field_;
  const std::size_t n = rows_;
  Matrix a = *this;
  Matrix r = identity(field_, n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) throw InputError("matrix is singular");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(r.at(piv, j), r.at(c, j));
      }
    }
    FE s = f.inv(a.at(c, c));
    for (std::size_t j = 0; j < n; ++j) {
      a.at(c, j) = f.mul(a.at(c, j), s);
      r.at(c, j) = f.mul(r.at(c, j), s);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      FE t = f.neg(a.at(i, c));
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = f.add(a.at(i, j), f.mul(t, a.at(c, j)));
        r.at(i, j) = f.add(r.at(i, j), f.mul(t, r.at(c, j)));
      }
    }
  }
  return r;
}

FE Matrix::determinant() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const Field& f = *field_;
  const std::size_t n = rows_;
  Matrix a = *this;
  FE det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a.at(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, a.at(c, c));
    FE s = f.inv(a.at(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      FE t = f.neg(f.mul(a.at(i, c), s));
      for (std::size_t j = c; j < n; ++j) a.at(i, j) = f.add(a.at(i, j), f.mul(t, a.at(c, j)));
    }
  }
  return det;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a) {
  const Field& f = a.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    }
    FE s = f.inv(a.at(row, c));
    for (std::size_t j = c; j < a.cols(); ++j) a.at(row, j) = f.mul(a.at(row, j), s);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, c) == 0) continue;
      FE t = f.neg(a.at(i, c));
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) = f.add(a.at(i, j), f.mul(t, a.at(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t Matrix::rank() const {
  Matrix a = *this;
  return rref(a).size();
}

bool Matrix::is_identity() const { return rows_ == cols_ && *this == identity(field_, rows_); }

bool Matrix::is_scalar() const {
  if (rows_ != cols_) return false;
  return *this == scalar(field_, rows_, at(0, 0));
}

Matrix Matrix::frobenius(long t) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = field_->frobenius(x, t);
  return r;
}

std::size_t Matrix::order(std::size_t limit) const {
  if (rows_ != cols_) throw InputError("order of a non-square matrix");
  Matrix x = *this;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (x.is_identity()) return k;
    x = x * *this;
  }
  return 0;
}

std::vector<std::vector<FE>> nullspace(const Matrix& m) {
  Matrix a = m;
  auto pivots = rref(a);
  const Field& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FE>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FE> v(a.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(a.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<FE> proportional(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return std::nullopt;
  const Field& f = a.field();
  std::optional<FE> t;
  for (std::size_t i = 0; i < a.entries().size(); ++i) {
    FE x = a.entries()[i], y = b.entries()[i];
    if (y == 0) {
      if (x != 0) return std::nullopt;
      continue;
    }
    FE r = f.div(x, y);
    if (t && *t != r) return std::nullopt;
    t = r;
  }
  if (!t || *t == 0) return std::nullopt;
  return t;
}

}  // namespace fdeg

namespace fdeg {

std::size_t vector_count(const Field& f, std::size_t n) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < n; ++i) c *= f.q();
  return c - 1;
}

std::vector<FE> vector_at(const Field& f, std::size_t n, std::size_t index) {
  std::size_t x = index + 1;
  std::vector<FE> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<FE>(x % f.q());
    x /= f.q();
  }
  return v;
}

std::size_t vector_index(const Field& f, const std::vector<FE>& v) {
  std::size_t x = 0;
  for (std::size_t i = v.size(); i-- > 0;) x = x * f.q() + v[i];
  return x - 1;
}

namespace {

std::vector<FE> row_times(const Matrix& m, const std::vector<FE>& v) {
  const Field& f = m.field();
  std::vector<FE> r(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] = f.add(r[j], f.mul(v[i], m.at(i, j)));
  }
  return r;
}

std::vector<FE> normalize(const Field& f, std::vector<FE> v) {
  for (FE x : v) {
    if (x == 0) continue;
    FE s = f.inv(x);
    for (auto& y : v) y = f.mul(y, s);
    break;
  }
  return v;
}

}  // namespace

Permutation act_on_vectors(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t n = m.rows();
  std::size_t count = vector_count(f, n);
  std::vector<Point> img(count);
  for (std::size_t k = 0; k < count; ++k) img[k] = static_cast<Point>(vector_index(f, row_times(m, vector_at(f, n, k))));
  return Permutation(std::move(img));
}

std::vector<std::vector<FE>> projective_points(const Field& f, std::size_t n) {
  std::vector<std::vector<FE>> out;
  for (std::size_t k = 0; k < vector_count(f, n); ++k) {
    auto v = vector_at(f, n, k);
    if (normalize(f, v) == v) out.push_back(std::move(v));
  }
  return out;
}

Permutation act_on_points(const Matrix& m) {
  const Field& f = m.field();
  auto pts = projective_points(f, m.rows());
  std::map<std::vector<FE>, Point> index;
  for (std::size_t k = 0; k < pts.size(); ++k) index[pts[k]] = static_cast<Point>(k);
  std::vector<Point> img(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) img[k] = index.at(normalize(f, row_times(m, pts[k])));
  return Permutation(std::move(img));
}

Matrix matrix_from_vector_action(FieldPtr field, std::size_t n, const Permutation& p) {
  const Field& f = *field;
  if (p.degree() != vector_count(f, n)) throw InputError("permutation degree does not match the vector space");
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FE> unit(n, 0);
    unit[i] = 1;
    auto row = vector_at(f, n, p[static_cast<Point>(vector_index(f, unit))]);
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = row[j];
  }
  if (act_on_vectors(m) != p) throw InputError("permutation is not induced by a matrix");
  return m;
}

Matrix matrix_from_point_action(FieldPtr field, std::size_t n, const Permutation& p) {
  const Field& f = *field;
  auto pts = projective_points(f, n);
  if (p.degree() != pts.size()) throw InputError("permutation degree does not match the projective space");
  std::map<std::vector<FE>, Point> index;
  for (std::size_t k = 0; k < pts.size(); ++k) index[pts[k]] = static_cast<Point>(k);
  // Rows are images of the unit points up to scalars b_i, fixed by the image of (1,...,1).
  Matrix rows(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FE> unit(n, 0);
    unit[i] = 1;
    const auto& r = pts[p[index.at(unit)]];
    for (std::size_t j = 0; j < n; ++j) rows.at(i, j) = r[j];
  }
  const auto& w = pts[p[index.at(std::vector<FE>(n, 1))]];
  if (rows.determinant() == 0) throw InputError("point permutation is not projective-linear");
  Matrix wm(field, 1, n, w);
  Matrix b = wm * rows.inverse();
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = f.mul(b.at(0, i), rows.at(i, j));
  if (m.determinant() == 0 || act_on_points(m) != p) throw InputError("point permutation is not projective-linear");
  return m;
}

}  // namespace fdeg
