#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "fdeg/field.hpp"
#include "fdeg/perm.hpp"

namespace fdeg {

/// Dense matrix over a finite field, row-major.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<FE> entries);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix scalar(FieldPtr field, std::size_t n, FE s);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FE at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  FE& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const std::vector<FE>& entries() const { return a_; }

  Matrix operator*(const Matrix& b) const;
  Matrix operator+(const Matrix& b) const;
  Matrix scaled(FE s) const;
  Matrix transpose() const;
  /// Throws InputError if singular.
  Matrix inverse() const;
  FE determinant() const;
  std::size_t rank() const;
  bool is_identity() const;
  bool is_scalar() const;
  /// x -> x^(p^t) applied to every entry.
  Matrix frobenius(long t) const;
  /// Multiplicative order, or 0 if above `limit`.
  std::size_t order(std::size_t limit = 1u << 20) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.a_ < b.a_; }

 private:
  FieldPtr field_;
  std::size_t rows_, cols_;
  std::vector<FE> a_;
};

/// Basis of {v : A v = 0}; empty exactly when A is injective.
std::vector<std::vector<FE>> nullspace(const Matrix& a);

/// Some nonzero t with a == t * b, when it exists.
std::optional<FE> proportional(const Matrix& a, const Matrix& b);

/// Row vectors of length n over F_q, nonzero ones indexed by their base-q value minus one.
std::size_t vector_count(const Field& f, std::size_t n);
std::vector<FE> vector_at(const Field& f, std::size_t n, std::size_t index);
std::size_t vector_index(const Field& f, const std::vector<FE>& v);

/// Action v -> v M on nonzero row vectors; products of matrices map to
/// products of permutations in the same order.
Permutation act_on_vectors(const Matrix& m);

/// Projective points: nonzero vectors whose first nonzero entry is 1.
std::vector<std::vector<FE>> projective_points(const Field& f, std::size_t n);
/// Action v -> <v M> on projective points, in projective_points order.
Permutation act_on_points(const Matrix& m);

/// Matrix whose action on vectors is the given permutation (rows are images of
/// the unit vectors); throws InputError if the permutation is not linear.
Matrix matrix_from_vector_action(FieldPtr field, std::size_t n, const Permutation& p);

/// A matrix, determined up to a scalar, whose action on projective points is
/// the given permutation; throws InputError if there is none.
Matrix matrix_from_point_action(FieldPtr field, std::size_t n, const Permutation& p);

}  // namespace fdeg
