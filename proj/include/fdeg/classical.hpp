#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fdeg/matrix.hpp"

namespace fdeg {

enum class MatrixFamily { SL, Sp4, OmegaPlus };

std::string family_name(MatrixFamily f);

/// SL(d,q); Sp(4,q) with q = 2^e, e >= 2; Omega+(2d,3) with d >= 4.
struct FamilyParams {
  MatrixFamily family = MatrixFamily::SL;
  std::size_t d = 0;  // SL: dimension; OmegaPlus: half the dimension; Sp4: 2
  FieldPtr field;

  std::size_t dimension() const { return family == MatrixFamily::SL ? d : 2 * d; }
};

/// Validates parameters; throws InputError when they are out of range.
FamilyParams make_family(MatrixFamily family, std::size_t d, std::uint32_t p, std::uint32_t e);

/// One member of the standard generating set, with the root data that produced it.
struct RootElement {
  Matrix matrix;
  int type;      // 1-based generator type within the family
  int i, j;      // signed 1-based indices
  FE beta;
};

/// The standard generating set L, in a fixed deterministic order.
///   SL(d,q):       I + b e_{i,j}, i != j, b != 0
///   Sp(4,2^e):     the six transvection types, basis ordered 1, -1, 2, -2
///   Omega+(2d,3):  the four types, basis ordered 1..d, -1..-d
std::vector<RootElement> standard_root_elements(const FamilyParams& params);
std::vector<Matrix> standard_generators(const FamilyParams& params);

/// Gram matrix of the preserved form (Sp4, OmegaPlus); InputError for SL.
Matrix form_matrix(const FamilyParams& params);

/// Determinant 1 and, where relevant, T^t X T == X.
bool in_family(const FamilyParams& params, const Matrix& t);

/// Basis of the solutions F of F U_j = V_j F for all j.
std::vector<Matrix> commutation_nullspace(const std::vector<Matrix>& gens, const std::vector<Matrix>& images);

/// First basis solution of F U_j = V_j F.  A nonzero solution must be
/// invertible when both representations are irreducible; that is checked and
/// a violation raises Error.
std::optional<Matrix> solve_commutation(const std::vector<Matrix>& gens, const std::vector<Matrix>& images);

/// Index map of L under the graph automorphism.  SL: I + b e_{i,j} -> I - b e_{j,i}.  Sp4: short and long
/// root subgroups are exchanged, long root parameters are squared.
std::vector<std::size_t> graph_permutation(const FamilyParams& params);

/// Index map of L under the field automorphism x -> x^(p^t).
std::vector<std::size_t> frobenius_permutation(const FamilyParams& params, long t);

/// Position of m in L, if present.
std::optional<std::size_t> index_in_generators(const std::vector<Matrix>& gens, const Matrix& m);

}  // namespace fdeg
