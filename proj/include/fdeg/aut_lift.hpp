#pragma once

#include <optional>
#include <vector>

#include "fdeg/classical.hpp"

namespace fdeg {

/// An automorphism of the matrix group given on the standard generating set:
/// images[k] is the image of standard_generators(family)[k].
struct MatrixAut {
  FamilyParams family;
  std::vector<Matrix> images;
};

/// An automorphism of the projective group given on the cosets U_k Z:
/// images[k] is any representative of the image coset.
struct ProjectiveAut {
  FamilyParams family;
  std::vector<Matrix> images;
};

/// Scalar matrices of the family (the center Z); {I} for Sp(4,2^e).
std::vector<Matrix> center_elements(const FamilyParams& family);

/// a b^-1 lies in Z.
bool projectively_equal(const FamilyParams& family, const Matrix& a, const Matrix& b);

/// Elements of order p in the coset V Z.
std::vector<Matrix> order_p_in_coset(const FamilyParams& family, const Matrix& v);

/// SL(d,q), d >= 3, (d,q) not (3,2) or (4,2): alpha(U) is the unique element of
/// order p in lambda(U Z).  Throws InputError when a coset has none and Error
/// when one has several.
MatrixAut lift_psl_aut(const ProjectiveAut& lambda);
/// Omega+(2d,3), d >= 4: alpha(U) is the unique element of order 3 in lambda(U Z).
MatrixAut lift_omega_aut(const ProjectiveAut& lambda);
/// Dispatches on the family; Sp(4,2^e) has trivial center and is returned unchanged.
MatrixAut lift_aut(const ProjectiveAut& lambda);

/// The reduction of alpha modulo Z.
ProjectiveAut project(const MatrixAut& alpha);

/// U -> U0 U U0^-1.
MatrixAut inner_aut(const FamilyParams& family, const Matrix& u0);
/// U -> U^(p^t) entrywise.
MatrixAut frobenius_aut(const FamilyParams& family, long t);
/// The graph automorphism on the generating set (SL: transpose-inverse; Sp4: root exchange).
MatrixAut graph_aut(const FamilyParams& family);

struct InnerCheck {
  bool inner_or_diagonal = false;
  std::optional<Matrix> f;  // F with F U = alpha(U) F for all U in L
};

/// Solves the commutation system for alpha; a nonzero solution is invertible.
InnerCheck is_inner_or_diagonal(const MatrixAut& alpha);

struct AutClassification {
  long t_prime = 0;   // in [1, e]
  int t_doubleprime = 0;
  std::optional<Matrix> witness_f;
  bool in_gamma = false;
  std::optional<FE> form_scalar;  // OmegaPlus: c with F X F^t = c X
};

/// SL/Sp4: the unique (t', t'') with alpha o f^-t' o g^-t'' inner or diagonal.
/// OmegaPlus: F from the commutation system and the form test F X F^t = X.
/// Throws Error when no pair, or more than one pair, passes.
AutClassification classify_aut(const MatrixAut& alpha);

/// Every generator classifies with t'' = 0 (SL/Sp4) or passes the form test (OmegaPlus).
bool subgroup_in_gamma(const std::vector<MatrixAut>& generators);

/// Number of scalars in Omega+(2d,3): gcd(4, 3^d - 1) / 2.
std::size_t omega_center_size(std::size_t d);

}  // namespace fdeg
