#include "fdeg/aut_lift.hpp"

#include "fdeg/error.hpp"

namespace fdeg {

namespace {

bool has_order(const Matrix& u, std::uint64_t k) {
  if (u.is_identity()) return false;
  Matrix x = u;
  for (std::uint64_t i = 1; i < k; ++i) x = x * u;
  return x.is_identity();
}

MatrixAut lift_checked(const ProjectiveAut& lambda) {
  const auto& fam = lambda.family;
  const auto gens = standard_generators(fam);
  if (lambda.images.size() != gens.size()) throw InputError("automorphism must give one image per generator");
  MatrixAut alpha{fam, {}};
  for (const auto& v : lambda.images) {
    if (v.rows() != fam.dimension() || !(v.field() == *fam.field)) throw InputError("image has the wrong shape");
    auto hits = order_p_in_coset(fam, v);
    if (hits.empty()) throw InputError("image coset has no element of order p; not an automorphism");
    if (hits.size() > 1) throw Error("image coset has several elements of order p");
    alpha.images.push_back(hits.front());
  }
  return alpha;
}

std::vector<std::size_t> inverse_map(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) inv[p[k]] = k;
  return inv;
}

}  // namespace

std::size_t omega_center_size(std::size_t d) {
  // 4 divides 3^d - 1 exactly when d is even
  return d % 2 == 0 ? 2 : 1;
}

std::vector<Matrix> center_elements(const FamilyParams& fam) {
  const Field& f = *fam.field;
  const std::size_t n = fam.dimension();
  std::vector<Matrix> out;
  switch (fam.family) {
    case MatrixFamily::SL:
      for (FE c = 1; c < f.q(); ++c)
        if (f.pow(c, n) == 1) out.push_back(Matrix::scalar(fam.field, n, c));
      break;
    case MatrixFamily::Sp4:
      out.push_back(Matrix::identity(fam.field, n));
      break;
    case MatrixFamily::OmegaPlus: {
      // Scalars preserving the form are +-I; -I lies in Omega exactly when the center has order 2.
      out.push_back(Matrix::identity(fam.field, n));
      Matrix minus = Matrix::scalar(fam.field, n, f.neg(1));
      auto x = form_matrix(fam);
      if (!(minus.transpose() * x * minus == x)) throw Error("-I does not preserve the form");
      if (omega_center_size(fam.d) == 2) out.push_back(minus);
      break;
    }
  }
  return out;
}

bool projectively_equal(const FamilyParams& fam, const Matrix& a, const Matrix& b) {
  const Matrix d = a * b.inverse();
  for (const auto& z : center_elements(fam))
    if (d == z) return true;
  return false;
}

std::vector<Matrix> order_p_in_coset(const FamilyParams& fam, const Matrix& v) {
  std::vector<Matrix> out;
  for (const auto& z : center_elements(fam)) {
    Matrix w = v * z;
    if (has_order(w, fam.field->p())) out.push_back(w);
  }
  return out;
}

MatrixAut lift_psl_aut(const ProjectiveAut& lambda) {
  const auto& fam = lambda.family;
  if (fam.family != MatrixFamily::SL) throw InputError("lift_psl_aut needs an SL family");
  const auto q = fam.field->q();
  if (fam.d < 3 || (q == 2 && (fam.d == 3 || fam.d == 4)))
    throw InputError("lifting needs d >= 3 and (d,q) other than (3,2), (4,2)");
  for (const auto& v : lambda.images)
    if (v.determinant() != 1) throw InputError("image representative is not in SL");
  return lift_checked(lambda);
}

MatrixAut lift_omega_aut(const ProjectiveAut& lambda) {
  if (lambda.family.family != MatrixFamily::OmegaPlus) throw InputError("lift_omega_aut needs an OmegaPlus family");
  return lift_checked(lambda);
}

MatrixAut lift_aut(const ProjectiveAut& lambda) {
  switch (lambda.family.family) {
    case MatrixFamily::SL: return lift_psl_aut(lambda);
    case MatrixFamily::OmegaPlus: return lift_omega_aut(lambda);
    case MatrixFamily::Sp4: break;
  }
  return MatrixAut{lambda.family, lambda.images};
}

ProjectiveAut project(const MatrixAut& alpha) { return ProjectiveAut{alpha.family, alpha.images}; }

MatrixAut inner_aut(const FamilyParams& fam, const Matrix& u0) {
  const Matrix inv = u0.inverse();
  MatrixAut a{fam, {}};
  for (const auto& u : standard_generators(fam)) a.images.push_back(u0 * u * inv);
  return a;
}

MatrixAut frobenius_aut(const FamilyParams& fam, long t) {
  MatrixAut a{fam, {}};
  for (const auto& u : standard_generators(fam)) a.images.push_back(u.frobenius(t));
  return a;
}

MatrixAut graph_aut(const FamilyParams& fam) {
  const auto gens = standard_generators(fam);
  MatrixAut a{fam, {}};
  for (auto k : graph_permutation(fam)) a.images.push_back(gens[k]);
  return a;
}

InnerCheck is_inner_or_diagonal(const MatrixAut& alpha) {
  auto f = solve_commutation(standard_generators(alpha.family), alpha.images);
  return {f.has_value(), f};
}

AutClassification classify_aut(const MatrixAut& alpha) {
  const auto& fam = alpha.family;
  const auto gens = standard_generators(fam);
  if (alpha.images.size() != gens.size()) throw InputError("automorphism must give one image per generator");
  AutClassification out;
  if (fam.family == MatrixFamily::OmegaPlus) {
    auto f = solve_commutation(gens, alpha.images);
    if (!f) throw Error("no intertwiner for an Omega+ automorphism");
    const Matrix x = form_matrix(fam);
    out.t_prime = 1;
    out.witness_f = f;
    out.form_scalar = proportional(*f * x * f->transpose(), x);
    // F is defined up to a scalar s, which changes c by s^2; only square c can be normalized to 1.
    out.in_gamma = out.form_scalar && fam.field->is_square(*out.form_scalar);
    out.t_doubleprime = out.in_gamma ? 0 : 1;
    return out;
  }
  if (fam.family == MatrixFamily::SL && fam.d < 3) throw InputError("classification needs d >= 3 for SL");
  const long e = fam.field->e();
  const auto ginv = inverse_map(graph_permutation(fam));
  int passes = 0;
  for (int t2 = 0; t2 <= 1; ++t2) {
    for (long t1 = 1; t1 <= e; ++t1) {
      // alpha'(U_k) = alpha(f^-t1(g^-t2(U_k)))
      const auto fr = frobenius_permutation(fam, -t1);
      MatrixAut twisted{fam, {}};
      for (std::size_t k = 0; k < gens.size(); ++k) twisted.images.push_back(alpha.images[fr[t2 ? ginv[k] : k]]);
      auto check = is_inner_or_diagonal(twisted);
      if (!check.inner_or_diagonal) continue;
      if (++passes > 1) throw Error("automorphism classification is not unique");
      out.t_prime = t1;
      out.t_doubleprime = t2;
      out.witness_f = check.f;
      out.in_gamma = t2 == 0;
    }
  }
  if (passes == 0) throw Error("no field and graph twist makes the automorphism inner or diagonal");
  return out;
}

bool subgroup_in_gamma(const std::vector<MatrixAut>& generators) {
  for (const auto& a : generators)
    if (!classify_aut(a).in_gamma) return false;
  return true;
}

}  // namespace fdeg
