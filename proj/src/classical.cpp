#include "fdeg/classical.hpp"

#include <map>
#include <tuple>

#include "fdeg/error.hpp"

namespace fdeg {

std::string family_name(MatrixFamily f) {
  switch (f) {
    case MatrixFamily::SL: return "SL";
    case MatrixFamily::Sp4: return "Sp4";
    case MatrixFamily::OmegaPlus: return "OmegaPlus";
  }
  return "?";
}

FamilyParams make_family(MatrixFamily family, std::size_t d, std::uint32_t p, std::uint32_t e) {
  FamilyParams params{family, d, make_field(p, e)};
  switch (family) {
    case MatrixFamily::SL:
      if (d < 2) throw InputError("SL needs d >= 2");
      break;
    case MatrixFamily::Sp4:
      if (p != 2 || e < 2) throw InputError("Sp(4,q) is supported for q = 2^e with e >= 2");
      params.d = 2;
      break;
    case MatrixFamily::OmegaPlus:
      if (p != 3 || e != 1 || d < 4) throw InputError("Omega+(2d,q) is supported for q = 3 and d >= 4");
      break;
  }
  return params;
}

namespace {

// Row/column position of a signed 1-based index.
std::size_t position(const FamilyParams& params, int i) {
  switch (params.family) {
    case MatrixFamily::SL:
      return static_cast<std::size_t>(i - 1);
    case MatrixFamily::Sp4:
      return i > 0 ? static_cast<std::size_t>(2 * (i - 1)) : static_cast<std::size_t>(2 * (-i - 1) + 1);
    case MatrixFamily::OmegaPlus:
      return i > 0 ? static_cast<std::size_t>(i - 1) : params.d + static_cast<std::size_t>(-i - 1);
  }
  return 0;
}

struct Builder {
  const FamilyParams& params;
  Matrix m;
  explicit Builder(const FamilyParams& p) : params(p), m(Matrix::identity(p.field, p.dimension())) {}
  // m += s * e_{i,j}
  Builder& add(FE s, int i, int j) {
    FE& x = m.at(position(params, i), position(params, j));
    x = params.field->add(x, s);
    return *this;
  }
};

}  // namespace

std::vector<RootElement> standard_root_elements(const FamilyParams& params) {
  const Field& f = *params.field;
  std::vector<RootElement> out;
  auto neg = [&](FE x) { return f.neg(x); };
  switch (params.family) {
    case MatrixFamily::SL: {
      int d = static_cast<int>(params.d);
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
          if (i == j) continue;
          for (FE b = 1; b < f.q(); ++b) out.push_back({Builder(params).add(b, i, j).m, 1, i, j, b});
        }
      break;
    }
    case MatrixFamily::Sp4: {
      const int i = 1, j = 2;
      for (FE b = 1; b < f.q(); ++b) out.push_back({Builder(params).add(b, i, j).add(neg(b), -j, -i).m, 1, i, j, b});
      for (FE b = 1; b < f.q(); ++b) out.push_back({Builder(params).add(neg(b), -i, -j).add(b, j, i).m, 2, i, j, b});
      for (FE b = 1; b < f.q(); ++b) out.push_back({Builder(params).add(b, i, -j).add(b, j, -i).m, 3, i, j, b});
      for (FE b = 1; b < f.q(); ++b) out.push_back({Builder(params).add(b, -i, j).add(b, -j, i).m, 4, i, j, b});
      for (int k = 1; k <= 2; ++k)
        for (FE b = 1; b < f.q(); ++b) out.push_back({Builder(params).add(b, k, -k).m, 5, k, -k, b});
      for (int k = 1; k <= 2; ++k)
        for (FE b = 1; b < f.q(); ++b) out.push_back({Builder(params).add(b, -k, k).m, 6, -k, k, b});
      break;
    }
    case MatrixFamily::OmegaPlus: {
      int d = static_cast<int>(params.d);
      for (int type = 1; type <= 4; ++type)
        for (int i = 1; i <= d; ++i)
          for (int j = i + 1; j <= d; ++j)
            for (FE b = 1; b < f.q(); ++b) {
              Builder x(params);
              switch (type) {
                case 1: x.add(b, i, j).add(neg(b), -j, -i); break;
                case 2: x.add(neg(b), -i, -j).add(b, j, i); break;
                case 3: x.add(b, i, -j).add(neg(b), j, -i); break;
                case 4: x.add(neg(b), -i, j).add(b, -j, i); break;
              }
              out.push_back({x.m, type, i, j, b});
            }
      break;
    }
  }
  return out;
}

std::vector<Matrix> standard_generators(const FamilyParams& params) {
  std::vector<Matrix> out;
  for (auto& r : standard_root_elements(params)) out.push_back(std::move(r.matrix));
  return out;
}

Matrix form_matrix(const FamilyParams& params) {
  const Field& f = *params.field;
  Matrix x(params.field, params.dimension(), params.dimension());
  switch (params.family) {
    case MatrixFamily::SL:
      throw InputError("SL preserves no form");
    case MatrixFamily::Sp4:
      for (std::size_t k = 0; k < 2; ++k) {
        x.at(2 * k, 2 * k + 1) = 1;
        x.at(2 * k + 1, 2 * k) = f.neg(1);
      }
      break;
    case MatrixFamily::OmegaPlus:
      for (std::size_t k = 0; k < params.d; ++k) {
        x.at(k, params.d + k) = 1;
        x.at(params.d + k, k) = 1;
      }
      break;
  }
  return x;
}

bool in_family(const FamilyParams& params, const Matrix& t) {
  if (t.rows() != params.dimension() || t.cols() != params.dimension()) return false;
  if (t.determinant() != 1) return false;
  if (params.family == MatrixFamily::SL) return true;
  Matrix x = form_matrix(params);
  return t.transpose() * x * t == x;
}

std::vector<Matrix> commutation_nullspace(const std::vector<Matrix>& gens, const std::vector<Matrix>& images) {
  if (gens.size() != images.size() || gens.empty()) throw InputError("commutation system needs matching nonempty lists");
  const std::size_t n = gens[0].rows();
  const FieldPtr& fp = gens[0].field_ptr();
  const Field& f = *fp;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (const Matrix* m : {&gens[k], &images[k]}) {
      if (m->rows() != n || m->cols() != n) throw InputError("commutation system dimension mismatch");
    }
  }
  // Unknown F[a][b] is variable a*n + b.  Row for (k,i,j): (F U)_{ij} - (V F)_{ij}.
  Matrix system(fp, gens.size() * n * n, n * n);
  std::size_t row = 0;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix& u = gens[k];
    const Matrix& v = images[k];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t t = 0; t < n; ++t) {
          FE& a = system.at(row, i * n + t);
          a = f.add(a, u.at(t, j));
          FE& b = system.at(row, t * n + j);
          b = f.sub(b, v.at(i, t));
        }
      }
    }
  }
  std::vector<Matrix> out;
  for (auto& vec : nullspace(system)) out.emplace_back(fp, n, n, std::move(vec));
  return out;
}

std::optional<Matrix> solve_commutation(const std::vector<Matrix>& gens, const std::vector<Matrix>& images) {
  auto basis = commutation_nullspace(gens, images);
  if (basis.empty()) return std::nullopt;
  if (basis.front().determinant() == 0) throw Error("nonzero intertwiner is singular");
  return basis.front();
}

std::optional<std::size_t> index_in_generators(const std::vector<Matrix>& gens, const Matrix& m) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i] == m) return i;
  }
  return std::nullopt;
}

namespace {

using RootKey = std::tuple<int, int, int, FE>;

std::map<RootKey, std::size_t> root_index(const std::vector<RootElement>& roots) {
  std::map<RootKey, std::size_t> idx;
  for (std::size_t k = 0; k < roots.size(); ++k) idx[{roots[k].type, roots[k].i, roots[k].j, roots[k].beta}] = k;
  return idx;
}

}  // namespace

std::vector<std::size_t> graph_permutation(const FamilyParams& params) {
  const Field& f = *params.field;
  auto roots = standard_root_elements(params);
  auto idx = root_index(roots);
  std::vector<std::size_t> out(roots.size());
  switch (params.family) {
    case MatrixFamily::SL:
      for (std::size_t k = 0; k < roots.size(); ++k) out[k] = idx.at({1, roots[k].j, roots[k].i, f.neg(roots[k].beta)});
      break;
    case MatrixFamily::Sp4:
      // Roots: 1: e1-e2, 2: e2-e1, 3: e1+e2, 4: -e1-e2, 5: 2e_i, 6: -2e_i.
      for (std::size_t k = 0; k < roots.size(); ++k) {
        const auto& r = roots[k];
        RootKey target;
        switch (r.type) {
          case 1: target = {5, 2, -2, r.beta}; break;
          case 2: target = {6, -2, 2, r.beta}; break;
          case 3: target = {5, 1, -1, r.beta}; break;
          case 4: target = {6, -1, 1, r.beta}; break;
          case 5: target = {r.i == 1 ? 3 : 1, 1, 2, f.mul(r.beta, r.beta)}; break;
          default: target = {r.j == 1 ? 4 : 2, 1, 2, f.mul(r.beta, r.beta)}; break;
        }
        out[k] = idx.at(target);
      }
      break;
    case MatrixFamily::OmegaPlus:
      throw InputError("no graph automorphism is used for Omega+(2d,3)");
  }
  return out;
}

std::vector<std::size_t> frobenius_permutation(const FamilyParams& params, long t) {
  const Field& f = *params.field;
  auto roots = standard_root_elements(params);
  auto idx = root_index(roots);
  std::vector<std::size_t> out(roots.size());
  for (std::size_t k = 0; k < roots.size(); ++k) {
    out[k] = idx.at({roots[k].type, roots[k].i, roots[k].j, f.frobenius(roots[k].beta, t)});
  }
  return out;
}

}  // namespace fdeg
