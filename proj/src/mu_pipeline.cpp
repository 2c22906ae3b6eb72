#include "fdeg/mu_pipeline.hpp"

#include <mutex>

#include "fdeg/error.hpp"
#include "fdeg/oracle.hpp"
#include "json.hpp"

namespace fdeg {

namespace {

struct Sym6Subgroups {
  CayleyGroup group;
  std::vector<SubgroupClass> classes;
};

const Sym6Subgroups& sym6_subgroups(std::size_t limit) {
  static std::optional<Sym6Subgroups> cache;
  static std::once_flag once;
  std::call_once(once, [&] {
    auto c = list_elements(PermGroup::symmetric(6), 720);
    auto classes = subgroup_classes(c, limit);
    cache.emplace(Sym6Subgroups{std::move(c), std::move(classes)});
  });
  return *cache;
}

// The matrix family a hint must use for a given simple group.
struct ExpectedFamily {
  MatrixFamily family;
  std::size_t dimension;
  std::uint64_t q;
};

void check_hint_family(const RecognitionHint& hint, const ExpectedFamily& want, const SimpleName& name) {
  const auto& fam = hint.family;
  if (fam.family != want.family || fam.dimension() != want.dimension || fam.field->q() != want.q)
    throw InputError("hint describes " + family_name(fam.family) + "(" + std::to_string(fam.dimension()) + "," +
                     std::to_string(fam.field->q()) + ") but the factor is " + name.to_string());
}

Matrix scaled_into_family(const FamilyParams& fam, const Matrix& m) {
  const Field& f = *fam.field;
  for (FE c = 1; c < f.q(); ++c) {
    Matrix s = m.scaled(c);
    if (in_family(fam, s)) return s;
  }
  throw InputError("transported element has no representative in the matrix group");
}

// Whether the automorphisms induced by N_G(S1) all avoid the graph type.
bool hinted_in_gamma(const PermGroup& s1, const AlmostSimpleData& a, const RecognitionHint& hint) {
  std::vector<MatrixAut> lifted;
  for (const auto& lambda : transported_automorphisms(s1, hint, a.normalizer.generators()))
    lifted.push_back(lift_aut(lambda));
  return subgroup_in_gamma(lifted);
}

nlohmann::ordered_json big(const BigInt& x) {
  if (x >= 0 && x <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(x);
  return x.str();
}

BigInt unbig(const nlohmann::ordered_json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::uint64_t>());
}

}  // namespace

AlmostSimpleData induced_aut_group(const PermGroup& g, const PermGroup& s1, const std::vector<PermGroup>& factors) {
  AlmostSimpleData out;
  out.normalizer = normalizer_of_factor(g, s1, factors);
  out.centralizer = centralizer_of_normal(out.normalizer, s1);
  out.a_order = out.normalizer.order() / out.centralizer.order();
  out.outer_order = out.a_order / s1.order();
  return out;
}

std::vector<ProjectiveAut> transported_automorphisms(const PermGroup& s1, const RecognitionHint& hint,
                                                      const std::vector<Permutation>& by) {
  const auto& fam = hint.family;
  if (hint.generators.empty() || hint.generators.size() != hint.images.size())
    throw InputError("hint needs matching, nonempty generator and image lists");
  for (const auto& x : hint.generators)
    if (x.degree() != s1.degree() || !s1.contains(x)) throw InputError("hint generator is not in the factor");
  PermGroup source(s1.degree(), hint.generators);
  if (!source.same_group(s1)) throw InputError("hint generators do not generate the factor");
  std::vector<Permutation> on_points;
  for (const auto& m : hint.images) {
    if (!in_family(fam, m)) throw InputError("hint image is not in the matrix group");
    on_points.push_back(act_on_points(m));
  }
  PermGroup target(on_points[0].degree(), on_points);
  Homomorphism iso(source, target, on_points);
  if (iso.graph_order() != source.order() || target.order() != source.order())
    throw InputError("hint does not define an isomorphism onto the projective group");

  const auto gens = standard_generators(fam);
  std::vector<Permutation> preimages;
  for (const auto& u : gens) preimages.push_back(iso.preimage(act_on_points(u)));
  std::vector<ProjectiveAut> out;
  for (const auto& x : by) {
    ProjectiveAut lambda{fam, {}};
    for (const auto& s : preimages) {
      auto z = iso.image(conjugate(s, x));
      lambda.images.push_back(scaled_into_family(fam, matrix_from_point_action(fam.field, fam.dimension(), z)));
    }
    out.push_back(std::move(lambda));
  }
  return out;
}

bool embeds_in_sym6(const CayleyGroup& a, const PipelineOptions& opt) {
  if (a.order() > 720 || 720 % a.order() != 0) return false;
  const auto& s6 = sym6_subgroups(opt.subgroup_limit);
  for (const auto& cls : s6.classes) {
    if (cls.subgroup_order != a.order()) continue;
    if (isomorphism_search(a, subgroup_as_group(s6.group, cls.members[0]), opt.aut_limit)) return true;
  }
  return false;
}

DispatchResult dispatch_table(const SimpleName& name, const PermGroup& s1, const AlmostSimpleData& a,
                              const RecognitionHint* hint, const PipelineOptions& opt) {
  const std::uint64_t mu_s = mu_simple(name);
  const BigInt& outer = a.outer_order;
  const auto div = [&](int k) { return outer % k == 0; };
  const std::string s = name.to_string();
  DispatchResult r{mu_s, "default", "A = S", false};
  if (outer != 1) r.detail = "no table row applies to " + s + " with |A/S| = " + outer.str();
  const auto row = [&](int n, std::uint64_t mu, std::string why) {
    return DispatchResult{mu, "row " + std::to_string(n), std::move(why), false};
  };
  const auto need_hint = [&](int n) {
    if (!hint)
      throw HintRequired("deciding row " + std::to_string(n) + " for " + s + " with |A/S| = " + outer.str() +
                         " needs a recognition hint");
  };
  const SimpleFamily fam = name.family;

  if (name == parse_simple_name("Alt(6)")) {
    if (outer == 1) return r;
    if (a.a_order > opt.almost_simple_limit) throw ResourceError("almost simple group too large to list");
    auto cayley = list_elements(QuotientGroup(a.normalizer, a.centralizer), opt.almost_simple_limit);
    if (embeds_in_sym6(cayley, opt)) {
      r.detail = "A embeds in Sym(6)";
      return r;
    }
    return row(1, 10, "A does not embed in Sym(6)");
  }
  if (name == parse_simple_name("PSL(2,7)") && outer == 2) return row(2, 8, "A = PGL(2,7)");
  if (name == parse_simple_name("M12") && outer == 2) return row(3, 2 * mu_s, "A = Aut(M12)");
  if (name == parse_simple_name("ON") && outer == 2) return row(4, 2 * mu_s, "A = Aut(O'N)");
  if (name == parse_simple_name("PSU(3,5)") && div(3)) return row(5, 126, "3 divides |A/S|, so A is not in PSigmaU(3,5)");
  if (name == parse_simple_name("POmegaPlus(8,2)") && div(3)) return row(6, 3 * mu_s, "3 divides |A/S|");
  if (name == parse_simple_name("POmegaPlus(8,3)")) {
    if (div(12)) return row(8, 3360, "12 divides |A/S|");
    if (div(3)) return row(7, 3 * mu_s, "3 divides |A/S| and 12 does not");
    if (outer == 1) return r;
    throw Unsupported("POmegaPlus(8,3) with |A/S| = " + outer.str() +
                      ": containment in a conjugate of PO+(8,3) under triality is not decided");
  }
  if (name == parse_simple_name("G2(3)") && outer == 2) return row(9, 2 * mu_s, "A = Aut(G2(3))");
  if (fam == SimpleFamily::POmegaPlus && name.d == 8 && name.q >= 4) {
    if (div(3)) return row(10, 3 * mu_s, "3 divides |A/S|");
    return r;
  }
  if (fam == SimpleFamily::PSL && name.d >= 3) {
    if (outer == 1) return r;
    need_hint(11);
    check_hint_family(*hint, {MatrixFamily::SL, static_cast<std::size_t>(name.d), name.q}, name);
    if (hinted_in_gamma(s1, a, *hint)) {
      r.detail = "every generator of A is free of the graph automorphism";
      r.hint_used = true;
      return r;
    }
    auto out = row(11, 2 * mu_s, "a generator of A involves the graph automorphism");
    out.hint_used = true;
    return out;
  }
  if (fam == SimpleFamily::PSp && name.d == 4 && name.q % 2 == 0) {
    if (outer == 1) return r;
    need_hint(12);
    check_hint_family(*hint, {MatrixFamily::Sp4, 4, name.q}, name);
    if (hinted_in_gamma(s1, a, *hint)) {
      r.detail = "every generator of A is free of the graph automorphism";
      r.hint_used = true;
      return r;
    }
    auto out = row(12, 2 * mu_s, "a generator of A involves the graph automorphism");
    out.hint_used = true;
    return out;
  }
  if (fam == SimpleFamily::POmegaPlus && name.q == 3 && name.d > 8) {
    if (outer == 1 || div(3)) return r;
    need_hint(13);
    check_hint_family(*hint, {MatrixFamily::OmegaPlus, static_cast<std::size_t>(name.d), 3}, name);
    if (hinted_in_gamma(s1, a, *hint)) {
      r.detail = "every generator of A is induced by an element of PO+";
      r.hint_used = true;
      return r;
    }
    const std::uint64_t d = name.d / 2;
    std::uint64_t p1 = 1;
    for (std::uint64_t i = 0; i + 1 < d; ++i) p1 *= 3;
    auto out = row(13, (p1 * 3 - 1) * (p1 + 1) / 2, "a generator of A fails the form test");
    out.hint_used = true;
    return out;
  }
  if (fam == SimpleFamily::ExcLie && outer != 1 &&
      ((name.tag == "G2" && name.q != 3 && name.q % 3 == 0) || (name.tag == "F4" && name.q % 2 == 0) ||
       name.tag == "E6")) {
    throw Unsupported("exceptional group " + s + " with |A/S| = " + outer.str() + " is not decided");
  }
  return r;
}

MuCertificate mu_certificate(const PermGroup& g, const std::vector<RecognitionHint>& hints,
                             const PipelineOptions& opt) {
  MuCertificate cert;
  cert.group_order = g.order();
  cert.degree = g.degree();
  for (const auto& h : hints)
    if (h.degree != g.degree()) throw InputError("hint degree does not match the group");
  auto dec = socle_fitting_free(g, opt.descent);
  cert.socle_order = dec.socle.order();
  cert.probabilistic_minimality = dec.probabilistic_minimality;
  for (const auto& f : dec.factors) cert.factor_orders.push_back(f.order());

  bool complete = true;
  std::uint64_t total = 0;
  for (const auto& orbit : dec.minimal_normals) {
    MinimalNormalRecord rec;
    rec.factor_indices = orbit;
    rec.ell = orbit.size();
    std::size_t chosen = orbit.front();
    const RecognitionHint* hint = nullptr;
    for (const auto& h : hints) {
      PermGroup hg(g.degree(), h.generators);
      for (auto i : orbit) {
        if (!hint && dec.factors[i].same_group(hg)) {
          chosen = i;
          hint = &h;
        }
      }
    }
    const PermGroup& s1 = dec.factors[chosen];
    rec.factor_order = s1.order();
    try {
      auto name = name_simple(s1, opt.descent.seed);
      rec.factor_name = name.to_string();
      auto a = induced_aut_group(g, s1, dec.factors);
      rec.a_order = a.a_order;
      rec.outer_order = a.outer_order;
      auto d = dispatch_table(name, s1, a, hint, opt);
      rec.mu = d.mu;
      rec.rule = d.rule;
      rec.detail = d.detail;
      rec.hint_used = d.hint_used;
      cert.hint_used = cert.hint_used || d.hint_used;
      total += rec.ell * d.mu;
    } catch (const HintRequired& e) {
      complete = false;
      rec.rule = "hint required";
      rec.detail = e.what();
      if (cert.status == "ok") {
        cert.status = "hint-required";
        cert.message = e.what();
      }
    } catch (const Unsupported& e) {
      complete = false;
      rec.rule = "unsupported";
      rec.detail = e.what();
      if (cert.status != "unsupported") {
        cert.status = "unsupported";
        cert.message = e.what();
      }
    }
    cert.records.push_back(std::move(rec));
  }
  if (complete) cert.total = total;
  return cert;
}

MuCertificate mu_fitting_free(const PermGroup& g, const std::vector<RecognitionHint>& hints,
                              const PipelineOptions& opt) {
  auto cert = mu_certificate(g, hints, opt);
  if (cert.status == "hint-required") throw HintRequired(cert.message);
  if (cert.status == "unsupported") throw Unsupported(cert.message);
  return cert;
}

std::string MuCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["group_order"] = big(group_order);
  j["degree"] = degree;
  j["socle"] = {{"order", big(socle_order)}, {"factor_orders", nlohmann::ordered_json::array()}};
  for (const auto& f : factor_orders) j["socle"]["factor_orders"].push_back(big(f));
  j["records"] = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json x;
    x["factors"] = r.factor_indices;
    x["ell"] = r.ell;
    x["factor_name"] = r.factor_name;
    x["factor_order"] = big(r.factor_order);
    x["a_order"] = big(r.a_order);
    x["a_over_s"] = big(r.outer_order);
    x["rule"] = r.rule;
    x["detail"] = r.detail;
    x["mu"] = r.mu ? nlohmann::ordered_json(*r.mu) : nlohmann::ordered_json(nullptr);
    x["hint_used"] = r.hint_used;
    j["records"].push_back(std::move(x));
  }
  j["total"] = total ? nlohmann::ordered_json(*total) : nlohmann::ordered_json(nullptr);
  j["flags"] = {{"probabilistic_minimality", probabilistic_minimality},
                {"hint_used", hint_used},
                {"unsupported_case", status != "ok"}};
  j["status"] = status;
  if (!message.empty()) j["message"] = message;
  return j.dump(2) + "\n";
}

MuCertificate MuCertificate::from_json(const std::string& text) {
  MuCertificate c;
  try {
    auto j = nlohmann::ordered_json::parse(text);
    c.group_order = unbig(j.at("group_order"));
    c.degree = j.at("degree").get<std::size_t>();
    c.socle_order = unbig(j.at("socle").at("order"));
    for (const auto& f : j.at("socle").at("factor_orders")) c.factor_orders.push_back(unbig(f));
    for (const auto& x : j.at("records")) {
      MinimalNormalRecord r;
      r.factor_indices = x.at("factors").get<std::vector<std::size_t>>();
      r.ell = x.at("ell").get<std::size_t>();
      r.factor_name = x.at("factor_name").get<std::string>();
      r.factor_order = unbig(x.at("factor_order"));
      r.a_order = unbig(x.at("a_order"));
      r.outer_order = unbig(x.at("a_over_s"));
      r.rule = x.at("rule").get<std::string>();
      r.detail = x.at("detail").get<std::string>();
      if (!x.at("mu").is_null()) r.mu = x.at("mu").get<std::uint64_t>();
      r.hint_used = x.at("hint_used").get<bool>();
      c.records.push_back(std::move(r));
    }
    if (!j.at("total").is_null()) c.total = j.at("total").get<std::uint64_t>();
    c.probabilistic_minimality = j.at("flags").at("probabilistic_minimality").get<bool>();
    c.hint_used = j.at("flags").at("hint_used").get<bool>();
    c.status = j.at("status").get<std::string>();
    if (j.contains("message")) c.message = j.at("message").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed certificate: ") + e.what());
  }
  return c;
}

std::uint64_t mu_small_quotient(const QuotientGroup& q, std::size_t bound, std::size_t subgroup_limit) {
  if (q.order() > bound) throw ResourceError("quotient of order " + q.order().str() + " exceeds the bound");
  if (q.order() == 1) return 0;
  return mu_oracle(list_elements(q, bound), subgroup_limit).mu;
}

}  // namespace fdeg
