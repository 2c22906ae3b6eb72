#include "fdeg/hint.hpp"

#include <fstream>
#include <sstream>

#include "fdeg/error.hpp"
#include "json.hpp"

namespace fdeg {

namespace {

MatrixFamily family_from_name(const std::string& s) {
  for (auto f : {MatrixFamily::SL, MatrixFamily::Sp4, MatrixFamily::OmegaPlus})
    if (family_name(f) == s) return f;
  throw InputError("unknown matrix family '" + s + "'");
}

}  // namespace

std::string hint_to_json(const RecognitionHint& h) {
  const Field& f = *h.family.field;
  nlohmann::ordered_json j;
  j["factor_index"] = h.factor_index;
  j["family"] = family_name(h.family.family);
  j["dimension"] = h.family.dimension();
  j["q"] = f.q();
  j["field_convention"] = "lex-least-irreducible";
  j["degree"] = h.degree;
  j["generators"] = nlohmann::ordered_json::array();
  for (const auto& g : h.generators) j["generators"].push_back(g.to_cycles());
  j["generator_images"] = nlohmann::ordered_json::array();
  for (const auto& m : h.images) {
    auto entries = nlohmann::ordered_json::array();
    for (FE x : m.entries()) entries.push_back(f.coefficients(x));
    j["generator_images"].push_back(entries);
  }
  return j.dump(1) + "\n";
}

RecognitionHint hint_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("hint is not valid JSON: ") + e.what());
  }
  try {
    if (j.value("field_convention", "lex-least-irreducible") != "lex-least-irreducible")
      throw InputError("unsupported field convention in hint");
    RecognitionHint h;
    h.factor_index = j.at("factor_index").get<std::size_t>();
    const auto family = family_from_name(j.at("family").get<std::string>());
    const auto dim = j.at("dimension").get<std::size_t>();
    const auto q = j.at("q").get<std::uint32_t>();
    std::uint32_t p = 2;
    while (q % p) ++p;
    std::uint32_t e = 0;
    for (std::uint32_t r = q; r > 1; r /= p) {
      if (r % p) throw InputError("hint field order is not a prime power");
      ++e;
    }
    if (family == MatrixFamily::Sp4 && dim != 4) throw InputError("Sp4 hints have dimension 4");
    if (family == MatrixFamily::OmegaPlus && dim % 2) throw InputError("OmegaPlus hints have even dimension");
    h.family = make_family(family, family == MatrixFamily::SL ? dim : dim / 2, p, e);
    h.degree = j.at("degree").get<std::size_t>();
    for (const auto& g : j.at("generators")) h.generators.push_back(parse_permutation(g.get<std::string>(), h.degree));
    const Field& f = *h.family.field;
    for (const auto& m : j.at("generator_images")) {
      if (m.size() != dim * dim) throw InputError("hint matrix has the wrong number of entries");
      std::vector<FE> entries;
      for (const auto& c : m) entries.push_back(f.from_coefficients(c.get<std::vector<std::uint32_t>>()));
      h.images.emplace_back(h.family.field, dim, dim, std::move(entries));
    }
    if (h.images.size() != h.generators.size()) throw InputError("hint has unequal generator and image counts");
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed hint: ") + e.what());
  }
}

RecognitionHint read_hint_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return hint_from_json(buf.str());
}

}  // namespace fdeg
