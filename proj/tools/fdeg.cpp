// Command-line front end: fdeg <command> GROUPFILE [options]
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fdeg/error.hpp"
#include "fdeg/group_file.hpp"
#include "fdeg/mu_pipeline.hpp"
#include "fdeg/oracle.hpp"
#include "json.hpp"

using namespace fdeg;
using Json = nlohmann::ordered_json;

namespace {

struct Settings {
  std::string file;
  std::vector<std::string> hints;
  bool json = false;
  std::size_t limit = 2000;
  std::size_t subgroup_limit = kDefaultSubgroupLimit;
  std::uint64_t seed = 1;
};

Json big(const BigInt& x) {
  if (x <= BigInt(std::numeric_limits<std::uint64_t>::max())) return static_cast<std::uint64_t>(x);
  return x.str();
}

Json cycles(const std::vector<Permutation>& gens) {
  Json a = Json::array();
  for (const auto& g : gens) a.push_back(g.to_cycles());
  return a;
}

PipelineOptions pipeline_options(const Settings& s) {
  PipelineOptions opt;
  opt.descent.seed = s.seed;
  opt.almost_simple_limit = s.limit;
  opt.subgroup_limit = s.subgroup_limit;
  return opt;
}

int cmd_order(const Settings& s, std::ostream& out) {
  auto g = group_from_file(read_group_file(s.file));
  if (s.json)
    out << Json{{"degree", g.degree()}, {"order", big(g.order())}}.dump(2) << "\n";
  else
    out << "order " << g.order() << "\n";
  return 0;
}

int cmd_socle(const Settings& s, std::ostream& out, bool partition_only) {
  auto g = group_from_file(read_group_file(s.file));
  auto d = socle_fitting_free(g, pipeline_options(s).descent);
  if (s.json) {
    Json j;
    j["socle_order"] = big(d.socle.order());
    j["factors"] = Json::array();
    for (const auto& f : d.factors) j["factors"].push_back({{"order", big(f.order())}, {"generators", cycles(f.generators())}});
    j["minimal_normals"] = d.minimal_normals;
    j["fitting_free_certificate"] = d.fitting_free_certificate;
    j["probabilistic_minimality"] = d.probabilistic_minimality;
    out << j.dump(2) << "\n";
    return 0;
  }
  if (!partition_only) {
    out << "socle order " << d.socle.order() << "\n";
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
      out << "factor " << i << ": order " << d.factors[i].order() << "\n";
      for (const auto& x : d.factors[i].generators()) out << "  gen " << x.to_cycles() << "\n";
    }
    out << "fitting-free certificate: " << (d.fitting_free_certificate ? "yes" : "no") << "\n";
    if (d.probabilistic_minimality) out << "minimality checked on random elements only\n";
  }
  for (const auto& orbit : d.minimal_normals) {
    BigInt order = 1;
    for (auto i : orbit) order *= d.factors[i].order();
    out << "minimal normal subgroup: factors";
    for (auto i : orbit) out << " " << i;
    out << " (order " << order << ")\n";
  }
  return 0;
}

int cmd_recognize(const Settings& s, std::ostream& out) {
  auto g = group_from_file(read_group_file(s.file));
  auto name = name_simple(g, s.seed);
  if (s.json)
    out << Json{{"name", name.to_string()}, {"order", big(g.order())}, {"mu", mu_simple(name)}}.dump(2) << "\n";
  else
    out << name.to_string() << "\n";
  return 0;
}

int cmd_mu(const Settings& s, std::ostream& out) {
  auto g = group_from_file(read_group_file(s.file));
  std::vector<RecognitionHint> hints;
  for (const auto& h : s.hints) hints.push_back(read_hint_file(h));
  auto cert = mu_certificate(g, hints, pipeline_options(s));
  if (s.json) {
    out << cert.to_json();
  } else {
    for (const auto& r : cert.records) {
      out << r.ell << " x " << (r.factor_name.empty() ? "?" : r.factor_name) << ": |A| = " << r.a_order
          << ", |A/S| = " << r.outer_order << ", " << r.rule;
      if (r.mu) out << ", mu(G,N) = " << *r.mu;
      out << "\n";
      if (!r.mu) out << "  " << r.detail << "\n";
    }
    if (cert.total)
      out << "mu = " << *cert.total << "\n";
    else
      out << "incomplete: " << cert.message << "\n";
  }
  return cert.total ? 0 : 2;
}

int cmd_mu_oracle(const Settings& s, std::ostream& out) {
  auto g = group_from_file(read_group_file(s.file));
  auto c = list_elements(g, s.limit);
  auto r = mu_oracle(c, s.subgroup_limit);
  if (s.json) {
    Json j;
    j["mu"] = r.mu;
    j["witness"] = Json::array();
    for (const auto& h : r.witness.subgroups)
      j["witness"].push_back({{"order", h.count()}, {"index", c.order() / h.count()}});
    out << j.dump(2) << "\n";
  } else {
    out << "mu = " << r.mu << "\n";
    for (const auto& h : r.witness.subgroups)
      out << "subgroup of order " << h.count() << ", index " << c.order() / h.count() << "\n";
  }
  return 0;
}

int cmd_mu_quotient(const Settings& s, std::ostream& out) {
  auto f = read_group_file(s.file);
  auto g = group_from_file(f);
  auto k = f.has_kernel ? kernel_from_file(f) : PermGroup::trivial(f.degree);
  auto mu = mu_small_quotient(QuotientGroup(g, k), s.limit, s.subgroup_limit);
  if (s.json)
    out << Json{{"quotient_order", big(g.order() / k.order())}, {"mu", mu}}.dump(2) << "\n";
  else
    out << "mu = " << mu << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal faithful permutation degrees of permutation groups"};
  app.require_subcommand(1);
  Settings s;
  app.add_flag("--json", s.json, "JSON output");
  app.add_option("--limit", s.limit, "largest group order listed as a Cayley table")->capture_default_str();
  app.add_option("--subgroup-limit", s.subgroup_limit, "largest number of subgroups enumerated")->capture_default_str();
  app.add_option("--seed", s.seed, "seed for random elements")->capture_default_str();

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {{"order", "group order"},
                              {"socle", "socle and simple factors of a Fitting-free group"},
                              {"min-normal", "minimal normal subgroups of a Fitting-free group"},
                              {"recognize", "name of a simple group"},
                              {"mu", "minimal degree certificate for a Fitting-free group"},
                              {"mu-oracle", "minimal degree by exhaustive search over subgroups"},
                              {"mu-quotient", "minimal degree of G/K from the kernel block"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->fallthrough();
    sub->add_option("file", s.file, "group file")->required();
    if (std::string(c.name) == "mu") sub->add_option("--hint", s.hints, "recognition hint (repeatable)");
    subs[c.name] = sub;
  }
  CLI11_PARSE(app, argc, argv);

  std::ostringstream out;
  int code = 0;
  try {
    if (*subs["order"]) code = cmd_order(s, out);
    if (*subs["socle"]) code = cmd_socle(s, out, false);
    if (*subs["min-normal"]) code = cmd_socle(s, out, true);
    if (*subs["recognize"]) code = cmd_recognize(s, out);
    if (*subs["mu"]) code = cmd_mu(s, out);
    if (*subs["mu-oracle"]) code = cmd_mu_oracle(s, out);
    if (*subs["mu-quotient"]) code = cmd_mu_quotient(s, out);
  } catch (const Unsupported& e) {
    std::cout << out.str();
    std::cerr << "unsupported: " << e.what() << "\n";
    return 2;
  } catch (const HintRequired& e) {
    std::cout << out.str();
    std::cerr << "hint required: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << out.str();
  return code;
}
