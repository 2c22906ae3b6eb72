#include "fdeg/group_file.hpp"

#include <fstream>
#include <sstream>

#include "fdeg/error.hpp"

namespace fdeg {

GroupFile parse_group_file(std::istream& in) {
  GroupFile f;
  std::string line;
  std::size_t lineno = 0;
  bool in_kernel = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    line = line.substr(start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line[0] == '#') {
      f.comments.push_back(line.substr(1).starts_with(" ") ? line.substr(2) : line.substr(1));
      continue;
    }
    std::istringstream words(line);
    std::string key;
    words >> key;
    auto where = [&] { return "line " + std::to_string(lineno) + ": "; };
    if (key == "degree") {
      long long n = 0;
      if (f.degree || !(words >> n) || n <= 0) throw InputError(where() + "bad degree line");
      f.degree = static_cast<std::size_t>(n);
    } else if (key == "gen") {
      if (!f.degree) throw InputError(where() + "generator before degree");
      std::string rest;
      std::getline(words, rest);
      auto p = parse_permutation(rest, f.degree);
      (in_kernel ? f.kernel : f.generators).push_back(std::move(p));
    } else if (key == "kernel") {
      if (in_kernel) throw InputError(where() + "second kernel block");
      in_kernel = f.has_kernel = true;
    } else {
      throw InputError(where() + "unknown keyword '" + key + "'");
    }
  }
  if (!f.degree) throw InputError("group file has no degree line");
  return f;
}

GroupFile read_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return parse_group_file(in);
}

std::string format_group_file(const GroupFile& f) {
  std::ostringstream out;
  for (const auto& c : f.comments) out << "# " << c << "\n";
  out << "degree " << f.degree << "\n";
  for (const auto& g : f.generators) out << "gen " << g.to_cycles() << "\n";
  if (f.has_kernel) {
    out << "kernel\n";
    for (const auto& g : f.kernel) out << "gen " << g.to_cycles() << "\n";
  }
  return out.str();
}

PermGroup group_from_file(const GroupFile& f) { return PermGroup(f.degree, f.generators); }

PermGroup kernel_from_file(const GroupFile& f) {
  PermGroup g = group_from_file(f);
  PermGroup k(f.degree, f.kernel);
  if (!k.is_subgroup_of(g)) throw InputError("kernel is not a subgroup of the group");
  if (!normalizes(g, k)) throw InputError("kernel is not normal in the group");
  return k;
}

}  // namespace fdeg
