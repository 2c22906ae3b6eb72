#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fdeg/perm_group.hpp"

namespace fdeg {

/// Text group description:
///
///   # comment
///   degree 8
///   gen (1 2 3)(4 5)
///   kernel
///   gen (1 2)(3 4)
///
/// Generators after the `kernel` line generate K for the quotient G/K.
struct GroupFile {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  bool has_kernel = false;
  std::vector<Permutation> kernel;
  std::vector<std::string> comments;
};

GroupFile parse_group_file(std::istream& in);
GroupFile read_group_file(const std::string& path);
std::string format_group_file(const GroupFile& f);

PermGroup group_from_file(const GroupFile& f);
/// K from the kernel block, verified normal in G.  Throws InputError otherwise.
PermGroup kernel_from_file(const GroupFile& f);

}  // namespace fdeg
