#pragma once

#include <string>

#include "fdeg/group_file.hpp"

inline std::string fixture_path(const std::string& name) { return std::string(FDEG_FIXTURE_DIR) + "/" + name; }

inline fdeg::PermGroup load_fixture(const std::string& name) {
  return fdeg::group_from_file(fdeg::read_group_file(fixture_path(name + ".grp")));
}
