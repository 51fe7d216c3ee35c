#pragma once

#include "charvan/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace charvan {

// Parsed group definition file:
//   name <id>
//   degree <n>
//   gen <cycles>          (ambient group generators)
//   [normal <id>]         (starts a named normal subgroup block)
//   gen <cycles>
// '#' starts a comment; blank lines and extra whitespace are ignored.
struct GroupFile {
  std::string name;
  PermGroup group = PermGroup::trivial(1);
  std::vector<std::pair<std::string, PermGroup>> normals;

  const PermGroup* normal(const std::string& id) const {
    for (const auto& [n, g] : normals)
      if (n == id) return &g;
    return nullptr;
  }
};

GroupFile parse_group_text(const std::string& text, const Limits& lim = {});
GroupFile load_group_file(const std::string& path, const Limits& lim = {});

std::string group_file_text(const std::string& name, const PermGroup& g,
                            const std::vector<std::pair<std::string, PermGroup>>& normals);

} // namespace charvan
