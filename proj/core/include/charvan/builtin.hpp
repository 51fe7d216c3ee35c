#pragma once

#include "charvan/group.hpp"

#include <string>
#include <utility>
#include <vector>

namespace charvan {

// A catalog group together with its distinguished normal subgroups.
struct BuiltinGroup {
  std::string name;
  PermGroup group = PermGroup::trivial(1);
  std::vector<std::pair<std::string, PermGroup>> normals;

  const PermGroup* normal(const std::string& id) const {
    for (const auto& [n, g] : normals)
      if (n == id) return &g;
    return nullptr;
  }
};

// Catalog names:
//   trivial, C<n>, V4, D<n> (dihedral of order n, n even >= 6),
//   Dic<n> (dicyclic of order n, n = 4m), Q8, Q16, S<n> and A<n> for n <= 7,
//   SL(2,3), AGammaL(1,8), SzSylNorm8, and direct products "AxB".
// Input error for unknown names.
BuiltinGroup builtin_group(const std::string& name, const Limits& lim = {});

std::vector<std::string> builtin_catalog();

} // namespace charvan
