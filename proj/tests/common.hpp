#pragma once

#include "charvan/builtin.hpp"
#include "charvan/group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <vector>

namespace charvan::testutil {

inline PermGroup group(const std::string& name) { return builtin_group(name).group; }

// Independent membership oracle: closure of the generators under
// multiplication, no stabilizer chains involved.
inline std::vector<Perm> naive_closure(const std::vector<Perm>& gens) {
  std::set<Perm> seen;
  std::deque<Perm> queue;
  Perm id(gens.at(0).degree());
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return {seen.begin(), seen.end()};
}

// Every normal subgroup is a join of normal closures of class
// representatives; the join closure enumerates the full normal subgroup
// lattice. Test-only oracle.
inline std::vector<PermGroup> all_normal_subgroups(const PermGroup& g) {
  auto cd = ClassData::compute(g);
  std::vector<PermGroup> atoms;
  for (std::size_t i = 1; i < cd->count(); ++i)
    atoms.push_back(normal_closure(g, {cd->cls(i).rep}));

  auto key = [](const PermGroup& h) { return h.elements(); };
  std::vector<PermGroup> out;
  std::vector<std::vector<Perm>> keys;
  auto add = [&](const PermGroup& h) {
    auto k = key(h);
    for (const auto& existing : keys)
      if (existing == k) return false;
    keys.push_back(std::move(k));
    out.push_back(h);
    return true;
  };
  add(PermGroup::trivial(g.degree()));
  for (const auto& a : atoms) add(a);
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t n = out.size();
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0; j < atoms.size(); ++j) {
        std::vector<Perm> gens = out[i].generators();
        for (const Perm& p : atoms[j].generators()) gens.push_back(p);
        if (gens.empty()) continue;
        if (add(PermGroup::generated(gens))) grew = true;
      }
  }
  return out;
}

} // namespace charvan::testutil
