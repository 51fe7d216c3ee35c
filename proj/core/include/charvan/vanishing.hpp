#pragma once

#include "charvan/chartable.hpp"
#include "charvan/group.hpp"

#include <memory>
#include <vector>

namespace charvan {

// Per-class vanishing flags with witnesses. A class is vanishing when some
// irreducible is exactly zero there; the witness is one such row.
struct VanishingProfile {
  std::shared_ptr<const CharacterTable> table;
  std::vector<bool> vanishing;
  std::vector<int> witness;          // row index, or -1 for non-vanishing classes
  std::vector<bool> prime_power;     // element order is a nontrivial prime power

  const ClassData& classes() const { return table->classes(); }
  std::size_t count() const { return vanishing.size(); }
};

VanishingProfile vanishing_profile(std::shared_ptr<const CharacterTable> table);

// One row per G-class lying in the normal subgroup.
struct SubgroupClass {
  std::size_t class_index = 0;
  u64 size = 0;          // |x^G|
  u64 element_order = 0;
  bool vanishing = false;
  int witness = -1;
};

// Classes of G contained in a normal subgroup n, tagged with vanishing data.
// Input error when n is not normal.
std::vector<SubgroupClass> classes_in_normal_subgroup(const VanishingProfile& vp,
                                                      const PermGroup& n);

// Filtered to the vanishing classes only (N meets Van(G) there).
std::vector<SubgroupClass> vanishing_in_subgroup(const VanishingProfile& vp,
                                                 const PermGroup& n);

// True iff no p-element class of n is vanishing in the ambient group.
bool nonvanishing_p_elements(const VanishingProfile& vp, const PermGroup& n, u64 p);

// Classes whose element order is p^k with k >= 1; the identity is excluded.
std::vector<std::size_t> prime_power_order_classes(const ClassData& cd);

} // namespace charvan
