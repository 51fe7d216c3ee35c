#include "charvan/vanishing.hpp"

#include "charvan/error.hpp"
#include "charvan/subgroups.hpp"

namespace charvan {

VanishingProfile vanishing_profile(std::shared_ptr<const CharacterTable> table) {
  VanishingProfile vp;
  vp.table = std::move(table);
  const CharacterTable& t = *vp.table;
  std::size_t k = t.columns();
  vp.vanishing.assign(k, false);
  vp.witness.assign(k, -1);
  vp.prime_power.assign(k, false);
  for (std::size_t i = 0; i < k; ++i) {
    vp.prime_power[i] = is_prime_power(t.classes().cls(i).element_order);
    for (std::size_t r = 0; r < t.rows(); ++r) {
      if (t.value(r, i).is_zero()) {
        vp.vanishing[i] = true;
        vp.witness[i] = static_cast<int>(r);
        break;
      }
    }
  }
  if (vp.vanishing[0]) internal_error("vanishing_profile: identity class vanishes");
  return vp;
}

std::vector<SubgroupClass> classes_in_normal_subgroup(const VanishingProfile& vp,
                                                      const PermGroup& n) {
  const ClassData& cd = vp.classes();
  if (!is_normal(cd.group(), n))
    input_error("classes_in_normal_subgroup: subgroup is not normal");
  std::vector<SubgroupClass> out;
  for (std::size_t i = 0; i < cd.count(); ++i) {
    if (!n.contains(cd.cls(i).rep)) continue;
    SubgroupClass sc;
    sc.class_index = i;
    sc.size = cd.cls(i).size;
    sc.element_order = cd.cls(i).element_order;
    sc.vanishing = vp.vanishing[i];
    sc.witness = vp.witness[i];
    out.push_back(sc);
  }
  return out;
}

std::vector<SubgroupClass> vanishing_in_subgroup(const VanishingProfile& vp,
                                                 const PermGroup& n) {
  std::vector<SubgroupClass> all = classes_in_normal_subgroup(vp, n);
  std::vector<SubgroupClass> out;
  for (const auto& sc : all)
    if (sc.vanishing) out.push_back(sc);
  return out;
}

bool nonvanishing_p_elements(const VanishingProfile& vp, const PermGroup& n, u64 p) {
  for (const auto& sc : classes_in_normal_subgroup(vp, n)) {
    if (sc.element_order == 1 || sc.element_order != p_part(sc.element_order, p)) continue;
    if (sc.vanishing) return false;
  }
  return true;
}

std::vector<std::size_t> prime_power_order_classes(const ClassData& cd) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cd.count(); ++i)
    if (is_prime_power(cd.cls(i).element_order)) out.push_back(i);
  return out;
}

} // namespace charvan
