#pragma once

#include "charvan/perm.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

namespace charvan {

// Resource caps. Groups or quotients exceeding them are rejected with a
// resource error rather than silently degraded.
struct Limits {
  u64 build_order_cap = 100'000'000;
  u64 enumeration_cap = 1'000'000;
  u64 quotient_cap = 100'000;
};

// Permutation group with a base and strong generating set (Schreier-Sims).
// Immutable after construction.
class PermGroup {
public:
  static PermGroup generated(std::vector<Perm> gens, const Limits& lim = {});
  static PermGroup trivial(std::uint32_t degree);

  std::uint32_t degree() const { return degree_; }
  u64 order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  const std::vector<Perm>& generators() const { return gens_; }

  bool contains(const Perm& g) const;
  bool contains_group(const PermGroup& h) const;

  const std::vector<std::uint32_t>& base() const { return base_; }

  // All elements, lexicographically sorted. Resource error above the cap.
  std::vector<Perm> elements(u64 cap = Limits{}.enumeration_cap) const;

private:
  struct Level {
    std::uint32_t base_point = 0;
    // Strong generators fixing all earlier base points; snapshot taken when
    // the orbit was last rebuilt. Tree edge labels index into this list.
    std::vector<Perm> gens;
    // Schreier tree over the orbit: point -> (parent point, generator index);
    // the root maps to itself with index -1.
    std::unordered_map<std::uint32_t, std::pair<std::uint32_t, std::int32_t>> tree;
    std::vector<std::uint32_t> orbit; // discovery order
  };

  PermGroup() = default;

  void add_strong_generator(Perm g);
  void rebuild_orbit(std::size_t i);
  Perm transversal_rep(std::size_t i, std::uint32_t point) const;
  // Strips g through levels >= from; returns (residue, level reached).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;
  // Re-establishes the Schreier-Sims invariant at level i, assuming deeper
  // levels are complete.
  void complete_level(std::size_t i);
  void recompute_order(const Limits& lim);

  std::uint32_t degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> sgens_; // all strong generators
  std::vector<Level> chain_;
  std::vector<std::uint32_t> base_;
  u64 order_ = 1;
};

// Representative data of one conjugacy class. rep is the lexicographically
// least element of the class.
struct ConjugacyClass {
  Perm rep;
  u64 size = 0;
  u64 element_order = 0;
  u64 centralizer_order = 0;
};

// Conjugacy classes in canonical order (size, then element order, then least
// representative), plus element -> class lookup and power maps. Class 0 is
// always the identity.
class ClassData {
public:
  static std::shared_ptr<const ClassData> compute(const PermGroup& g,
                                                  const Limits& lim = {});

  const PermGroup& group() const { return group_; }
  u64 order() const { return group_.order(); }
  u64 exponent() const { return exponent_; }
  std::size_t count() const { return classes_.size(); }
  const ConjugacyClass& cls(std::size_t i) const { return classes_[i]; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }

  bool in_group(const Perm& x) const { return elem_index_.contains(x); }
  std::size_t class_of(const Perm& x) const;

  // Class of rep_i^t.
  std::size_t power_class(std::size_t i, i64 t) const;
  std::vector<std::size_t> power_map(i64 t) const;
  // Class of inverses.
  std::size_t inverse_class(std::size_t i) const { return power_class(i, -1); }

  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<std::uint32_t>& class_of_element() const { return class_id_; }
  const std::vector<std::vector<std::uint32_t>>& class_members() const {
    return members_;
  }

private:
  ClassData() : group_(PermGroup::trivial(1)) {}

  PermGroup group_;
  std::vector<Perm> elements_; // sorted
  std::unordered_map<Perm, std::uint32_t, PermHash> elem_index_;
  std::vector<std::uint32_t> class_id_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<ConjugacyClass> classes_;
  u64 exponent_ = 1;
};

// Subgroup of elements commuting with x; order |G| / |x^G|.
PermGroup centralizer(const PermGroup& g, const Perm& x, const Limits& lim = {});

// Smallest normal subgroup of g containing the given elements.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed,
                         const Limits& lim = {});

// True iff h <= g and h^x = h for all generators x of g.
bool is_normal(const PermGroup& g, const PermGroup& h);

bool is_subgroup(const PermGroup& g, const PermGroup& h);

// Exact intersection by enumerating the smaller factor. Desk scale.
PermGroup intersection(const PermGroup& a, const PermGroup& b, const Limits& lim = {});

PermGroup conjugate_subgroup(const PermGroup& h, const Perm& x, const Limits& lim = {});

// Faithful action of g on the right cosets of a normal subgroup n, with the
// epimorphism and its section. Coset points are ordered by the
// lexicographically least coset representative.
class Quotient {
public:
  Quotient(const PermGroup& g, const PermGroup& n, const Limits& lim = {});

  const PermGroup& group() const { return image_; }
  const PermGroup& kernel() const { return kernel_; }
  std::size_t index() const { return reps_.size(); }

  Perm image(const Perm& g) const;
  // Canonical preimage (coset representative) of an element of the image.
  Perm preimage(const Perm& q) const;
  // Preimage in g of a subgroup of the image; contains the kernel.
  PermGroup preimage_group(const PermGroup& sub, const Limits& lim = {}) const;

private:
  PermGroup image_;
  PermGroup kernel_;
  std::vector<Perm> reps_; // sorted canonical coset representatives
  std::size_t trivial_coset_ = 0;
  std::unordered_map<Perm, std::uint32_t, PermHash> coset_of_;
};

} // namespace charvan
