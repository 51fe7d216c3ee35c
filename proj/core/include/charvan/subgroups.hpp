#pragma once

#include "charvan/group.hpp"
#include "charvan/numbers.hpp"

#include <optional>

namespace charvan {

// Helpers on orders.
bool is_prime_power(u64 n); // p^k with k >= 1

// Subgroup of order the full p-part of |g|; trivial when p does not divide
// |g|. Deterministic normalizer-growing construction.
PermGroup sylow(const PermGroup& g, u64 p, const Limits& lim = {});

PermGroup center(const PermGroup& g, const Limits& lim = {});
PermGroup center(const ClassData& cd, const Limits& lim = {});

PermGroup derived_subgroup(const PermGroup& g, const Limits& lim = {});

// Derived series hits the trivial group.
bool is_solvable(const PermGroup& g, const Limits& lim = {});

// Every Sylow subgroup normal.
bool is_nilpotent(const PermGroup& g, const Limits& lim = {});

// {g in G : H^g = H}. Element scan; desk scale.
PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Limits& lim = {});

// Derived subgroup of the normal closure of x.
PermGroup class_commutator(const PermGroup& g, const Perm& x, const Limits& lim = {});

// Normal closures of the conjugacy class representatives, computed once and
// shared by the core/fitting computations.
class ClassClosures {
public:
  ClassClosures(std::shared_ptr<const ClassData> cd, const Limits& lim = {});
  const ClassData& classes() const { return *cd_; }
  const PermGroup& closure(std::size_t i) const { return closures_[i]; }
  std::size_t count() const { return closures_.size(); }

private:
  std::shared_ptr<const ClassData> cd_;
  std::vector<PermGroup> closures_;
};

// Largest normal pi-subgroup: generated by the class representatives whose
// normal closure is a pi-group.
PermGroup pi_core(const PermGroup& g, const PiSet& pi, const Limits& lim = {});
PermGroup pi_core(const ClassClosures& cc, const PiSet& pi, const Limits& lim = {});

// Product of the p-cores; largest normal nilpotent subgroup.
PermGroup fitting(const PermGroup& g, const Limits& lim = {});
PermGroup fitting(const ClassClosures& cc, const Limits& lim = {});

// Ascending alternating pi'/pi series 1 <= O_{pi'} <= O_{pi'pi} <= ...
struct PiSeries {
  struct Step {
    PermGroup term;
    bool pi_factor; // true when term/previous is a pi-group
  };
  std::vector<Step> steps; // strictly increasing, starting above the trivial group
  bool reached_top = false;
  unsigned pi_length = 0; // number of nontrivial pi-factors
};

PiSeries upper_pi_series(const PermGroup& n, const PiSet& pi, const Limits& lim = {});

// Three-valued Hall subgroup search. `None` and `Found` carry proof
// (exhaustive closure / explicit subgroup); `Unknown` means the search budget
// was exhausted without either.
struct HallResult {
  enum class Kind { Found, None, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<PermGroup> subgroup;

  bool found() const { return kind == Kind::Found; }
};

HallResult hall(const PermGroup& g, const PiSet& pi, const Limits& lim = {});

// Schur-Zassenhaus: complement of the normal Hall subgroup k in p
// (gcd(|k|, |p:k|) = 1). Constructive and deterministic.
PermGroup hall_complement(const PermGroup& p, const PermGroup& k, const Limits& lim = {});

} // namespace charvan
