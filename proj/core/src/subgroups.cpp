#include "charvan/subgroups.hpp"

#include "charvan/error.hpp"

#include <algorithm>
#include <map>

namespace charvan {

bool is_prime_power(u64 n) {
  if (n < 2) return false;
  return factorize(n).size() == 1;
}

namespace {

// First element (in lexicographic order) whose order is divisible by p,
// powered up to a p-element.
std::optional<Perm> find_p_element(const PermGroup& g, u64 p, const Limits& lim) {
  for (const Perm& x : g.elements(lim.enumeration_cap)) {
    u64 ord = x.order();
    if (ord % p != 0) continue;
    u64 q = ord;
    while (q % p == 0) q /= p;
    return x.pow(static_cast<i64>(q));
  }
  return std::nullopt;
}

} // namespace

PermGroup sylow(const PermGroup& g, u64 p, const Limits& lim) {
  if (!is_prime(p)) input_error("sylow: p must be prime");
  u64 target = p_part(g.order(), p);
  if (target == 1) return PermGroup::trivial(g.degree());

  auto seed = find_p_element(g, p, lim);
  if (!seed) internal_error("sylow: Cauchy element not found");
  PermGroup part = PermGroup::generated({*seed}, lim);
  while (part.order() < target) {
    PermGroup norm = normalizer(g, part, lim);
    Quotient q(norm, part, lim);
    auto lift = find_p_element(q.group(), p, lim);
    if (!lift) internal_error("sylow: normalizer quotient has no p-element");
    Perm z = q.preimage(*lift);
    u64 ord = z.order();
    u64 pp = ord;
    while (pp % p == 0) pp /= p;
    Perm zp = z.pow(static_cast<i64>(pp)); // p-element outside part
    std::vector<Perm> gens = part.generators();
    gens.push_back(std::move(zp));
    part = PermGroup::generated(gens, lim);
  }
  if (part.order() != target) internal_error("sylow: overshot p-part");
  return part;
}

PermGroup center(const PermGroup& g, const Limits& lim) {
  std::vector<Perm> zgens;
  for (const Perm& x : g.elements(lim.enumeration_cap)) {
    if (x.is_identity()) continue;
    bool central = true;
    for (const Perm& gen : g.generators())
      if (!(x * gen == gen * x)) { central = false; break; }
    if (central) zgens.push_back(x);
  }
  if (zgens.empty()) return PermGroup::trivial(g.degree());
  return PermGroup::generated(zgens, lim);
}

PermGroup center(const ClassData& cd, const Limits& lim) {
  std::vector<Perm> zgens;
  for (const auto& c : cd.classes())
    if (c.size == 1 && !c.rep.is_identity()) zgens.push_back(c.rep);
  if (zgens.empty()) return PermGroup::trivial(cd.group().degree());
  return PermGroup::generated(zgens, lim);
}

PermGroup derived_subgroup(const PermGroup& g, const Limits& lim) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (const Perm& a : gens)
    for (const Perm& b : gens) {
      Perm c = a.inverse() * b.inverse() * a * b;
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  if (comms.empty()) return PermGroup::trivial(g.degree());
  return normal_closure(g, comms, lim);
}

bool is_solvable(const PermGroup& g, const Limits& lim) {
  PermGroup d = g;
  while (!d.is_trivial()) {
    PermGroup next = derived_subgroup(d, lim);
    if (next.order() == d.order()) return false;
    d = std::move(next);
  }
  return true;
}

bool is_nilpotent(const PermGroup& g, const Limits& lim) {
  for (u64 p : prime_divisors(g.order()))
    if (!is_normal(g, sylow(g, p, lim))) return false;
  return true;
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Limits& lim) {
  if (!is_subgroup(g, h)) input_error("normalizer: not a subgroup");
  PermGroup n = h.generators().empty() ? PermGroup::trivial(g.degree()) : h;
  for (const Perm& x : g.elements(lim.enumeration_cap)) {
    if (n.contains(x)) continue;
    bool normalizes = true;
    for (const Perm& hg : h.generators())
      if (!h.contains(hg.conjugated_by(x))) { normalizes = false; break; }
    if (normalizes) {
      std::vector<Perm> gens = n.generators();
      gens.push_back(x);
      n = PermGroup::generated(gens, lim);
    }
  }
  return n;
}

PermGroup class_commutator(const PermGroup& g, const Perm& x, const Limits& lim) {
  if (!g.contains(x)) input_error("class_commutator: element not in group");
  return derived_subgroup(normal_closure(g, {x}, lim), lim);
}

ClassClosures::ClassClosures(std::shared_ptr<const ClassData> cd, const Limits& lim)
    : cd_(std::move(cd)) {
  closures_.reserve(cd_->count());
  for (std::size_t i = 0; i < cd_->count(); ++i)
    closures_.push_back(normal_closure(cd_->group(), {cd_->cls(i).rep}, lim));
}

PermGroup pi_core(const ClassClosures& cc, const PiSet& pi, const Limits& lim) {
  std::vector<Perm> gens;
  for (std::size_t i = 0; i < cc.count(); ++i) {
    if (!pi.is_pi_number(cc.classes().cls(i).element_order)) continue;
    if (!pi.is_pi_number(cc.closure(i).order())) continue;
    for (const Perm& g : cc.closure(i).generators()) gens.push_back(g);
  }
  if (gens.empty()) return PermGroup::trivial(cc.classes().group().degree());
  return PermGroup::generated(gens, lim);
}

PermGroup pi_core(const PermGroup& g, const PiSet& pi, const Limits& lim) {
  ClassClosures cc(ClassData::compute(g, lim), lim);
  return pi_core(cc, pi, lim);
}

PermGroup fitting(const ClassClosures& cc, const Limits& lim) {
  std::vector<Perm> gens;
  for (u64 p : prime_divisors(cc.classes().order())) {
    PermGroup core = pi_core(cc, PiSet::single(p), lim);
    for (const Perm& g : core.generators()) gens.push_back(g);
  }
  if (gens.empty()) return PermGroup::trivial(cc.classes().group().degree());
  return PermGroup::generated(gens, lim);
}

PermGroup fitting(const PermGroup& g, const Limits& lim) {
  ClassClosures cc(ClassData::compute(g, lim), lim);
  return fitting(cc, lim);
}

PiSeries upper_pi_series(const PermGroup& n, const PiSet& pi, const Limits& lim) {
  PiSeries series;
  PermGroup term = PermGroup::trivial(n.degree());
  auto next_core = [&](const PiSet& which) -> PermGroup {
    if (term.is_trivial()) return pi_core(n, which, lim);
    Quotient q(n, term, lim);
    PermGroup core = pi_core(q.group(), which, lim);
    return q.preimage_group(core, lim);
  };
  bool grew = true;
  while (grew && term.order() < n.order()) {
    grew = false;
    PermGroup up = next_core(pi.complement());
    if (up.order() > term.order()) {
      term = std::move(up);
      series.steps.push_back({term, false});
      grew = true;
    }
    if (term.order() == n.order()) break;
    PermGroup up2 = next_core(pi);
    if (up2.order() > term.order()) {
      term = std::move(up2);
      series.steps.push_back({term, true});
      ++series.pi_length;
      grew = true;
    }
  }
  series.reached_top = term.order() == n.order();
  return series;
}

namespace {

PermGroup abelian_complement(const PermGroup& p, const PermGroup& k, const Limits& lim) {
  Quotient q(p, k, lim);
  std::vector<Perm> qels = q.group().elements(lim.enumeration_cap);
  u64 exp_k = 1;
  for (const Perm& x : k.elements(lim.enumeration_cap)) exp_k = lcm64(exp_k, x.order());
  u64 qn = q.group().order();
  // lambda = |Q|^-1 mod exp(K)
  u64 lambda = 1;
  {
    i64 old_r = static_cast<i64>(exp_k), r = static_cast<i64>(qn % exp_k);
    i64 old_t = 0, t = 1;
    while (r != 0) {
      i64 quo = old_r / r;
      i64 tmp = old_r - quo * r;
      old_r = r;
      r = tmp;
      tmp = old_t - quo * t;
      old_t = t;
      t = tmp;
    }
    if (old_r != 1) internal_error("abelian_complement: orders not coprime");
    i64 l = old_t % static_cast<i64>(exp_k);
    if (l < 0) l += static_cast<i64>(exp_k);
    lambda = static_cast<u64>(l);
  }
  u64 pexp = (exp_k - lambda % exp_k) % exp_k;

  // Section q -> t_q * (prod_r g(r,q))^(-lambda), g(r,q) = t_{rq}^-1 t_r t_q.
  auto section = [&](const Perm& qe) {
    Perm tq = q.preimage(qe);
    Perm acc(p.degree());
    for (const Perm& r : qels) {
      Perm trq = q.preimage(r * qe);
      Perm c = trq.inverse() * q.preimage(r) * tq;
      acc = acc * c;
    }
    return tq * acc.pow(static_cast<i64>(pexp));
  };

  std::vector<Perm> hgens;
  for (const Perm& qg : q.group().generators()) hgens.push_back(section(qg));
  PermGroup h = hgens.empty() ? PermGroup::trivial(p.degree())
                              : PermGroup::generated(hgens, lim);
  if (h.order() != qn) internal_error("abelian_complement: wrong order");
  return h;
}

} // namespace

PermGroup hall_complement(const PermGroup& p, const PermGroup& k, const Limits& lim) {
  u64 n = p.order() / k.order();
  if (gcd64(n, k.order()) != 1) input_error("hall_complement: kernel is not Hall");
  if (k.is_trivial()) return p;
  if (n == 1) return PermGroup::trivial(p.degree());

  PermGroup z = center(k, lim);
  if (z.order() == k.order()) return abelian_complement(p, k, lim);

  u64 q = prime_divisors(k.order()).front();
  PermGroup s = sylow(k, q, lim);
  if (!is_normal(k, s)) {
    // Frattini: P = K N_P(S), so a complement of N_K(S) in N_P(S) works.
    PermGroup n1 = normalizer(p, s, lim);
    PermGroup k1 = intersection(k, n1, lim);
    if (n1.order() / k1.order() != n) internal_error("hall_complement: Frattini size");
    return hall_complement(n1, k1, lim);
  }
  // S normal in K, hence in P; pass to P / Z(S) and finish on the abelian layer.
  PermGroup zs = center(s, lim);
  Quotient quo(p, zs, lim);
  std::vector<Perm> kbar_gens;
  for (const Perm& g : k.generators()) kbar_gens.push_back(quo.image(g));
  PermGroup kbar = kbar_gens.empty() ? PermGroup::trivial(quo.group().degree())
                                     : PermGroup::generated(kbar_gens, lim);
  PermGroup hbar = hall_complement(quo.group(), kbar, lim);
  PermGroup l = quo.preimage_group(hbar, lim);
  return hall_complement(l, zs, lim);
}

namespace {

PermGroup hall_separable(const PermGroup& n, const PiSet& pi, const Limits& lim) {
  u64 m = pi.pi_part(n.order());
  if (m == n.order()) return n;
  if (m == 1) return PermGroup::trivial(n.degree());
  PermGroup r = pi_core(n, pi, lim);
  if (!r.is_trivial()) {
    Quotient q(n, r, lim);
    PermGroup h = hall_separable(q.group(), pi, lim);
    return q.preimage_group(h, lim);
  }
  PermGroup k = pi_core(n, pi.complement(), lim);
  if (k.is_trivial())
    internal_error("hall_separable: both cores trivial in a separable group");
  Quotient q(n, k, lim);
  PermGroup h = hall_separable(q.group(), pi, lim);
  PermGroup pre = q.preimage_group(h, lim);
  return hall_complement(pre, k, lim);
}

// Subgroups generated by up to three class representatives of pi-order.
std::optional<PermGroup> hall_bounded_search(const PermGroup& g, const PiSet& pi,
                                             u64 m, const Limits& lim) {
  auto cd = ClassData::compute(g, lim);
  std::vector<Perm> cands;
  for (const auto& c : cd->classes())
    if (c.element_order > 1 && pi.is_pi_number(c.element_order))
      cands.push_back(c.rep);
  auto try_set = [&](const std::vector<Perm>& gens) -> std::optional<PermGroup> {
    PermGroup h = PermGroup::generated(gens, lim);
    if (h.order() == m) return h;
    return std::nullopt;
  };
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (auto h = try_set({cands[i]})) return h;
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      PermGroup hij = PermGroup::generated({cands[i], cands[j]}, lim);
      if (hij.order() == m) return hij;
      if (m % hij.order() != 0) continue;
      for (std::size_t l = j + 1; l < cands.size(); ++l) {
        if (auto h = try_set({cands[i], cands[j], cands[l]})) return h;
      }
    }
  }
  return std::nullopt;
}

// Exhaustive for |g| <= 2000: join closure over cyclic pi-subgroups, pruned
// to orders dividing m. Complete for existence proofs: a Hall subgroup is the
// join of its cyclic subgroups, all of which sit in the seed pool.
HallResult hall_exhaustive(const PermGroup& g, const PiSet& pi, u64 m,
                           const Limits& lim) {
  std::map<std::vector<Perm>, PermGroup> pool;
  auto key_of = [&](const PermGroup& h) { return h.elements(lim.enumeration_cap); };
  std::vector<const PermGroup*> fresh;
  for (const Perm& x : g.elements(lim.enumeration_cap)) {
    if (x.is_identity()) continue;
    u64 ord = x.order();
    if (!pi.is_pi_number(ord) || m % ord != 0) continue;
    PermGroup c = PermGroup::generated({x}, lim);
    if (c.order() == m) return {HallResult::Kind::Found, c};
    auto [it, inserted] = pool.emplace(key_of(c), std::move(c));
    if (inserted) fresh.push_back(&it->second);
  }
  std::vector<const PermGroup*> all(fresh);
  while (!fresh.empty()) {
    std::vector<const PermGroup*> next;
    for (const PermGroup* a : fresh) {
      for (const PermGroup* b : all) {
        if (a == b) continue;
        std::vector<Perm> gens = a->generators();
        for (const Perm& bg : b->generators()) gens.push_back(bg);
        PermGroup j = PermGroup::generated(gens, lim);
        if (j.order() == m) return {HallResult::Kind::Found, j};
        if (m % j.order() != 0) continue;
        auto [it, inserted] = pool.emplace(key_of(j), std::move(j));
        if (inserted) next.push_back(&it->second);
      }
    }
    for (const PermGroup* p : next) all.push_back(p);
    fresh = std::move(next);
  }
  return {HallResult::Kind::None, std::nullopt};
}

} // namespace

HallResult hall(const PermGroup& g, const PiSet& pi, const Limits& lim) {
  u64 m = pi.pi_part(g.order());
  if (m == 1) return {HallResult::Kind::Found, PermGroup::trivial(g.degree())};
  if (m == g.order()) return {HallResult::Kind::Found, g};

  PiSeries series = upper_pi_series(g, pi, lim);
  if (series.reached_top) {
    PermGroup h = hall_separable(g, pi, lim);
    if (h.order() != m) internal_error("hall: separable construction wrong order");
    return {HallResult::Kind::Found, std::move(h)};
  }
  if (auto h = hall_bounded_search(g, pi, m, lim))
    return {HallResult::Kind::Found, std::move(*h)};
  if (g.order() <= 2000) return hall_exhaustive(g, pi, m, lim);
  return {HallResult::Kind::Unknown, std::nullopt};
}

} // namespace charvan
