#include "charvan/group.hpp"

#include "charvan/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace charvan {

PermGroup PermGroup::trivial(std::uint32_t degree) {
  if (degree == 0) input_error("PermGroup: degree must be positive");
  PermGroup g;
  g.degree_ = degree;
  g.order_ = 1;
  return g;
}

PermGroup PermGroup::generated(std::vector<Perm> gens, const Limits& lim) {
  if (gens.empty()) input_error("PermGroup: generator list must be nonempty");
  std::uint32_t deg = gens[0].degree();
  for (const Perm& g : gens)
    if (g.degree() != deg) input_error("PermGroup: generator degree mismatch");

  PermGroup grp;
  grp.degree_ = deg;
  for (const Perm& g : gens) {
    if (g.is_identity()) continue;
    if (std::find(grp.gens_.begin(), grp.gens_.end(), g) == grp.gens_.end())
      grp.gens_.push_back(g);
  }
  for (const Perm& g : grp.gens_) grp.add_strong_generator(g);
  for (std::size_t i = grp.chain_.size(); i-- > 0;) grp.complete_level(i);
  grp.recompute_order(lim);
  return grp;
}

// Records a strong generator, appending a base point if it fixes all current
// ones (every strong generator must move some base point).
void PermGroup::add_strong_generator(Perm g) {
  if (std::find(sgens_.begin(), sgens_.end(), g) != sgens_.end()) return;
  bool moves_base = false;
  for (std::uint32_t b : base_)
    if (g[b] != b) { moves_base = true; break; }
  if (!moves_base) {
    std::uint32_t moved = degree_;
    for (std::uint32_t i = 0; i < degree_; ++i)
      if (g[i] != i) { moved = i; break; }
    if (moved == degree_) return; // identity
    Level lv;
    lv.base_point = moved;
    chain_.push_back(std::move(lv));
    base_.push_back(moved);
  }
  sgens_.push_back(std::move(g));
}

void PermGroup::rebuild_orbit(std::size_t i) {
  Level& lv = chain_[i];
  // Generating set of the i-th stabilizer: strong generators fixing all
  // earlier base points.
  lv.gens.clear();
  for (const Perm& g : sgens_) {
    bool fixes = true;
    for (std::size_t l = 0; l < i; ++l)
      if (g[chain_[l].base_point] != chain_[l].base_point) { fixes = false; break; }
    if (fixes) lv.gens.push_back(g);
  }
  lv.tree.clear();
  lv.orbit.clear();
  lv.tree[lv.base_point] = {lv.base_point, -1};
  lv.orbit.push_back(lv.base_point);
  for (std::size_t head = 0; head < lv.orbit.size(); ++head) {
    std::uint32_t pt = lv.orbit[head];
    for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
      std::uint32_t im = lv.gens[gi][pt];
      if (!lv.tree.contains(im)) {
        lv.tree[im] = {pt, static_cast<std::int32_t>(gi)};
        lv.orbit.push_back(im);
      }
    }
  }
}

Perm PermGroup::transversal_rep(std::size_t i, std::uint32_t point) const {
  const Level& lv = chain_[i];
  std::vector<std::int32_t> path;
  std::uint32_t cur = point;
  while (true) {
    auto it = lv.tree.find(cur);
    if (it == lv.tree.end()) internal_error("transversal_rep: point not in orbit");
    if (it->second.second < 0) break;
    path.push_back(it->second.second);
    cur = it->second.first;
  }
  Perm rep(degree_);
  for (auto gi = path.rbegin(); gi != path.rend(); ++gi) rep = rep * lv.gens[*gi];
  return rep;
}

std::pair<Perm, std::size_t> PermGroup::strip(Perm g, std::size_t from) const {
  for (std::size_t i = from; i < chain_.size(); ++i) {
    std::uint32_t im = g[chain_[i].base_point];
    auto it = chain_[i].tree.find(im);
    if (it == chain_[i].tree.end()) return {g, i};
    g = g * transversal_rep(i, im).inverse();
  }
  return {g, chain_.size()};
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  auto [res, lvl] = strip(g, 0);
  return res.is_identity();
}

bool PermGroup::contains_group(const PermGroup& h) const {
  for (const Perm& g : h.generators())
    if (!contains(g)) return false;
  return true;
}

void PermGroup::complete_level(std::size_t i) {
  // Schreier generators of level i must strip to the identity through the
  // deeper levels (assumed complete). Any residue is a new strong generator
  // at some deeper level; re-complete downwards and restart this level.
restart:
  rebuild_orbit(i);
  // Snapshot: deeper work may reallocate the chain vector.
  const std::vector<std::uint32_t> orbit = chain_[i].orbit;
  const std::vector<Perm> gens = chain_[i].gens;
  const std::uint32_t base_point = chain_[i].base_point;
  for (std::uint32_t pt : orbit) {
    Perm u = transversal_rep(i, pt);
    for (const Perm& gen : gens) {
      Perm s = u * gen;
      Perm v = transversal_rep(i, s[base_point]);
      s = s * v.inverse();
      if (s.is_identity()) continue;
      auto [res, j] = strip(std::move(s), i + 1);
      if (res.is_identity()) continue;
      std::size_t before = chain_.size();
      add_strong_generator(std::move(res));
      std::size_t deepest = std::min(j, chain_.size() - 1);
      if (chain_.size() > before) deepest = chain_.size() - 1;
      for (std::size_t l = deepest; l > i; --l) complete_level(l);
      goto restart;
    }
  }
}

void PermGroup::recompute_order(const Limits& lim) {
  order_ = 1;
  for (const Level& lv : chain_) {
    order_ *= lv.orbit.size();
    if (order_ > lim.build_order_cap)
      resource_error("PermGroup: order exceeds build cap " +
                     std::to_string(lim.build_order_cap));
  }
}

std::vector<Perm> PermGroup::elements(u64 cap) const {
  if (order_ > cap)
    resource_error("PermGroup: enumeration of order " + std::to_string(order_) +
                   " exceeds cap " + std::to_string(cap));
  // Every element factors uniquely as u_{k-1} * ... * u_1 * u_0 with u_i a
  // transversal representative of level i.
  std::vector<Perm> out;
  out.reserve(order_);
  out.push_back(Perm(degree_));
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    std::vector<Perm> next;
    next.reserve(out.size() * chain_[i].orbit.size());
    for (std::uint32_t pt : chain_[i].orbit) {
      Perm u = transversal_rep(i, pt);
      for (const Perm& tail : out) next.push_back(u * tail);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t ClassData::class_of(const Perm& x) const {
  auto it = elem_index_.find(x);
  if (it == elem_index_.end()) input_error("ClassData: element not in group");
  return class_id_[it->second];
}

std::size_t ClassData::power_class(std::size_t i, i64 t) const {
  return class_of(classes_[i].rep.pow(t));
}

std::vector<std::size_t> ClassData::power_map(i64 t) const {
  std::vector<std::size_t> m(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) m[i] = power_class(i, t);
  return m;
}

std::shared_ptr<const ClassData> ClassData::compute(const PermGroup& g,
                                                    const Limits& lim) {
  auto cd = std::shared_ptr<ClassData>(new ClassData());
  cd->group_ = g;
  cd->elements_ = g.elements(lim.enumeration_cap);
  const auto& els = cd->elements_;
  cd->elem_index_.reserve(els.size() * 2);
  for (std::uint32_t i = 0; i < els.size(); ++i) cd->elem_index_[els[i]] = i;

  const std::uint32_t unassigned = 0xffffffffu;
  cd->class_id_.assign(els.size(), unassigned);

  // Conjugation orbits, scanning elements in lexicographic order so the first
  // unseen element of each class is its least representative.
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<ConjugacyClass> classes;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t start = 0; start < els.size(); ++start) {
    if (cd->class_id_[start] != unassigned) continue;
    std::uint32_t cid = static_cast<std::uint32_t>(classes.size());
    std::vector<std::uint32_t> orbit{start};
    cd->class_id_[start] = cid;
    stack.assign(1, start);
    while (!stack.empty()) {
      std::uint32_t cur = stack.back();
      stack.pop_back();
      for (const Perm& gen : g.generators()) {
        Perm c = els[cur].conjugated_by(gen);
        std::uint32_t idx = cd->elem_index_.at(c);
        if (cd->class_id_[idx] == unassigned) {
          cd->class_id_[idx] = cid;
          orbit.push_back(idx);
          stack.push_back(idx);
        }
      }
    }
    ConjugacyClass cc;
    cc.rep = els[start];
    cc.size = orbit.size();
    cc.element_order = cc.rep.order();
    if (g.order() % cc.size != 0) internal_error("class size does not divide order");
    cc.centralizer_order = g.order() / cc.size;
    classes.push_back(std::move(cc));
    members.push_back(std::move(orbit));
  }

  // Canonical order: ascending size, then element order, then least rep.
  std::vector<std::size_t> idx(classes.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    const auto& ca = classes[a];
    const auto& cb = classes[b];
    if (ca.size != cb.size) return ca.size < cb.size;
    if (ca.element_order != cb.element_order) return ca.element_order < cb.element_order;
    return ca.rep < cb.rep;
  });
  std::vector<std::uint32_t> newid(classes.size());
  for (std::uint32_t pos = 0; pos < idx.size(); ++pos) newid[idx[pos]] = pos;
  for (auto& cidref : cd->class_id_) cidref = newid[cidref];
  cd->classes_.resize(classes.size());
  cd->members_.resize(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    cd->classes_[newid[i]] = std::move(classes[i]);
    cd->members_[newid[i]] = std::move(members[i]);
  }

  cd->exponent_ = 1;
  for (const auto& c : cd->classes_) cd->exponent_ = lcm64(cd->exponent_, c.element_order);
  return cd;
}

PermGroup centralizer(const PermGroup& g, const Perm& x, const Limits& lim) {
  if (!g.contains(x)) input_error("centralizer: element not in group");
  // Orbit-stabilizer on the conjugation action; Schreier generators of the
  // stabilizer are exactly generators of the centralizer.
  std::unordered_map<Perm, Perm, PermHash> rep; // conjugate -> transversal word
  std::deque<Perm> queue;
  rep.emplace(x, Perm(g.degree()));
  queue.push_back(x);
  std::vector<Perm> cgens;
  while (!queue.empty()) {
    Perm y = queue.front();
    queue.pop_front();
    const Perm& t = rep.at(y);
    for (const Perm& gen : g.generators()) {
      Perm z = y.conjugated_by(gen);
      Perm word = t * gen;
      auto it = rep.find(z);
      if (it == rep.end()) {
        rep.emplace(z, std::move(word));
        queue.push_back(z);
      } else {
        Perm s = word * it->second.inverse();
        if (!s.is_identity() &&
            std::find(cgens.begin(), cgens.end(), s) == cgens.end())
          cgens.push_back(std::move(s));
      }
    }
  }
  PermGroup c = cgens.empty() ? PermGroup::trivial(g.degree())
                              : PermGroup::generated(cgens, lim);
  if (c.order() * rep.size() != g.order())
    internal_error("centralizer: orbit-stabilizer mismatch");
  return c;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed,
                         const Limits& lim) {
  for (const Perm& s : seed)
    if (!g.contains(s)) input_error("normal_closure: seed element not in group");
  std::vector<Perm> gens;
  for (const Perm& s : seed)
    if (!s.is_identity()) gens.push_back(s);
  if (gens.empty()) return PermGroup::trivial(g.degree());
  PermGroup k = PermGroup::generated(gens, lim);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Perm> fresh;
    for (const Perm& t : gens)
      for (const Perm& gen : g.generators()) {
        Perm c = t.conjugated_by(gen);
        if (!k.contains(c)) fresh.push_back(std::move(c));
      }
    if (!fresh.empty()) {
      changed = true;
      for (Perm& f : fresh) gens.push_back(std::move(f));
      k = PermGroup::generated(gens, lim);
    }
  }
  return k;
}

bool is_subgroup(const PermGroup& g, const PermGroup& h) {
  return h.degree() == g.degree() && g.order() % h.order() == 0 &&
         g.contains_group(h);
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!is_subgroup(g, h)) input_error("is_normal: not a subgroup");
  for (const Perm& gen : g.generators())
    for (const Perm& hg : h.generators())
      if (!h.contains(hg.conjugated_by(gen))) return false;
  return true;
}

PermGroup intersection(const PermGroup& a, const PermGroup& b, const Limits& lim) {
  if (a.degree() != b.degree()) input_error("intersection: degree mismatch");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& big = a.order() <= b.order() ? b : a;
  std::vector<Perm> common;
  for (const Perm& e : small.elements(lim.enumeration_cap))
    if (!e.is_identity() && big.contains(e)) common.push_back(e);
  if (common.empty()) return PermGroup::trivial(a.degree());
  return PermGroup::generated(common, lim);
}

PermGroup conjugate_subgroup(const PermGroup& h, const Perm& x, const Limits& lim) {
  std::vector<Perm> gens;
  for (const Perm& g : h.generators()) gens.push_back(g.conjugated_by(x));
  if (gens.empty()) return PermGroup::trivial(h.degree());
  return PermGroup::generated(gens, lim);
}

Quotient::Quotient(const PermGroup& g, const PermGroup& n, const Limits& lim)
    : image_(PermGroup::trivial(1)), kernel_(n) {
  if (!is_normal(g, n)) input_error("quotient: subgroup is not normal");
  u64 index = g.order() / n.order();
  if (index > lim.quotient_cap)
    resource_error("quotient: index " + std::to_string(index) + " exceeds cap");

  std::vector<Perm> nelems = n.elements(lim.enumeration_cap);
  auto canonical = [&](const Perm& rep) {
    Perm best = nelems[0] * rep;
    for (std::size_t i = 1; i < nelems.size(); ++i) {
      Perm c = nelems[i] * rep;
      if (c < best) best = c;
    }
    return best;
  };

  std::vector<Perm> reps;
  coset_of_.reserve(g.order() * 2);
  std::deque<Perm> queue;
  Perm id(g.degree());
  {
    Perm c0 = canonical(id);
    for (const Perm& ne : nelems) coset_of_[ne * c0] = 0;
    reps.push_back(c0);
    queue.push_back(c0);
  }
  while (!queue.empty()) {
    Perm r = queue.front();
    queue.pop_front();
    for (const Perm& gen : g.generators()) {
      Perm t = r * gen;
      if (coset_of_.contains(t)) continue;
      Perm c = canonical(t);
      std::uint32_t idx = static_cast<std::uint32_t>(reps.size());
      for (const Perm& ne : nelems) coset_of_[ne * c] = idx;
      reps.push_back(c);
      queue.push_back(c);
    }
  }
  if (reps.size() != index) internal_error("quotient: coset count mismatch");

  // Deterministic point order: sort cosets by canonical representative.
  std::sort(reps.begin(), reps.end());
  for (std::uint32_t i = 0; i < reps.size(); ++i)
    for (const Perm& ne : nelems) coset_of_[ne * reps[i]] = i;
  reps_ = std::move(reps);
  trivial_coset_ = coset_of_.at(id);

  std::vector<Perm> qgens;
  for (const Perm& gen : g.generators()) qgens.push_back(image(gen));
  image_ = qgens.empty() ? PermGroup::trivial(1) : PermGroup::generated(qgens, lim);
  if (image_.order() != index) internal_error("quotient: image order mismatch");
}

Perm Quotient::image(const Perm& g) const {
  std::vector<std::uint32_t> img(reps_.size());
  for (std::uint32_t i = 0; i < reps_.size(); ++i) img[i] = coset_of_.at(reps_[i] * g);
  return Perm(std::move(img));
}

Perm Quotient::preimage(const Perm& q) const {
  return reps_[q[static_cast<std::uint32_t>(trivial_coset_)]];
}

PermGroup Quotient::preimage_group(const PermGroup& sub, const Limits& lim) const {
  std::vector<Perm> gens = kernel_.generators();
  for (const Perm& q : sub.generators()) gens.push_back(preimage(q));
  if (gens.empty()) return kernel_;
  return PermGroup::generated(gens, lim);
}

} // namespace charvan
