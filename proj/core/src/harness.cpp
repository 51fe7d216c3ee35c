#include "charvan/harness.hpp"

#include "charvan/cache.hpp"
#include "charvan/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

namespace charvan {

const char* hyp_name(Hyp h) {
  switch (h) {
    case Hyp::Holds: return "holds";
    case Hyp::Vacuous: return "vacuous";
    case Hyp::Fails: return "fails";
    case Hyp::Unknown: return "unknown";
  }
  return "?";
}

const char* concl_name(Concl c) {
  switch (c) {
    case Concl::Holds: return "holds";
    case Concl::Fails: return "fails";
    case Concl::Skipped: return "skipped";
  }
  return "?";
}

GroupBundle::GroupBundle(PermGroup g, std::string name, Limits lim, int jobs,
                         std::string cache_dir)
    : group_(std::move(g)), name_(std::move(name)), lim_(lim), jobs_(jobs),
      cache_dir_(std::move(cache_dir)) {}

std::shared_ptr<const ClassData> GroupBundle::class_data() {
  std::lock_guard<std::mutex> lock(mu_);
  if (!cd_) cd_ = ClassData::compute(group_, lim_);
  return cd_;
}

std::shared_ptr<const CharacterTable> GroupBundle::table() {
  auto cd = class_data();
  std::lock_guard<std::mutex> lock(mu_);
  if (!table_ptr_) {
    if (!cache_dir_.empty()) {
      if (auto cached = load_cached_table(cache_dir_, group_, cd)) {
        table_ptr_ = std::make_shared<const CharacterTable>(std::move(*cached));
        return table_ptr_;
      }
    }
    table_ptr_ = std::make_shared<const CharacterTable>(CharacterTable::dixon(cd, jobs_));
    if (!cache_dir_.empty()) store_cached_table(cache_dir_, group_, *table_ptr_, name_);
  }
  return table_ptr_;
}

const VanishingProfile& GroupBundle::vanishing() {
  auto t = table();
  std::lock_guard<std::mutex> lock(mu_);
  if (!vp_) vp_ = vanishing_profile(t);
  return *vp_;
}

std::shared_ptr<const ClassClosures> GroupBundle::closures() {
  auto cd = class_data();
  std::lock_guard<std::mutex> lock(mu_);
  if (!closures_) closures_ = std::make_shared<const ClassClosures>(cd, lim_);
  return closures_;
}

std::shared_ptr<GroupBundle> Context::bundle(const PermGroup& g,
                                             const std::string& name_hint) {
  std::string key = group_cache_key(g);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = bundles_.find(key);
  if (it != bundles_.end()) return it->second;
  auto b = std::make_shared<GroupBundle>(g, name_hint, limits, jobs, cache_dir);
  bundles_.emplace(std::move(key), b);
  return b;
}

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     start)
        .count();
  }
};

VerificationReport make_report(const std::string& theorem, const std::string& gname,
                               const std::string& nname, const std::string& param) {
  VerificationReport r;
  r.theorem = theorem;
  r.group_name = gname;
  r.normal_name = nname;
  r.parameter = param;
  return r;
}

std::string size_list(const std::vector<SubgroupClass>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].size;
  }
  return os.str();
}

// Vanishing classes in n of prime power pi-element order.
std::vector<SubgroupClass> van_ppo_pi(const VanishingProfile& vp, const PermGroup& n,
                                      const PiSet& pi) {
  std::vector<SubgroupClass> out;
  for (const auto& sc : vanishing_in_subgroup(vp, n))
    if (is_prime_power(sc.element_order) && pi.is_pi_number(sc.element_order))
      out.push_back(sc);
  return out;
}

void require_normal(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(g, n)) input_error("theorem case: N is not normal in G");
}

std::string pi_param(const PiSet& pi) { return "pi=" + pi.str(); }

} // namespace

VerificationReport thm_A(Context& ctx, const PermGroup& g, const std::string& gname,
                         const PermGroup& n, const std::string& nname, u64 p) {
  Timer t;
  auto r = make_report("A", gname, nname, "p=" + std::to_string(p));
  require_normal(g, n);
  auto bg = ctx.bundle(g, gname);
  const VanishingProfile& vp = bg->vanishing();

  bool has_p_elements = n.order() % p == 0;
  bool nonvan = nonvanishing_p_elements(vp, n, p);
  if (!nonvan) {
    r.hypothesis = Hyp::Fails;
    r.conclusion = Concl::Skipped;
    r.witnesses.push_back("some p-element of N is vanishing in G");
  } else {
    r.hypothesis = has_p_elements ? Hyp::Holds : Hyp::Vacuous;
    PermGroup syl = sylow(n, p, ctx.limits);
    bool normal = is_normal(n, syl);
    r.conclusion = normal ? Concl::Holds : Concl::Fails;
    r.witnesses.push_back("Sylow " + std::to_string(p) + " of N has order " +
                          std::to_string(syl.order()) +
                          (normal ? ", normal" : ", NOT normal"));
  }
  r.millis = t.ms();
  return r;
}

VerificationReport thm_B(Context& ctx, const PermGroup& g, const std::string& gname,
                         const PermGroup& n, const std::string& nname, u64 p,
                         const PermGroup* h) {
  Timer t;
  auto r = make_report(n.order() == g.order() ? "MN" : "B", gname, nname,
                       "p=" + std::to_string(p));
  require_normal(g, n);
  auto bg = ctx.bundle(g, gname);
  auto cdg = bg->class_data();
  auto tg = bg->table();

  PermGroup sylg = h ? *h : sylow(g, p, ctx.limits);
  PermGroup p0 = intersection(sylg, n, ctx.limits);
  if (p0.order() != p_part(n.order(), p))
    input_error("thm_B: H meet N is not a Sylow p-subgroup of N");
  if (!is_normal(sylg, p0)) input_error("thm_B: P0 not normal in H");

  bool cond_i = is_normal(n, p0);

  // G-classes of nontrivial p-elements of N.
  std::vector<std::size_t> p_classes;
  for (std::size_t i = 0; i < cdg->count(); ++i) {
    u64 o = cdg->cls(i).element_order;
    if (o > 1 && o == p_part(o, p) && n.contains(cdg->cls(i).rep)) p_classes.push_back(i);
  }
  auto nonzero_on_p_classes = [&](const ClassFunction& f, std::string& why) {
    for (auto [row, mult] : constituents(*tg, f)) {
      (void)mult;
      for (std::size_t i : p_classes)
        if (tg->value(row, i).is_zero()) {
          why = "constituent X" + std::to_string(row) + " vanishes on class " +
                cycle_string(cdg->cls(i).rep);
          return false;
        }
    }
    return true;
  };

  auto b0 = ctx.bundle(p0, nname + "_Syl" + std::to_string(p));
  std::string why2;
  bool cond_ii = nonzero_on_p_classes(induce(ClassFunction::trivial(b0->class_data()), cdg), why2);

  // (iii) for every beta in Irr(H/P0), inflated and induced.
  bool cond_iii = true;
  std::string why3;
  {
    Quotient qh(sylg, p0, ctx.limits);
    auto bh = ctx.bundle(sylg, gname + "_Syl" + std::to_string(p));
    auto bq = ctx.bundle(qh.group(), "H/P0");
    auto tq = bq->table();
    for (std::size_t row = 0; row < tq->rows(); ++row) {
      ClassFunction beta = inflate(qh, bh->class_data(),
                                   ClassFunction::irreducible(*tq, row));
      std::string why;
      if (!nonzero_on_p_classes(induce(beta, cdg), why)) {
        cond_iii = false;
        why3 = "beta row " + std::to_string(row) + ": " + why;
        break;
      }
    }
  }

  bool equiv = (cond_i == cond_ii) && (cond_i == cond_iii);
  r.witnesses.push_back(std::string("(i) P0 normal in N: ") + (cond_i ? "yes" : "no"));
  r.witnesses.push_back(std::string("(ii) constituents of (1_P0)^G nonzero on p-elements: ") +
                        (cond_ii ? "yes" : "no") + (why2.empty() ? "" : " [" + why2 + "]"));
  r.witnesses.push_back(std::string("(iii) for all beta in Irr(H/P0): ") +
                        (cond_iii ? "yes" : "no") + (why3.empty() ? "" : " [" + why3 + "]"));

  if (n.order() == g.order()) {
    // Degree criterion of the N = G specialization.
    bool deg_ok = true;
    for (auto [row, mult] : constituents(*tg, induce(ClassFunction::trivial(b0->class_data()), cdg))) {
      (void)mult;
      if (tg->degree(row) % p == 0) { deg_ok = false; break; }
    }
    equiv = equiv && (cond_i == deg_ok);
    r.witnesses.push_back(std::string("(iii') p does not divide constituent degrees: ") +
                          (deg_ok ? "yes" : "no"));
  } else if (cond_i) {
    // The degree criterion genuinely fails for proper N; record when visible.
    for (auto [row, mult] : constituents(*tg, induce(ClassFunction::trivial(b0->class_data()), cdg))) {
      (void)mult;
      if (tg->degree(row) % p == 0) {
        r.witnesses.push_back("degree criterion not equivalent here: constituent X" +
                              std::to_string(row) + " has degree " +
                              std::to_string(tg->degree(row)));
        break;
      }
    }
  }

  r.hypothesis = Hyp::Holds;
  r.conclusion = equiv ? Concl::Holds : Concl::Fails;
  r.millis = t.ms();
  return r;
}

VerificationReport thm_C1(Context& ctx, const PermGroup& g, const std::string& gname,
                          const PermGroup& n, const std::string& nname, const PiSet& pi) {
  Timer t;
  auto r = make_report("C1", gname, nname, pi_param(pi));
  require_normal(g, n);
  auto bg = ctx.bundle(g, gname);
  const VanishingProfile& vp = bg->vanishing();
  auto bn = ctx.bundle(n, nname.empty() ? gname : nname);

  PiSeries series = upper_pi_series(n, pi, ctx.limits);
  auto sel = van_ppo_pi(vp, n, pi);
  bool sizes_ok = true;
  std::string bad;
  for (const auto& sc : sel)
    if (!pi.complement().is_pi_number(sc.size)) {
      sizes_ok = false;
      bad = cycle_string(vp.classes().cls(sc.class_index).rep) + " has |x^G|=" +
            std::to_string(sc.size);
      break;
    }

  if (!series.reached_top) {
    r.hypothesis = Hyp::Fails;
    r.witnesses.push_back("N is not pi-separable");
  } else if (!sizes_ok) {
    r.hypothesis = Hyp::Fails;
    r.witnesses.push_back("class size not a pi'-number: " + bad);
  } else {
    r.hypothesis = sel.empty() ? Hyp::Vacuous : Hyp::Holds;
    if (!sel.empty())
      r.witnesses.push_back("vanishing ppo pi-element class sizes in N: " + size_list(sel));
    PermGroup k = pi_core(*bn->closures(), pi.complement(), ctx.limits);
    Quotient q(n, k, ctx.limits);
    HallResult hq = hall(q.group(), pi, ctx.limits);
    HallResult hn = hall(n, pi, ctx.limits);
    bool ok = hq.found() && is_normal(q.group(), *hq.subgroup) &&
              is_nilpotent(*hq.subgroup, ctx.limits) && hn.found() &&
              is_nilpotent(*hn.subgroup, ctx.limits);
    r.conclusion = ok ? Concl::Holds : Concl::Fails;
    r.witnesses.push_back("N/O_pi'(N) has order " + std::to_string(q.group().order()) +
                          "; Hall pi " +
                          (hq.found() ? "order " + std::to_string(hq.subgroup->order())
                                      : "not found"));
  }
  r.millis = t.ms();
  return r;
}

VerificationReport thm_C2(Context& ctx, const PermGroup& g, const std::string& gname,
                          const PermGroup& n, const std::string& nname, const PiSet& pi) {
  Timer t;
  auto r = make_report("C2", gname, nname, pi_param(pi));
  require_normal(g, n);
  auto bg = ctx.bundle(g, gname);
  const VanishingProfile& vp = bg->vanishing();

  HallResult hn = hall(n, pi, ctx.limits);
  if (hn.kind == HallResult::Kind::Unknown) {
    r.hypothesis = Hyp::Unknown;
    r.conclusion = Concl::Skipped;
    r.witnesses.push_back("Hall pi-subgroup search exhausted: unknown");
    r.millis = t.ms();
    return r;
  }
  if (hn.kind == HallResult::Kind::None) {
    r.hypothesis = Hyp::Fails;
    r.conclusion = Concl::Skipped;
    r.witnesses.push_back("Hall_pi(N) is empty (proved by exhaustive search)");
    r.millis = t.ms();
    return r;
  }

  auto sel = van_ppo_pi(vp, n, pi);
  bool sizes_ok = true;
  std::string bad;
  for (const auto& sc : sel)
    if (!pi.is_pi_number(sc.size)) {
      sizes_ok = false;
      bad = cycle_string(vp.classes().cls(sc.class_index).rep) + " has |x^G|=" +
            std::to_string(sc.size);
      break;
    }
  if (!sizes_ok) {
    r.hypothesis = Hyp::Fails;
    r.conclusion = Concl::Skipped;
    r.witnesses.push_back("class size not a pi-number: " + bad);
    r.millis = t.ms();
    return r;
  }

  r.hypothesis = sel.empty() ? Hyp::Vacuous : Hyp::Holds;
  if (!sel.empty())
    r.witnesses.push_back("vanishing ppo pi-element class sizes in N: " + size_list(sel));
  bool normal = is_normal(n, *hn.subgroup);
  r.conclusion = normal ? Concl::Holds : Concl::Fails;
  r.witnesses.push_back("Hall pi-subgroup of N has order " +
                        std::to_string(hn.subgroup->order()) +
                        (normal ? ", normal" : ", NOT normal"));

  if (r.conclusion == Concl::Holds) {
    // Extended clause: pi-number sizes for the vanishing ppo pi'-elements
    // force nilpotent Hall pi'-subgroups.
    auto sel2 = van_ppo_pi(vp, n, pi.complement());
    bool extra = true;
    for (const auto& sc : sel2)
      if (!pi.is_pi_number(sc.size)) { extra = false; break; }
    if (extra) {
      HallResult hp = hall(n, pi.complement(), ctx.limits);
      if (!hp.found()) {
        r.conclusion = Concl::Fails;
        r.witnesses.push_back("extended clause: Hall pi'-subgroup not found");
      } else if (!is_nilpotent(*hp.subgroup, ctx.limits)) {
        r.conclusion = Concl::Fails;
        r.witnesses.push_back("extended clause: Hall pi'-subgroup not nilpotent");
      } else {
        r.witnesses.push_back("extended clause verified: Hall pi'-subgroup of order " +
                              std::to_string(hp.subgroup->order()) + " is nilpotent");
      }
    }
  }
  r.millis = t.ms();
  return r;
}

VerificationReport thm_pipi(Context& ctx, const PermGroup& g, const std::string& gname,
                            const PermGroup& n, const std::string& nname,
                            const PiSet& pi) {
  Timer t;
  auto r = make_report("PIPI", gname, nname, pi_param(pi));
  require_normal(g, n);
  auto bg = ctx.bundle(g, gname);
  const VanishingProfile& vp = bg->vanishing();
  auto bn = ctx.bundle(n, nname.empty() ? gname : nname);

  PiSeries series = upper_pi_series(n, pi, ctx.limits);
  if (!series.reached_top) {
    r.hypothesis = Hyp::Fails;
    r.witnesses.push_back("N is not pi-separable");
    r.millis = t.ms();
    return r;
  }
  auto sel = van_ppo_pi(vp, n, pi);
  bool ok = true;
  std::string bad;
  for (const auto& sc : sel)
    if (!pi.is_pi_number(sc.size) && !pi.complement().is_pi_number(sc.size)) {
      ok = false;
      bad = cycle_string(vp.classes().cls(sc.class_index).rep) + " has |x^G|=" +
            std::to_string(sc.size);
      break;
    }
  if (!ok) {
    r.hypothesis = Hyp::Fails;
    r.witnesses.push_back("class size neither pi- nor pi'-number: " + bad);
    r.millis = t.ms();
    return r;
  }
  r.hypothesis = sel.empty() ? Hyp::Vacuous : Hyp::Holds;
  if (!sel.empty())
    r.witnesses.push_back("vanishing ppo pi-element class sizes in N: " + size_list(sel));

  PermGroup k = pi_core(*bn->closures(), pi.complement(), ctx.limits);
  Quotient q(n, k, ctx.limits);
  HallResult hq = hall(q.group(), pi, ctx.limits);
  bool concl = hq.found() && is_normal(q.group(), *hq.subgroup) && series.pi_length <= 1;
  r.conclusion = concl ? Concl::Holds : Concl::Fails;
  r.witnesses.push_back("pi-length " + std::to_string(series.pi_length) +
                        "; N/O_pi'(N) Hall pi " +
                        (hq.found() ? (is_normal(q.group(), *hq.subgroup) ? "normal" : "NOT normal")
                                    : "not found"));
  r.millis = t.ms();
  return r;
}

VerificationReport thm_E(Context& ctx, const PermGroup& g, const std::string& gname,
                         const PermGroup& n, const std::string& nname, const PiSet& pi) {
  Timer t;
  auto r = make_report("E", gname, nname, pi_param(pi));
  require_normal(g, n);
  auto bg = ctx.bundle(g, gname);
  const VanishingProfile& vp = bg->vanishing();

  auto sel = van_ppo_pi(vp, n, pi);
  bool ok = true;
  std::string bad;
  for (const auto& sc : sel)
    if (!is_prime_power(sc.size)) {
      ok = false;
      bad = cycle_string(vp.classes().cls(sc.class_index).rep) + " has |x^G|=" +
            std::to_string(sc.size);
      break;
    }
  if (!ok) {
    r.hypothesis = Hyp::Fails;
    r.witnesses.push_back("class size not a prime power: " + bad);
    r.millis = t.ms();
    return r;
  }
  r.hypothesis = sel.empty() ? Hyp::Vacuous : Hyp::Holds;
  if (!sel.empty())
    r.witnesses.push_back("vanishing ppo pi-element class sizes in N: " + size_list(sel));

  PermGroup f = fitting(n, ctx.limits);
  PermGroup k = pi_core(f, pi.complement(), ctx.limits);
  Quotient q(n, k, ctx.limits);
  HallResult hq = hall(q.group(), pi, ctx.limits);
  if (hq.kind == HallResult::Kind::Unknown) {
    r.conclusion = Concl::Skipped;
    r.witnesses.push_back("Hall search on N/O_pi'(F(N)) returned unknown");
    r.millis = t.ms();
    return r;
  }
  bool concl = hq.found() && is_normal(q.group(), *hq.subgroup);
  r.witnesses.push_back("N/O_pi'(F(N)) has order " + std::to_string(q.group().order()) +
                        "; Hall pi " + (concl ? "normal" : "missing or not normal"));
  bool pi_covers = true;
  for (u64 pr : prime_divisors(n.order()))
    if (!pi.contains(pr)) { pi_covers = false; break; }
  if (pi_covers && n.order() > 1) {
    Quotient qf(n, f, ctx.limits);
    bool nil = is_nilpotent(qf.group(), ctx.limits);
    concl = concl && nil;
    r.witnesses.push_back(std::string("pi = pi(N): N/F(N) ") +
                          (nil ? "nilpotent" : "NOT nilpotent"));
  }
  r.conclusion = concl ? Concl::Holds : Concl::Fails;
  r.millis = t.ms();
  return r;
}

VerificationReport thm_D(Context& ctx, const PermGroup& g, const std::string& gname) {
  Timer t;
  auto r = make_report("D", gname, "", "");
  auto bg = ctx.bundle(g, gname);
  const VanishingProfile& vp = bg->vanishing();
  auto sel = van_ppo_pi(vp, g, PiSet({}, true)); // all primes
  bool ok = true;
  std::string bad;
  for (const auto& sc : sel)
    if (!is_prime_power(sc.size)) {
      ok = false;
      bad = cycle_string(vp.classes().cls(sc.class_index).rep) + " has |x^G|=" +
            std::to_string(sc.size);
      break;
    }
  if (!ok) {
    r.hypothesis = Hyp::Fails;
    r.witnesses.push_back("class size not a prime power: " + bad);
  } else {
    r.hypothesis = sel.empty() ? Hyp::Vacuous : Hyp::Holds;
    if (!sel.empty())
      r.witnesses.push_back("vanishing ppo class sizes: " + size_list(sel));
    PermGroup der = derived_subgroup(g, ctx.limits);
    bool nil = is_nilpotent(der, ctx.limits);
    r.conclusion = nil ? Concl::Holds : Concl::Fails;
    r.witnesses.push_back("G' has order " + std::to_string(der.order()) +
                          (nil ? ", nilpotent" : ", NOT nilpotent"));
  }
  r.millis = t.ms();
  return r;
}

VerificationReport thm_van_pi_prime(Context& ctx, const PermGroup& g,
                                    const std::string& gname, const PiSet& pi) {
  VerificationReport r = thm_C1(ctx, g, gname, g, gname, pi);
  Timer t;
  r.theorem = "VAN_PI'";
  r.normal_name.clear();
  if (r.conclusion == Concl::Holds) {
    PiSeries series = upper_pi_series(g, pi, ctx.limits);
    if (series.pi_length > 1) {
      r.conclusion = Concl::Fails;
      r.witnesses.push_back("pi-length " + std::to_string(series.pi_length) + " > 1");
    } else {
      r.witnesses.push_back("pi-length " + std::to_string(series.pi_length) + " <= 1");
    }
  }
  r.millis += t.ms();
  return r;
}

VerificationReport thm_van_pi(Context& ctx, const PermGroup& g, const std::string& gname,
                              const PiSet& pi) {
  VerificationReport r = thm_C2(ctx, g, gname, g, gname, pi);
  r.theorem = "VAN_PI";
  r.normal_name.clear();
  return r;
}

VerificationReport thm_core(Context& ctx, const PermGroup& g, const std::string& gname,
                            const PiSet& pi) {
  VerificationReport r = thm_pipi(ctx, g, gname, g, gname, pi);
  Timer t;
  r.theorem = "CORE";
  r.normal_name.clear();
  if (r.conclusion == Concl::Holds) {
    // The companion quotient: G / O_pi'(F(G)) has a normal Hall pi-subgroup.
    PermGroup f = fitting(g, ctx.limits);
    PermGroup k = pi_core(f, pi.complement(), ctx.limits);
    Quotient q(g, k, ctx.limits);
    HallResult hq = hall(q.group(), pi, ctx.limits);
    bool ok = hq.found() && is_normal(q.group(), *hq.subgroup);
    if (!ok) {
      r.conclusion = Concl::Fails;
      r.witnesses.push_back("G/O_pi'(F(G)) lacks a normal Hall pi-subgroup");
    } else {
      r.witnesses.push_back("G/O_pi'(F(G)) has a normal Hall pi-subgroup of order " +
                            std::to_string(hq.subgroup->order()));
    }
  }
  r.millis += t.ms();
  return r;
}

namespace {

struct SubCheck {
  std::string name;
  int status = 0; // 0 pass, 1 fail, 2 skipped
  std::string note;
};

} // namespace

VerificationReport lemma_suite(Context& ctx, const PermGroup& g, const std::string& gname,
                               const PermGroup& n, const std::string& nname,
                               const PiSet& pi) {
  Timer t;
  auto r = make_report("LEMMAS", gname, nname, pi_param(pi));
  require_normal(g, n);
  auto bg = ctx.bundle(g, gname);
  auto cdg = bg->class_data();
  auto tg = bg->table();
  const VanishingProfile& vp = bg->vanishing();
  auto bn = ctx.bundle(n, nname.empty() ? gname : nname);
  auto cdn = bn->class_data();

  std::vector<SubCheck> checks;
  auto add = [&](std::string name, int status, std::string note = "") {
    checks.push_back({std::move(name), status, std::move(note)});
  };

  // (a) |x^N| divides |x^G|
  {
    bool ok = true;
    for (std::size_t i = 0; i < cdn->count() && ok; ++i) {
      u64 szn = cdn->cls(i).size;
      u64 szg = cdg->cls(cdg->class_of(cdn->cls(i).rep)).size;
      ok = szg % szn == 0;
    }
    add("div_a:|x^N| divides |x^G|", ok ? 0 : 1);
  }

  // (b) |(xN)^{G/N}| divides |x^G|; (c) p-element cosets lift to p-elements.
  {
    Quotient q(g, n, ctx.limits);
    auto cdq = ClassData::compute(q.group(), ctx.limits);
    bool ok = true;
    for (std::size_t i = 0; i < cdg->count() && ok; ++i) {
      Perm img = q.image(cdg->cls(i).rep);
      ok = cdg->cls(i).size % cdq->cls(cdq->class_of(img)).size == 0;
    }
    add("div_b:|(xN)^{G/N}| divides |x^G|", ok ? 0 : 1);

    bool lift_ok = true;
    std::vector<Perm> nels = n.elements(ctx.limits.enumeration_cap);
    for (std::size_t i = 0; i < cdq->count() && lift_ok; ++i) {
      u64 o = cdq->cls(i).element_order;
      if (o <= 1 || !is_prime_power(o)) continue;
      u64 p = prime_divisors(o)[0];
      Perm rep = q.preimage(cdq->cls(i).rep);
      bool found = false;
      for (const Perm& ne : nels) {
        Perm y = ne * rep;
        u64 oy = y.order();
        if (oy == p_part(oy, p)) { found = true; break; }
      }
      lift_ok = found;
    }
    add("div_c:p-element cosets have p-element representatives", lift_ok ? 0 : 1);
  }

  // wielandt: x in Hall pi with |x^G| a pi-number lies in O_pi(N)
  {
    HallResult hn = hall(n, pi, ctx.limits);
    if (!hn.found()) {
      add("wielandt", 2, "no Hall pi-subgroup available");
    } else {
      PermGroup core = pi_core(*bn->closures(), pi, ctx.limits);
      bool ok = true;
      int used = 0;
      for (const Perm& x : hn.subgroup->elements(ctx.limits.enumeration_cap)) {
        u64 sz = cdg->cls(cdg->class_of(x)).size;
        if (!pi.is_pi_number(sz)) continue;
        ++used;
        if (!core.contains(x)) { ok = false; break; }
      }
      add("wielandt", ok ? 0 : 1, std::to_string(used) + " elements checked");
    }
  }

  // berkokazarin: prime power |x^G| forces [x^G,x^G] a p-group
  {
    bool ok = true;
    int used = 0;
    for (std::size_t i = 0; i < cdg->count() && ok; ++i) {
      u64 sz = cdg->cls(i).size;
      if (sz == 1) continue;
      if (!is_prime_power(sz)) continue;
      u64 p = prime_divisors(sz)[0];
      PermGroup com = class_commutator(g, cdg->cls(i).rep, ctx.limits);
      ok = com.order() == p_part(com.order(), p);
      ++used;
    }
    add("berkokazarin", ok ? 0 : 1, std::to_string(used) + " classes checked");
  }

  // in_fitting: pi-separable N (or single prime): |x^G| pi-number, x in N =>
  // [x^G,x^G] <= O_pi(N) and the image of x is central in F(N/O_pi(N))
  {
    bool applicable = pi.primes().size() == 1 && !pi.complemented();
    if (!applicable) applicable = upper_pi_series(n, pi, ctx.limits).reached_top;
    if (!applicable) {
      add("in_fitting", 2, "N not pi-separable and pi not a single prime");
    } else {
      PermGroup core = pi_core(*bn->closures(), pi, ctx.limits);
      Quotient q(n, core, ctx.limits);
      PermGroup zf = center(fitting(q.group(), ctx.limits), ctx.limits);
      bool ok = true;
      int used = 0;
      for (std::size_t i = 0; i < cdg->count() && ok; ++i) {
        const Perm& rep = cdg->cls(i).rep;
        if (!n.contains(rep)) continue;
        if (!pi.is_pi_number(cdg->cls(i).size)) continue;
        ++used;
        PermGroup com = class_commutator(g, rep, ctx.limits);
        ok = is_subgroup(core, com) || com.is_trivial();
        if (ok && !core.contains(rep)) ok = zf.contains(q.image(rep));
      }
      add("in_fitting", ok ? 0 : 1, std::to_string(used) + " classes checked");
    }
  }

  // brough: x in O_p(G) nontrivial, vanishing => p divides |x^G|
  {
    bool ok = true;
    int used = 0;
    for (u64 p : prime_divisors(g.order())) {
      PermGroup core = pi_core(*bg->closures(), PiSet::single(p), ctx.limits);
      if (core.is_trivial()) continue;
      for (const auto& sc : vanishing_in_subgroup(vp, core)) {
        ++used;
        if (sc.size % p != 0) { ok = false; break; }
      }
      if (!ok) break;
    }
    add("brough", ok ? 0 : 1, std::to_string(used) + " vanishing classes checked");
  }

  // nilphall / cor-dpss: all ppo pi-elements of N non-vanishing => nilpotent
  // normal Hall pi-subgroup; if |G:N| is a pi'-number, F Z(G) self-normalizing
  {
    bool hyp = true;
    for (const auto& sc : classes_in_normal_subgroup(vp, n))
      if (is_prime_power(sc.element_order) && pi.is_pi_number(sc.element_order) &&
          sc.vanishing) {
        hyp = false;
        break;
      }
    if (!hyp) {
      add("nilphall", 2, "some ppo pi-element of N vanishes in G");
    } else {
      PermGroup core = pi_core(*bn->closures(), pi, ctx.limits);
      bool ok = core.order() == pi.pi_part(n.order()) && is_nilpotent(core, ctx.limits);
      std::string note = "normal Hall pi-subgroup order " + std::to_string(core.order());
      if (ok && pi.complement().is_pi_number(g.order() / n.order())) {
        HallResult f = hall(g, pi.complement(), ctx.limits);
        if (!f.found()) {
          ok = false;
          note += "; pi-complement not found";
        } else {
          std::vector<Perm> gens = f.subgroup->generators();
          PermGroup zg = center(*bg->class_data(), ctx.limits);
          for (const Perm& z : zg.generators()) gens.push_back(z);
          PermGroup fz = gens.empty() ? PermGroup::trivial(g.degree())
                                      : PermGroup::generated(gens, ctx.limits);
          PermGroup norm = normalizer(g, fz, ctx.limits);
          ok = norm.order() == fz.order();
          note += "; F Z(G) order " + std::to_string(fz.order()) +
                  (ok ? " self-normalising" : " NOT self-normalising");
        }
      }
      add("nilphall", ok ? 0 : 1, note);
    }
  }

  // 2.2MN: p-defect zero rows are constituents of (1_P)^G vanishing on
  // nontrivial p-elements
  {
    bool ok = true;
    int used = 0;
    for (u64 p : prime_divisors(g.order())) {
      std::vector<std::size_t> dz;
      for (std::size_t row = 0; row < tg->rows(); ++row)
        if (tg->p_defect_zero(row, p)) dz.push_back(row);
      if (dz.empty()) continue;
      PermGroup sylp = sylow(g, p, ctx.limits);
      auto bsyl = ctx.bundle(sylp, gname + "_Syl" + std::to_string(p));
      ClassFunction ind = induce(ClassFunction::trivial(bsyl->class_data()), cdg);
      for (std::size_t row : dz) {
        ++used;
        Rational m = inner_product(ind, ClassFunction::irreducible(*tg, row));
        if (!is_integer(m) || m < 1) { ok = false; break; }
        for (std::size_t i = 0; i < cdg->count() && ok; ++i) {
          u64 o = cdg->cls(i).element_order;
          if (o > 1 && o == p_part(o, p) && !tg->value(row, i).is_zero()) ok = false;
        }
      }
      if (!ok) break;
    }
    add("mn22:p-defect zero", ok ? 0 : 1, std::to_string(used) + " rows checked");
  }

  // Theorem A tail: every ppo element of N non-vanishing => N nilpotent
  {
    bool hyp = true;
    for (const auto& sc : classes_in_normal_subgroup(vp, n))
      if (is_prime_power(sc.element_order) && sc.vanishing) { hyp = false; break; }
    if (!hyp)
      add("teoA_nilpotent", 2, "some ppo element of N vanishes in G");
    else
      add("teoA_nilpotent", is_nilpotent(n, ctx.limits) ? 0 : 1);
  }

  // carac: abelian iff no ppo class vanishes
  {
    bool abelian = cdg->count() == g.order();
    bool none_vanish = true;
    for (std::size_t i : prime_power_order_classes(*cdg))
      if (vp.vanishing[i]) { none_vanish = false; break; }
    add("carac", abelian == none_vanish ? 0 : 1);
  }

  // nilp: for nilpotent G, Van(G) = G minus Z(G)
  {
    if (!is_nilpotent(g, ctx.limits)) {
      add("nilp", 2, "G not nilpotent");
    } else {
      bool ok = true;
      for (std::size_t i = 1; i < cdg->count(); ++i)
        if (vp.vanishing[i] != (cdg->cls(i).size > 1)) { ok = false; break; }
      add("nilp", ok ? 0 : 1);
    }
  }

  // gru: G = H C_G(x) makes vanishing in G and in H agree
  {
    bool ok = true;
    int used = 0;
    std::vector<std::pair<std::string, PermGroup>> hs;
    hs.emplace_back(nname.empty() ? gname : nname, n);
    for (u64 p : prime_divisors(g.order()))
      hs.emplace_back(gname + "_Syl" + std::to_string(p), sylow(g, p, ctx.limits));
    for (auto& [hname, h] : hs) {
      if (h.order() <= 1 || h.order() == g.order()) continue;
      auto bh = ctx.bundle(h, hname);
      const VanishingProfile& vph = bh->vanishing();
      auto cdh = bh->class_data();
      for (std::size_t i = 0; i < cdh->count() && ok; ++i) {
        const Perm& x = cdh->cls(i).rep;
        PermGroup c = centralizer(g, x, ctx.limits);
        PermGroup meet = intersection(h, c, ctx.limits);
        if (h.order() / meet.order() * c.order() != g.order()) continue;
        ++used;
        ok = vp.vanishing[cdg->class_of(x)] == vph.vanishing[i];
      }
      if (!ok) break;
    }
    add("gru", ok ? 0 : 1, std::to_string(used) + " samples");
  }

  bool all_ok = true;
  for (const auto& c : checks) {
    std::string line = c.name + ": " +
                       (c.status == 0 ? "pass" : c.status == 1 ? "FAIL" : "skipped");
    if (!c.note.empty()) line += " (" + c.note + ")";
    r.witnesses.push_back(std::move(line));
    if (c.status == 1) all_ok = false;
  }
  r.hypothesis = Hyp::Holds;
  r.conclusion = all_ok ? Concl::Holds : Concl::Fails;
  r.millis = t.ms();
  return r;
}

VerificationReport inw_scan(Context& ctx, const PermGroup& g, const std::string& gname) {
  Timer t;
  auto r = make_report("INW_SCAN", gname, "", "");
  r.open_question = true;
  if (!is_solvable(g, ctx.limits)) {
    r.hypothesis = Hyp::Fails;
    r.conclusion = Concl::Skipped;
    r.witnesses.push_back("G is not solvable; scan skipped");
    r.millis = t.ms();
    return r;
  }
  auto bg = ctx.bundle(g, gname);
  const VanishingProfile& vp = bg->vanishing();
  auto cdg = bg->class_data();
  PermGroup f = fitting(*bg->closures(), ctx.limits);
  r.hypothesis = Hyp::Holds;
  std::vector<std::string> findings;
  for (std::size_t i = 0; i < cdg->count(); ++i) {
    if (vp.vanishing[i]) continue;
    if (!f.contains(cdg->cls(i).rep))
      findings.push_back(cycle_string(cdg->cls(i).rep));
  }
  if (findings.empty()) {
    r.conclusion = Concl::Holds;
    r.witnesses.push_back("all non-vanishing classes lie in F(G), order " +
                          std::to_string(f.order()));
  } else {
    r.conclusion = Concl::Fails;
    std::string joined;
    for (const auto& s : findings) joined += (joined.empty() ? "" : ", ") + s;
    r.witnesses.push_back("non-vanishing classes outside F(G) (reported, not asserted): " +
                          joined);
  }
  r.millis = t.ms();
  return r;
}

const std::vector<std::string> theorem_ids = {
    "A",      "B",    "MN",   "C1",     "C2",    "PIPI",    "E",
    "D",      "VAN_PI'", "VAN_PI", "CORE", "LEMMAS", "INW_SCAN"};

bool known_theorem_id(const std::string& id) {
  return std::find(theorem_ids.begin(), theorem_ids.end(), id) != theorem_ids.end();
}

std::vector<CorpusCase> default_corpus() {
  return {
      // Theorem A
      {"A", "S4", "A4", "2"},
      {"A", "S4", "A4", "3"},
      {"A", "S5", "A5", "2"},
      {"A", "S5", "A5", "3"},
      {"A", "S5", "A5", "5"},
      {"A", "A4", "V4", "2"},
      {"A", "SzSylNorm8", "Syl2", "2"},
      {"A", "SzSylNorm8", "Syl2", "7"},
      {"A", "AGammaL(1,8)", "AGL(1,8)", "2"},
      {"A", "Q8xC3", "Q8", "3"},
      {"A", "S6", "A6", "2"},
      // Theorem B (general N) and MN (N = G)
      {"B", "S4", "A4", "2"},
      {"B", "S4", "A4", "3"},
      {"B", "S5", "A5", "2"},
      {"B", "S5", "A5", "3"},
      {"B", "SL(2,3)", "Q8", "2"},
      {"B", "SzSylNorm8", "Syl2", "2"},
      {"B", "Q8", "C4", "2"},
      {"MN", "S4", "", "2"},
      {"MN", "S4", "", "3"},
      {"MN", "S3", "", "3"},
      {"MN", "Q8", "", "2"},
      {"MN", "SL(2,3)", "", "3"},
      {"MN", "SzSylNorm8", "", "2"},
      {"MN", "S6", "", "2"},
      // Theorem C(1)
      {"C1", "AGammaL(1,8)", "AGL(1,8)", "7"},
      {"C1", "S5", "A5", "3"},
      {"C1", "S4", "A4", "3"},
      {"C1", "S4", "A4", "2"},
      // Theorem C(2)
      {"C2", "Q8xC3", "Q8", "2"},
      {"C2", "D8xC3", "D8", "2"},
      {"C2", "S5", "A5", "2"},
      {"C2", "A5", "", "2,5"},
      {"C2", "A7", "", "2,5"},
      {"C2", "SzSylNorm8", "Syl2", "2"},
      // pi-pi'
      {"PIPI", "S4", "A4", "3"},
      {"PIPI", "S4", "", "2"},
      {"PIPI", "Q8xC3", "Q8", "2"},
      {"PIPI", "SzSylNorm8", "Syl2", "2"},
      // Theorem E
      {"E", "Q8", "", "2"},
      {"E", "S4", "", "2,3"},
      {"E", "Q8xC3", "", "2,3"},
      {"E", "SzSylNorm8", "", "2,7"},
      {"E", "S5", "A5", "2"},
      {"E", "Q16", "", "2"},
      // Theorem D
      {"D", "Q8", "", ""},
      {"D", "D8", "", ""},
      {"D", "SzSylNorm8", "", ""},
      {"D", "S4", "", ""},
      {"D", "SL(2,3)", "", ""},
      {"D", "C12", "", ""},
      {"D", "Q16", "", ""},
      {"D", "D24", "", ""},
      // N = G specializations
      {"VAN_PI'", "S3", "", "2"},
      {"VAN_PI'", "S4", "", "3"},
      {"VAN_PI'", "A5", "", "5"},
      {"VAN_PI", "Q8", "", "2"},
      {"VAN_PI", "D8", "", "2"},
      {"VAN_PI", "S4", "", "2"},
      {"CORE", "Q8", "", "2"},
      {"CORE", "S4", "", "3"},
      {"CORE", "S4", "", "2"},
      // Lemma bundle
      {"LEMMAS", "S4", "A4", "2"},
      {"LEMMAS", "S4", "", "3"},
      {"LEMMAS", "D8xC3", "", "2"},
      {"LEMMAS", "Q8", "C4", "2"},
      {"LEMMAS", "S5", "A5", "2"},
      {"LEMMAS", "SzSylNorm8", "Syl2", "2"},
      {"LEMMAS", "SL(2,3)", "Q8", "2"},
      {"LEMMAS", "AGammaL(1,8)", "AGL(1,8)", "7"},
      // Open-question scan
      {"INW_SCAN", "S4", "", ""},
      {"INW_SCAN", "S3", "", ""},
      {"INW_SCAN", "SL(2,3)", "", ""},
      {"INW_SCAN", "D8", "", ""},
      {"INW_SCAN", "Q8", "", ""},
      {"INW_SCAN", "Dic12", "", ""},
      {"INW_SCAN", "AGammaL(1,8)", "", ""},
      {"INW_SCAN", "SzSylNorm8", "", ""},
      {"INW_SCAN", "Q8xC3", "", ""},
      {"INW_SCAN", "S5", "", ""},
  };
}

namespace {

u64 parse_number(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    input_error(what + ": expected a positive integer, got '" + s + "'");
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    input_error(what + ": bad value '" + s + "'");
  }
}

u64 parse_prime(const std::string& s) {
  u64 p = parse_number(s, "prime parameter");
  if (!is_prime(p)) input_error("parameter " + s + " is not prime");
  return p;
}

PiSet parse_pi(const std::string& s) {
  std::set<u64> primes;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    primes.insert(parse_number(tok, "prime set"));
  }
  if (primes.empty()) input_error("theorem requires a nonempty prime set (--pi)");
  return PiSet(primes);
}

} // namespace

VerificationReport run_theorem(Context& ctx, const std::string& theorem,
                               const PermGroup& g, const std::string& gname,
                               const PermGroup* n, const std::string& nname,
                               const std::string& param) {
  const PermGroup& nn = n ? *n : g;
  const std::string nnm = n ? nname : std::string{};
  if (theorem == "A") return thm_A(ctx, g, gname, nn, nnm, parse_prime(param));
  if (theorem == "B") return thm_B(ctx, g, gname, nn, nnm, parse_prime(param));
  if (theorem == "MN") return thm_B(ctx, g, gname, g, "", parse_prime(param));
  if (theorem == "C1") return thm_C1(ctx, g, gname, nn, nnm, parse_pi(param));
  if (theorem == "C2") return thm_C2(ctx, g, gname, nn, nnm, parse_pi(param));
  if (theorem == "PIPI") return thm_pipi(ctx, g, gname, nn, nnm, parse_pi(param));
  if (theorem == "E") return thm_E(ctx, g, gname, nn, nnm, parse_pi(param));
  if (theorem == "D") return thm_D(ctx, g, gname);
  if (theorem == "VAN_PI'") return thm_van_pi_prime(ctx, g, gname, parse_pi(param));
  if (theorem == "VAN_PI") return thm_van_pi(ctx, g, gname, parse_pi(param));
  if (theorem == "CORE") return thm_core(ctx, g, gname, parse_pi(param));
  if (theorem == "LEMMAS") return lemma_suite(ctx, g, gname, nn, nnm, parse_pi(param));
  if (theorem == "INW_SCAN") return inw_scan(ctx, g, gname);
  input_error("unknown theorem id '" + theorem + "'");
}

VerificationReport run_case(Context& ctx, const CorpusCase& c) {
  BuiltinGroup bg = builtin_group(c.group, ctx.limits);
  const PermGroup* n = nullptr;
  if (!c.normal.empty()) {
    n = bg.normal(c.normal);
    if (!n) input_error("builtin '" + c.group + "' has no normal subgroup '" + c.normal + "'");
  }
  return run_theorem(ctx, c.theorem, bg.group, bg.name, n, c.normal, c.param);
}

CorpusReport run_corpus(Context& ctx, const std::vector<std::string>& selection,
                        int jobs) {
  for (const std::string& id : selection)
    if (!known_theorem_id(id)) input_error("unknown theorem id '" + id + "'");
  std::vector<CorpusCase> cases;
  for (const CorpusCase& c : default_corpus())
    if (std::find(selection.begin(), selection.end(), c.theorem) != selection.end())
      cases.push_back(c);

  CorpusReport report;
  report.reports.resize(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= cases.size()) break;
      try {
        report.reports[i] = run_case(ctx, cases[i]);
      } catch (const Error& e) {
        VerificationReport r = make_report(cases[i].theorem, cases[i].group,
                                           cases[i].normal, cases[i].param);
        r.hypothesis = Hyp::Unknown;
        r.conclusion = Concl::Skipped;
        r.witnesses.push_back(std::string("error: ") + e.what());
        report.reports[i] = std::move(r);
      }
    }
  };
  int nthreads = std::max(1, jobs);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::set<std::string> selected_ids;
  for (const CorpusCase& c : cases) selected_ids.insert(c.theorem);
  std::set<std::string> nonvacuous_ids;
  for (const VerificationReport& r : report.reports) {
    if (r.counterexample()) ++report.counterexamples;
    if (r.finding()) ++report.inw_findings;
    if (r.hypothesis == Hyp::Holds && r.conclusion != Concl::Skipped) {
      ++report.non_vacuous;
      nonvacuous_ids.insert(r.theorem);
    } else if (r.hypothesis == Hyp::Vacuous) {
      ++report.vacuous;
    } else {
      ++report.skipped;
    }
  }
  for (const std::string& id : selected_ids)
    if (!nonvacuous_ids.contains(id)) report.missing_nonvacuous.push_back(id);
  return report;
}

std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << r.theorem << " G=" << r.group_name;
  if (!r.normal_name.empty()) os << " N=" << r.normal_name;
  if (!r.parameter.empty()) os << " " << r.parameter;
  os << ": hypothesis " << hyp_name(r.hypothesis) << ", conclusion "
     << concl_name(r.conclusion);
  if (r.counterexample()) os << "  ** COUNTEREXAMPLE **";
  if (r.finding()) os << "  ** FINDING (open question) **";
  return os.str();
}

std::string corpus_report_text(const CorpusReport& r) {
  std::ostringstream os;
  for (const auto& rep : r.reports) {
    os << report_line(rep) << "\n";
    for (const auto& w : rep.witnesses) os << "    " << w << "\n";
  }
  os << "cases: " << r.reports.size() << ", non-vacuous: " << r.non_vacuous
     << ", vacuous: " << r.vacuous << ", skipped: " << r.skipped
     << ", counterexamples: " << r.counterexamples
     << ", open-question findings: " << r.inw_findings << "\n";
  if (!r.missing_nonvacuous.empty()) {
    os << "INSUFFICIENT COVERAGE: no non-vacuous instance for:";
    for (const auto& id : r.missing_nonvacuous) os << " " << id;
    os << "\n";
  }
  return os.str();
}

std::string corpus_report_json(const CorpusReport& r) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& rep : r.reports) {
    nlohmann::ordered_json e;
    e["theorem"] = rep.theorem;
    e["group"] = rep.group_name;
    e["normal"] = rep.normal_name;
    e["parameter"] = rep.parameter;
    e["hypothesis"] = hyp_name(rep.hypothesis);
    e["conclusion"] = concl_name(rep.conclusion);
    e["counterexample"] = rep.counterexample();
    e["finding"] = rep.finding();
    e["witnesses"] = rep.witnesses;
    e["millis"] = rep.millis;
    arr.push_back(std::move(e));
  }
  j["cases"] = std::move(arr);
  j["counterexamples"] = r.counterexamples;
  j["open_question_findings"] = r.inw_findings;
  j["non_vacuous"] = r.non_vacuous;
  j["vacuous"] = r.vacuous;
  j["skipped"] = r.skipped;
  j["missing_nonvacuous"] = r.missing_nonvacuous;
  j["ok"] = r.ok();
  return j.dump(2);
}

} // namespace charvan
