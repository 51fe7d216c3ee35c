// Acceptance suite: runs every acceptance criterion at its stated time limit
// and prints one pass/fail line per criterion. Exit status 0 iff all pass.

#include "charvan/cache.hpp"
#include "charvan/classfun.hpp"
#include "charvan/harness.hpp"
#include "charvan/subgroups.hpp"
#include "charvan/vanishing.hpp"

#include "oracle_numeric.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace charvan;
using namespace charvan::testutil;

namespace {

#define MUST(cond)                                                     \
  do {                                                                 \
    if (!(cond)) throw std::runtime_error("check failed: " #cond);     \
  } while (0)

struct Runner {
  int failures = 0;
  Context ctx;

  void run(const std::string& label, double limit_ms,
           const std::function<void()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      body();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    bool ok = error.empty() && (limit_ms <= 0 || ms <= limit_ms);
    if (!ok) ++failures;
    if (limit_ms > 0)
      std::printf("%-4s %s (%.1f ms / limit %.0f ms)\n", ok ? "PASS" : "FAIL",
                  label.c_str(), ms, limit_ms);
    else
      std::printf("%-4s %s (%.1f ms)\n", ok ? "PASS" : "FAIL", label.c_str(), ms);
    if (!error.empty()) std::printf("     %s\n", error.c_str());
  }
};

const std::vector<std::string> corpus_groups = {
    "trivial", "C2",  "C3",  "C6",    "C12",   "C24",   "V4",
    "S3",      "S4",  "S5",  "S6",    "A4",    "A5",    "A6",
    "A7",      "D8",  "D10", "D12",   "D16",   "D24",   "Dic12",
    "Q8",      "Q16", "SL(2,3)", "AGammaL(1,8)", "SzSylNorm8", "Q8xC3",
    "D8xC3"};

std::string run_cli(const std::string& args) {
  std::string cmd = std::string(CHARVAN_CLI) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  if (pclose(pipe) != 0) throw std::runtime_error("command failed: " + cmd);
  return out;
}

} // namespace

int main() {
  Runner r;

  // 1: (1_V4)^S4 has exactly three distinct constituents, one of degree 2.
  r.run("criterion 1: constituents of (1_V4)^S4", 1000, [&] {
    BuiltinGroup s4 = builtin_group("S4");
    auto b = r.ctx.bundle(s4.group, "S4");
    auto cdv = ClassData::compute(*s4.normal("V4"));
    auto cons = constituents(*b->table(), induce(ClassFunction::trivial(cdv), b->class_data()));
    MUST(cons.size() == 3);
    int deg2 = 0;
    for (auto [row, mult] : cons)
      if (b->table()->degree(row) == 2) ++deg2;
    MUST(deg2 == 1);
  });

  // 2: a nontrivial beta in Irr(P/V4) whose induced constituents never vanish
  // on the 2-element classes of A4.
  r.run("criterion 2: nontrivial beta over Syl2(S4)/V4", 1000, [&] {
    BuiltinGroup s4 = builtin_group("S4");
    auto b = r.ctx.bundle(s4.group, "S4");
    auto tg = b->table();
    auto cdg = b->class_data();
    const PermGroup& a4 = *s4.normal("A4");
    PermGroup p = sylow(s4.group, 2);
    Quotient q(p, *s4.normal("V4"));
    auto cdp = ClassData::compute(p);
    auto cdq = ClassData::compute(q.group());
    CharacterTable tq = CharacterTable::dixon(cdq);
    MUST(tq.rows() == 2);

    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < cdg->count(); ++i) {
      u64 o = cdg->cls(i).element_order;
      if (o > 1 && o == p_part(o, 2) && a4.contains(cdg->cls(i).rep)) targets.push_back(i);
    }
    MUST(!targets.empty());

    bool exists = false;
    for (std::size_t row = 0; row < tq.rows(); ++row) {
      ClassFunction beta = inflate(q, cdp, ClassFunction::irreducible(tq, row));
      bool trivial = beta.equals(ClassFunction::trivial(cdp));
      if (trivial) continue;
      bool all_nonzero = true;
      for (auto [crow, mult] : constituents(*tg, induce(beta, cdg)))
        for (std::size_t i : targets)
          if (tg->value(crow, i).is_zero()) all_nonzero = false;
      if (all_nonzero) exists = true;
    }
    MUST(exists);
  });

  // 3: inside A5, the vanishing 3-element classes of S5 all have size 20, and
  // the Sylow 3-subgroup of A5 is not normal.
  r.run("criterion 3: S5 with N = A5, pi = {3}", 2000, [&] {
    BuiltinGroup s5 = builtin_group("S5");
    auto b = r.ctx.bundle(s5.group, "S5");
    const PermGroup& a5 = *s5.normal("A5");
    int found = 0;
    for (const auto& sc : vanishing_in_subgroup(b->vanishing(), a5)) {
      if (sc.element_order != p_part(sc.element_order, 3) || sc.element_order == 1)
        continue;
      MUST(sc.size == 20);
      ++found;
    }
    MUST(found > 0);
    MUST(!is_normal(a5, sylow(a5, 3)));
  });

  // 4: Q8 with its cyclic normal subgroup of order 4: abelian, and it meets
  // the vanishing set.
  r.run("criterion 4: Q8 with N = C4", 1000, [&] {
    BuiltinGroup q8 = builtin_group("Q8");
    auto b = r.ctx.bundle(q8.group, "Q8");
    const PermGroup& n = *q8.normal("C4");
    auto cdn = ClassData::compute(n);
    MUST(cdn->count() == n.order()); // abelian
    MUST(!vanishing_in_subgroup(b->vanishing(), n).empty());
  });

  // 5: order-448 normalizer: Van(G) misses the Sylow 2-subgroup entirely,
  // N is not central, and F Z(G) is self-normalising for a 2-complement F.
  r.run("criterion 5: order-448 normalizer", 10000, [&] {
    BuiltinGroup sz = builtin_group("SzSylNorm8");
    auto b = r.ctx.bundle(sz.group, "SzSylNorm8");
    const PermGroup& n = *sz.normal("Syl2");
    MUST(sz.group.order() == 448);
    MUST(n.order() == 64);
    MUST(is_normal(sz.group, n));
    MUST(vanishing_in_subgroup(b->vanishing(), n).empty());
    PermGroup z = center(sz.group);
    MUST(n.order() > intersection(n, z).order()); // N minus Z(G) nonempty
    HallResult f = hall(sz.group, PiSet({2}).complement());
    MUST(f.found());
    MUST(f.subgroup->order() == 7);
    std::vector<Perm> gens = f.subgroup->generators();
    for (const Perm& zz : z.generators()) gens.push_back(zz);
    PermGroup fz = PermGroup::generated(gens);
    MUST(normalizer(sz.group, fz).order() == fz.order());
  });

  // 6: the affine semilinear group of order 168 with its Hall 3'-subgroup.
  r.run("criterion 6: AGammaL(1,8) with N = Hall 3'", 5000, [&] {
    VerificationReport rep = run_case(r.ctx, {"C1", "AGammaL(1,8)", "AGL(1,8)", "7"});
    MUST(rep.hypothesis == Hyp::Holds || rep.hypothesis == Hyp::Vacuous);
    MUST(rep.conclusion == Concl::Holds);
  });

  // 7: full corpus sweep.
  r.run("criterion 7: theorem sweep over the corpus", 300000, [&] {
    CorpusReport rep = run_corpus(r.ctx, theorem_ids, 4);
    MUST(rep.reports.size() >= 40);
    MUST(rep.counterexamples == 0);
    MUST(rep.inw_findings == 0);
    MUST(rep.missing_nonvacuous.empty());
    std::set<std::string> ids;
    for (const auto& c : rep.reports) ids.insert(c.theorem);
    MUST(ids.size() == theorem_ids.size());
  });

  // 8: exact table invariants across the corpus.
  r.run("criterion 8: table invariants (orders up to 2520)", 0, [&] {
    for (const std::string& name : corpus_groups) {
      auto b = r.ctx.bundle(builtin_group(name).group, name);
      auto t = b->table();
      MUST(t->order() <= 2520);
      OrthogonalityReport rep = verify_orthogonality(*t);
      if (!rep.ok) throw std::runtime_error(name + ": " + rep.violation);
      u64 linear = 0;
      for (std::size_t row = 0; row < t->rows(); ++row)
        if (t->degree(row) == 1) ++linear;
      MUST(linear == t->order() / derived_subgroup(b->group()).order());
      for (std::size_t row = 0; row < t->rows(); ++row) {
        if (t->degree(row) == 1) continue;
        bool zero_ppo = false;
        for (std::size_t i = 0; i < t->columns(); ++i)
          if (t->value(row, i).is_zero() &&
              is_prime_power(t->classes().cls(i).element_order))
            zero_ppo = true;
        MUST(zero_ppo);
      }
    }
  });

  // 9: independent numeric oracle agreement for orders <= 500.
  r.run("criterion 9: numeric oracle equivalence (orders <= 500)", 0, [&] {
    for (const std::string& name : corpus_groups) {
      PermGroup g = builtin_group(name).group;
      if (g.order() > 500) continue;
      auto b = r.ctx.bundle(g, name);
      if (!tables_match(*b->table(), numeric_character_table(*b->class_data())))
        throw std::runtime_error(name + ": numeric oracle mismatch");
    }
  });

  // 10: Frobenius reciprocity and induced degrees, 200+ random samples.
  r.run("criterion 10: Frobenius reciprocity on 200 samples", 0, [&] {
    std::mt19937 rng(20240817);
    std::vector<std::string> names = {"S4", "S5", "A5", "SL(2,3)", "D12",
                                      "AGammaL(1,8)", "Q8xC3", "SzSylNorm8"};
    int samples = 0;
    while (samples < 200) {
      const std::string& name = names[rng() % names.size()];
      BuiltinGroup bg = builtin_group(name);
      auto b = r.ctx.bundle(bg.group, name);
      auto cdg = b->class_data();
      auto tg = b->table();
      // subgroup pool: Sylows and cyclic subgroups of class representatives
      std::vector<PermGroup> pool;
      for (u64 p : prime_divisors(bg.group.order())) pool.push_back(sylow(bg.group, p));
      for (std::size_t i = 1; i < cdg->count(); i += 2)
        pool.push_back(PermGroup::generated({cdg->cls(i).rep}));
      const PermGroup& h = pool[rng() % pool.size()];
      auto bh = r.ctx.bundle(h, name + "_sub");
      auto th = bh->table();
      std::size_t brow = rng() % th->rows();
      std::size_t crow = rng() % tg->rows();
      ClassFunction beta = ClassFunction::irreducible(*th, brow);
      ClassFunction chi = ClassFunction::irreducible(*tg, crow);
      ClassFunction ind = induce(beta, cdg);
      if (inner_product(ind, chi) != inner_product(beta, restrict_to(chi, bh->class_data())))
        throw std::runtime_error(name + ": reciprocity violated");
      Rational expect(static_cast<long>((bg.group.order() / h.order()) * th->degree(brow)));
      if (ind.at_identity().to_rational().value() != expect)
        throw std::runtime_error(name + ": induced degree wrong");
      ++samples;
    }
  });

  // 11: the table command is byte-identical across thread counts.
  r.run("criterion 11: determinism across --jobs 1 and --jobs 8", 0, [&] {
    for (const std::string& mode : {std::string(""), std::string("--json")}) {
      std::string a = run_cli("table builtin:SzSylNorm8 --jobs 1 " + mode);
      std::string b = run_cli("table builtin:SzSylNorm8 --jobs 8 " + mode);
      MUST(!a.empty());
      MUST(a == b);
    }
  });

  // engineering targets
  r.run("performance: S6 table", 5000, [&] {
    auto cd = ClassData::compute(builtin_group("S6").group);
    CharacterTable t = CharacterTable::dixon(cd);
    MUST(t.rows() == 11);
  });
  r.run("performance: order-448 table", 2000, [&] {
    auto cd = ClassData::compute(builtin_group("SzSylNorm8").group);
    CharacterTable t = CharacterTable::dixon(cd);
    MUST(t.rows() == 10);
  });
  r.run("performance: A7 table", 60000, [&] {
    auto cd = ClassData::compute(builtin_group("A7").group);
    CharacterTable t = CharacterTable::dixon(cd);
    MUST(t.rows() == 9);
  });

  if (r.failures == 0)
    std::printf("acceptance: all criteria passed\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", r.failures);
  return r.failures == 0 ? 0 : 1;
}
