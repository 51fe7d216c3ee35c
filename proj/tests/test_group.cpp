#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvan/error.hpp"
#include "charvan/group.hpp"

#include "common.hpp"

#include <map>
#include <random>

using namespace charvan;
using namespace charvan::testutil;

TEST_CASE("group construction and order") {
  CHECK(group("S4").order() == 24);
  CHECK(group("A5").order() == 60);
  CHECK(group("Q8").order() == 8);
  CHECK_THROWS_AS(PermGroup::generated({}), Error);
  CHECK_THROWS_AS(PermGroup::generated({Perm(3), Perm(4)}), Error);
}

TEST_CASE("order cap rejects oversized groups") {
  Limits lim;
  lim.build_order_cap = 100;
  CHECK_THROWS_AS(PermGroup::generated(
                      {parse_perm("(1 2)", 7), parse_perm("(1 2 3 4 5 6 7)", 7)}, lim),
                  Error);
}

TEST_CASE("random generator sets: order and membership match the closure") {
  std::mt19937 rng(777);
  auto random_perm = [&](std::uint32_t deg) {
    std::vector<std::uint32_t> img(deg);
    for (std::uint32_t i = 0; i < deg; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng);
    return Perm(img);
  };
  int done = 0;
  while (done < 30) {
    std::uint32_t deg = 4 + rng() % 4; // degrees 4..7, orders at most 5040
    std::vector<Perm> gens{random_perm(deg), random_perm(deg)};
    PermGroup g = PermGroup::generated(gens);
    std::vector<Perm> closure = naive_closure(gens);
    CHECK(g.order() == closure.size());
    CHECK(g.elements() == closure);
    ++done;
  }
}

TEST_CASE("membership agrees with multiplication closure") {
  for (const char* name : {"S4", "A4", "Q8", "D12", "SL(2,3)", "C24", "S5", "Dic12"}) {
    PermGroup g = group(name);
    std::vector<Perm> closure = naive_closure(g.generators());
    CHECK(closure.size() == g.order());
    CHECK(g.elements() == closure);
    for (const Perm& e : closure) CHECK(g.contains(e));
  }
  // negative membership
  PermGroup a4 = group("A4");
  CHECK_FALSE(a4.contains(parse_perm("(1 2)", 4)));
}

TEST_CASE("conjugacy classes in canonical order") {
  auto cd = ClassData::compute(group("S4"));
  std::vector<u64> sizes;
  for (const auto& c : cd->classes()) sizes.push_back(c.size);
  CHECK(sizes == std::vector<u64>{1, 3, 6, 6, 8});
  CHECK(cd->cls(0).rep.is_identity());

  auto q8 = ClassData::compute(group("Q8"));
  sizes.clear();
  for (const auto& c : q8->classes()) sizes.push_back(c.size);
  CHECK(sizes == std::vector<u64>{1, 1, 2, 2, 2});

  auto c12 = ClassData::compute(group("C12"));
  CHECK(c12->count() == 12);
  for (const auto& c : c12->classes()) CHECK(c.size == 1);
}

TEST_CASE("class invariants across the corpus") {
  for (const char* name : {"S4", "S5", "A5", "Q8", "D12", "SL(2,3)", "SzSylNorm8"}) {
    auto cd = ClassData::compute(group(name));
    u64 total = 0;
    for (const auto& c : cd->classes()) {
      total += c.size;
      CHECK(cd->order() % c.size == 0);
      CHECK(c.size * c.centralizer_order == cd->order());
      CHECK(c.rep.order() == c.element_order);
    }
    CHECK(total == cd->order());
  }
}

TEST_CASE("centralizers") {
  PermGroup s4 = group("S4");
  CHECK(centralizer(s4, parse_perm("(1 2 3 4)", 4)).order() == 4);
  CHECK(centralizer(s4, Perm(4)).order() == 24);
  PermGroup q8 = group("Q8");
  Perm i = q8.generators()[0];
  CHECK(centralizer(q8, i).order() == 4);
  CHECK_THROWS_AS(centralizer(s4, parse_perm("(1 2)", 5)), Error);
}

TEST_CASE("normal closures") {
  PermGroup s4 = group("S4");
  CHECK(normal_closure(s4, {parse_perm("(1 2 3)", 4)}).order() == 12);
  PermGroup q8 = group("Q8");
  Perm i = q8.generators()[0];
  Perm z = i.pow(2); // central
  CHECK(normal_closure(q8, {z}).order() == 2);
  CHECK(normal_closure(q8, {i}).order() == 4);
}

TEST_CASE("power maps") {
  auto cd = ClassData::compute(group("S4"));
  std::size_t c4 = cd->class_of(parse_perm("(1 2 3 4)", 4));
  std::size_t c22 = cd->class_of(parse_perm("(1 2)(3 4)", 4));
  CHECK(cd->power_class(c4, 2) == c22);
  for (std::size_t i = 0; i < cd->count(); ++i) {
    CHECK(cd->power_class(i, 1) == i);
    CHECK(cd->power_class(i, -1) == i); // S4 is ambivalent
  }
  // composition: the t-th power of the s-th power is the (ts)-th power
  for (i64 s : {2, 3, 5})
    for (i64 t : {2, 7, 11})
      for (std::size_t i = 0; i < cd->count(); ++i)
        CHECK(cd->power_class(cd->power_class(i, s), t) == cd->power_class(i, s * t));
}

TEST_CASE("quotients by normal subgroups") {
  PermGroup s4 = group("S4");
  BuiltinGroup bs4 = builtin_group("S4");
  const PermGroup& a4 = *bs4.normal("A4");
  const PermGroup& v4 = *bs4.normal("V4");

  Quotient q1(s4, a4);
  CHECK(q1.group().order() == 2);

  Quotient q2(s4, v4);
  CHECK(q2.group().order() == 6);
  // nonabelian image of order 6
  const auto& qgens = q2.group().generators();
  bool commutes = true;
  for (const Perm& a : qgens)
    for (const Perm& b : qgens)
      if (!(a * b == b * a)) commutes = false;
  CHECK_FALSE(commutes);

  PermGroup q8 = group("Q8");
  PermGroup z = normal_closure(q8, {q8.generators()[0].pow(2)});
  Quotient q3(q8, z);
  CHECK(q3.group().order() == 4);
  for (const Perm& e : q3.group().elements())
    CHECK(e.order() <= 2); // elementary abelian

  // epimorphism: kernel and homomorphism property
  for (const Perm& g1 : s4.generators())
    for (const Perm& g2 : s4.generators())
      CHECK(q2.image(g1 * g2) == q2.image(g1) * q2.image(g2));
  for (const Perm& e : v4.elements()) CHECK(q2.image(e).is_identity());

  CHECK_THROWS_AS(Quotient(s4, PermGroup::generated({parse_perm("(1 2)", 4)})), Error);
}

TEST_CASE("quotient class sizes divide ambient class sizes") {
  for (auto [gname, nname] : std::vector<std::pair<const char*, const char*>>{
           {"S4", "V4"}, {"S4", "A4"}, {"Q8", "C4"}, {"SL(2,3)", "Q8"}}) {
    BuiltinGroup bg = builtin_group(gname);
    const PermGroup* n = bg.normal(nname);
    REQUIRE(n != nullptr);
    Quotient q(bg.group, *n);
    auto cdg = ClassData::compute(bg.group);
    auto cdq = ClassData::compute(q.group());
    for (std::size_t i = 0; i < cdg->count(); ++i) {
      u64 up = cdg->cls(i).size;
      u64 down = cdq->cls(cdq->class_of(q.image(cdg->cls(i).rep))).size;
      CHECK(up % down == 0);
    }
  }
}

TEST_CASE("normality tests") {
  BuiltinGroup s4 = builtin_group("S4");
  CHECK(is_normal(s4.group, *s4.normal("A4")));
  CHECK_FALSE(is_normal(s4.group, PermGroup::generated({parse_perm("(1 2)", 4)})));
  PermGroup q8 = group("Q8");
  PermGroup z = normal_closure(q8, {q8.generators()[0].pow(2)});
  CHECK(is_normal(q8, z));
  PermGroup s5 = group("S5");
  CHECK_THROWS_AS(is_normal(s4.group, s5), Error); // not a subgroup
}

TEST_CASE("intersections") {
  BuiltinGroup s4 = builtin_group("S4");
  PermGroup syl2 = PermGroup::generated(
      {parse_perm("(1 2 3 4)", 4), parse_perm("(1 3)", 4)});
  CHECK(syl2.order() == 8);
  PermGroup meet = intersection(syl2, *s4.normal("A4"));
  CHECK(meet.order() == 4);
}
