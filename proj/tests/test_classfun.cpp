#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvan/classfun.hpp"
#include "charvan/error.hpp"
#include "charvan/subgroups.hpp"

#include "common.hpp"

#include <random>

using namespace charvan;
using namespace charvan::testutil;

namespace {

struct S4Data {
  BuiltinGroup bs4 = builtin_group("S4");
  std::shared_ptr<const ClassData> cd = ClassData::compute(bs4.group);
  CharacterTable t = CharacterTable::dixon(cd);
  std::shared_ptr<const ClassData> cdv = ClassData::compute(*bs4.normal("V4"));
  std::shared_ptr<const ClassData> cda = ClassData::compute(*bs4.normal("A4"));
};

} // namespace

TEST_CASE("induction from V4 to S4") {
  S4Data d;
  ClassFunction ind = induce(ClassFunction::trivial(d.cdv), d.cd);
  CHECK(ind.at_identity().equals(Cyclotomic::from_int(6))); // |G:H| * 1
  auto cons = constituents(d.t, ind);
  CHECK(cons.size() == 3);
  u64 deg2 = 0, deg2_mult = 0;
  for (auto [row, mult] : cons)
    if (d.t.degree(row) == 2) {
      ++deg2;
      deg2_mult = mult;
    }
  CHECK(deg2 == 1);
  // the induced character is the inflated regular character of S4/V4:
  // multiplicities 1, 1, 2
  CHECK(deg2_mult == 2);
  CHECK(inner_product(ind, ClassFunction::trivial(d.cd)) == 1);
}

TEST_CASE("induction from the full group is the identity") {
  S4Data d;
  for (std::size_t r = 0; r < d.t.rows(); ++r) {
    ClassFunction chi = ClassFunction::irreducible(d.t, r);
    CHECK(induce(chi, d.cd).equals(chi));
  }
}

TEST_CASE("index-two induction decomposes as trivial plus sign") {
  S4Data d;
  ClassFunction ind = induce(ClassFunction::trivial(d.cda), d.cd);
  auto cons = constituents(d.t, ind);
  REQUIRE(cons.size() == 2);
  CHECK(d.t.degree(cons[0].first) == 1);
  CHECK(d.t.degree(cons[1].first) == 1);
  CHECK(cons[0].second == 1);
  CHECK(cons[1].second == 1);
}

TEST_CASE("restriction") {
  S4Data d;
  ClassFunction chi2 = ClassFunction::irreducible(d.t, 2); // degree 2
  ClassFunction res = restrict_to(chi2, d.cdv);
  CHECK(res.at_identity().equals(Cyclotomic::from_int(2)));
  CHECK(restrict_to(ClassFunction::trivial(d.cd), d.cdv)
            .equals(ClassFunction::trivial(d.cdv)));
  // decomposes into V4-irreducibles with nonnegative multiplicities summing
  // to the degree
  CharacterTable tv = CharacterTable::dixon(d.cdv);
  auto cons = constituents(tv, res);
  u64 total = 0;
  for (auto [row, mult] : cons) total += mult * tv.degree(row);
  CHECK(total == 2);
}

TEST_CASE("inner products") {
  S4Data d;
  for (std::size_t r = 0; r < d.t.rows(); ++r)
    for (std::size_t s = 0; s < d.t.rows(); ++s) {
      Rational ip = inner_product(ClassFunction::irreducible(d.t, r),
                                  ClassFunction::irreducible(d.t, s));
      CHECK(ip == (r == s ? 1 : 0));
    }
  // Frobenius reciprocity with trivial characters: [(1_H)^G, 1_G] = 1
  for (auto cdh : {d.cdv, d.cda}) {
    ClassFunction ind = induce(ClassFunction::trivial(cdh), d.cd);
    CHECK(inner_product(ind, ClassFunction::trivial(d.cd)) == 1);
  }
  CHECK_THROWS_AS(
      inner_product(ClassFunction::trivial(d.cd), ClassFunction::trivial(d.cdv)),
      Error);
}

TEST_CASE("constituents validates characters") {
  S4Data d;
  // the regular character decomposes with multiplicity = degree
  {
    auto cd3 = ClassData::compute(group("S3"));
    CharacterTable t3 = CharacterTable::dixon(cd3);
    std::vector<Cyclotomic> vals(cd3->count());
    vals[0] = Cyclotomic::from_int(6);
    ClassFunction reg(cd3, std::move(vals));
    auto cons = constituents(t3, reg);
    REQUIRE(cons.size() == t3.rows());
    for (auto [row, mult] : cons) CHECK(mult == t3.degree(row));
  }
  // a non-character is rejected
  std::vector<Cyclotomic> vals(d.cd->count());
  vals[0] = Cyclotomic::from_int(1);
  vals[1] = Cyclotomic::from_rational(make_rational(1, 2));
  CHECK_THROWS_AS(constituents(d.t, ClassFunction(d.cd, std::move(vals))), Error);
}

TEST_CASE("inflation from quotients") {
  S4Data d;
  Quotient q(d.bs4.group, *d.bs4.normal("A4"));
  auto cdq = ClassData::compute(q.group());
  CharacterTable tq = CharacterTable::dixon(cdq);
  REQUIRE(tq.rows() == 2);
  ClassFunction lift0 = inflate(q, d.cd, ClassFunction::irreducible(tq, 0));
  ClassFunction lift1 = inflate(q, d.cd, ClassFunction::irreducible(tq, 1));
  CHECK(lift0.equals(ClassFunction::trivial(d.cd)));
  CHECK(lift1.equals(ClassFunction::irreducible(d.t, 1))); // the sign character
  // the kernel of an inflated character contains N
  CHECK(is_subgroup(kernel(lift1), *d.bs4.normal("A4")));

  // P/V4 has exactly two irreducibles (index 2)
  PermGroup p = sylow(d.bs4.group, 2);
  Quotient qp(p, *d.bs4.normal("V4"));
  CHECK(CharacterTable::dixon(ClassData::compute(qp.group())).rows() == 2);
}

TEST_CASE("inflation preserves constituent structure") {
  S4Data d;
  Quotient q(d.bs4.group, *d.bs4.normal("V4"));
  auto cdq = ClassData::compute(q.group());
  CharacterTable tq = CharacterTable::dixon(cdq);
  // a character of the quotient with several constituents
  ClassFunction sum = ClassFunction::irreducible(tq, 0) +
                      ClassFunction::irreducible(tq, 2).scaled(make_rational(2));
  auto cons_q = constituents(tq, sum);
  ClassFunction lifted = inflate(q, d.cd, sum);
  auto cons_g = constituents(d.t, lifted);
  REQUIRE(cons_q.size() == cons_g.size());
  for (std::size_t i = 0; i < cons_q.size(); ++i) {
    CHECK(cons_q[i].second == cons_g[i].second);
    CHECK(tq.degree(cons_q[i].first) == d.t.degree(cons_g[i].first));
  }
}

TEST_CASE("kernels") {
  S4Data d;
  CHECK(kernel(ClassFunction::trivial(d.cd)).order() == 24);
  CHECK(kernel(ClassFunction::irreducible(d.t, 1)).order() == 12); // sign
  CharacterTable q8 = CharacterTable::dixon(ClassData::compute(group("Q8")));
  CHECK(kernel(ClassFunction::irreducible(q8, 4)).is_trivial()); // faithful row
}

TEST_CASE("Frobenius reciprocity and induced degrees") {
  std::mt19937 rng(4242);
  struct Pair {
    const char* g;
    const char* n;
  };
  for (Pair pr : {Pair{"S4", "V4"}, Pair{"S4", "A4"}, Pair{"SL(2,3)", "Q8"},
                  Pair{"Q8", "C4"}, Pair{"AGammaL(1,8)", "AGL(1,8)"}}) {
    BuiltinGroup bg = builtin_group(pr.g);
    auto cdg = ClassData::compute(bg.group);
    CharacterTable tg = CharacterTable::dixon(cdg);
    auto cdh = ClassData::compute(*bg.normal(pr.n));
    CharacterTable th = CharacterTable::dixon(cdh);
    for (int trial = 0; trial < 8; ++trial) {
      std::size_t b = rng() % th.rows();
      std::size_t r = rng() % tg.rows();
      ClassFunction beta = ClassFunction::irreducible(th, b);
      ClassFunction chi = ClassFunction::irreducible(tg, r);
      ClassFunction ind = induce(beta, cdg);
      CHECK(inner_product(ind, chi) == inner_product(beta, restrict_to(chi, cdh)));
      CHECK(ind.at_identity().to_rational().value() ==
            Rational(static_cast<long>((bg.group.order() / cdh->order()) * th.degree(b))));
    }
  }
}

TEST_CASE("induction is transitive") {
  S4Data d;
  auto cdv = d.cdv;
  auto cda = d.cda;
  CharacterTable tv = CharacterTable::dixon(cdv);
  for (std::size_t b = 0; b < tv.rows(); ++b) {
    ClassFunction beta = ClassFunction::irreducible(tv, b);
    ClassFunction direct = induce(beta, d.cd);
    ClassFunction stepped = induce(induce(beta, cda), d.cd);
    CHECK(direct.equals(stepped));
  }
}
