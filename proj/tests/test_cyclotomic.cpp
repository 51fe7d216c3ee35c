#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "charvan/cyclotomic.hpp"

#include <random>

using namespace charvan;

namespace {

Cyclotomic random_value(std::mt19937& rng, u64 modulus) {
  std::uniform_int_distribution<long> num(-4, 4);
  std::uniform_int_distribution<long> den(1, 3);
  std::uniform_int_distribution<int> expo(0, static_cast<int>(modulus) - 1);
  Cyclotomic acc = Cyclotomic::from_rational(make_rational(num(rng)), modulus);
  for (int terms = 0; terms < 3; ++terms) {
    Rational c = make_rational(num(rng), den(rng));
    acc = acc + Cyclotomic::root_of_unity(modulus, expo(rng)).scaled(c);
  }
  return acc;
}

} // namespace

TEST_CASE("roots of unity in canonical form") {
  CHECK(Cyclotomic::root_of_unity(4, 2).to_rational().value() == -1);
  Cyclotomic s = Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2);
  CHECK(s.to_rational().value() == -1);
  CHECK(Cyclotomic::root_of_unity(1, 0).to_rational().value() == 1);
  CHECK(Cyclotomic::root_of_unity(6, 3).to_rational().value() == -1);
  CHECK(Cyclotomic::root_of_unity(8, -1).equals(Cyclotomic::root_of_unity(8, 7)));
  // z6 + z6^-1 = 1
  CHECK((Cyclotomic::root_of_unity(6, 1) + Cyclotomic::root_of_unity(6, 5))
            .to_rational()
            .value() == 1);
}

TEST_CASE("products") {
  Cyclotomic z8 = Cyclotomic::root_of_unity(8, 1);
  CHECK((z8 * z8).equals(Cyclotomic::root_of_unity(4, 1)));
  Cyclotomic a = Cyclotomic::from_int(1, 3) + Cyclotomic::root_of_unity(3, 1);
  Cyclotomic b = Cyclotomic::from_int(1, 3) + Cyclotomic::root_of_unity(3, 2);
  CHECK((a * b).equals(Cyclotomic::from_int(1)));
  CHECK((a * Cyclotomic()).is_zero());
}

TEST_CASE("conjugation") {
  Cyclotomic z4 = Cyclotomic::root_of_unity(4, 1);
  CHECK(z4.conjugate().equals(-z4));
  Cyclotomic r = Cyclotomic::from_rational(make_rational(7, 3));
  CHECK(r.conjugate().equals(r));
  std::mt19937 rng(99);
  for (int t = 0; t < 40; ++t) {
    Cyclotomic v = random_value(rng, 12);
    CHECK(v.conjugate().conjugate().equals(v));
  }
}

TEST_CASE("rational detection") {
  CHECK((Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2))
            .to_rational()
            .value() == -1);
  CHECK_FALSE(Cyclotomic::root_of_unity(5, 1).to_rational().has_value());
  CHECK(Cyclotomic().to_rational().value() == 0);
}

TEST_CASE("ring axioms on random values") {
  std::mt19937 rng(2024);
  for (u64 modulus : {1ull, 3ull, 4ull, 5ull, 6ull, 8ull, 12ull}) {
    for (int trial = 0; trial < 25; ++trial) {
      Cyclotomic a = random_value(rng, modulus);
      Cyclotomic b = random_value(rng, modulus);
      Cyclotomic c = random_value(rng, 6);
      CHECK((a + b).equals(b + a));
      CHECK((a * b).equals(b * a));
      CHECK(((a + b) * c).equals(a * c + b * c));
      CHECK(((a * b) * c).equals(a * (b * c)));
      CHECK((a - a).is_zero());
      // conjugation is a ring automorphism
      CHECK((a * b).conjugate().equals(a.conjugate() * b.conjugate()));
      CHECK((a + b).conjugate().equals(a.conjugate() + b.conjugate()));
    }
  }
}

TEST_CASE("canonical equality and mixed moduli") {
  Cyclotomic a = Cyclotomic::root_of_unity(4, 1);
  Cyclotomic b = Cyclotomic::root_of_unity(12, 3);
  CHECK(a.equals(b));
  CHECK(a.modulus() == 4);   // no automatic conductor reduction
  CHECK(b.modulus() == 12);
  CHECK(Cyclotomic::compare(a, b) == 0);
  CHECK(Cyclotomic::compare(Cyclotomic::from_int(0), Cyclotomic::from_int(1)) < 0);
}

TEST_CASE("json round trip is the identity") {
  std::mt19937 rng(7);
  for (u64 modulus : {1ull, 4ull, 8ull, 12ull, 15ull}) {
    for (int trial = 0; trial < 20; ++trial) {
      Cyclotomic v = random_value(rng, modulus);
      Cyclotomic back = Cyclotomic::from_json(v.to_json());
      CHECK(back.modulus() == v.modulus());
      CHECK(back.coeffs() == v.coeffs());
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  auto phi12 = cyclotomic_polynomial(12); // x^4 - x^2 + 1
  REQUIRE(phi12->size() == 5);
  CHECK((*phi12)[0] == 1);
  CHECK((*phi12)[2] == -1);
  CHECK((*phi12)[4] == 1);
  auto phi1 = cyclotomic_polynomial(1);
  CHECK(phi1->size() == 2);
  auto phi9 = cyclotomic_polynomial(9); // x^6 + x^3 + 1
  REQUIRE(phi9->size() == 7);
  CHECK((*phi9)[3] == 1);
}
