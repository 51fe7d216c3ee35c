#pragma once

#include "charvan/numbers.hpp"
#include "charvan/rational.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace charvan {

// Coefficients of the n-th cyclotomic polynomial (monic, ascending degree).
// Memoized and safe for concurrent use.
std::shared_ptr<const std::vector<mpz_class>> cyclotomic_polynomial(u64 n);

// An element of Q(zeta_n) in the canonical power basis
// 1, zeta, ..., zeta^{phi(n)-1} modulo the n-th cyclotomic polynomial.
// Values at different moduli are compared after lifting to the lcm modulus;
// no automatic conductor reduction is performed.
class Cyclotomic {
public:
  Cyclotomic(); // exact zero at modulus 1

  static Cyclotomic from_rational(const Rational& r, u64 n = 1);
  static Cyclotomic from_int(long v, u64 n = 1) {
    return from_rational(make_rational(v), n);
  }
  // zeta_n^k in canonical form (k may be negative).
  static Cyclotomic root_of_unity(u64 n, i64 k);

  u64 modulus() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  Cyclotomic lifted_to(u64 big) const; // n_ must divide big

  Cyclotomic operator+(const Cyclotomic& rhs) const;
  Cyclotomic operator-(const Cyclotomic& rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(const Cyclotomic& rhs) const;
  Cyclotomic scaled(const Rational& r) const;

  // Galois map zeta_n -> zeta_n^{n-1}; complex conjugation.
  Cyclotomic conjugate() const;

  // The rational value when the reduced basis leaves only the constant.
  std::optional<Rational> to_rational() const;

  bool equals(const Cyclotomic& rhs) const;
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.equals(b);
  }

  // Total order (lift to common modulus, compare coefficient vectors
  // lexicographically); used for deterministic row ordering.
  static int compare(const Cyclotomic& a, const Cyclotomic& b);

  std::string str() const;     // human readable: "z12^3 - 2*z12 + 1/2"
  std::string to_json() const; // {"n":12,"c":{"3":"1/1",...}}
  static Cyclotomic from_json(const std::string& text);

private:
  Cyclotomic(u64 n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  static Cyclotomic reduce(u64 n, std::vector<Rational> poly);

  u64 n_ = 1;
  std::vector<Rational> c_; // length phi(n_)
};

} // namespace charvan
