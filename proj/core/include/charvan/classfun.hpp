#pragma once

#include "charvan/chartable.hpp"
#include "charvan/cyclotomic.hpp"
#include "charvan/group.hpp"

#include <memory>
#include <vector>

namespace charvan {

// A class function: one exact value per conjugacy class of its domain group.
class ClassFunction {
public:
  ClassFunction(std::shared_ptr<const ClassData> domain, std::vector<Cyclotomic> values);

  static ClassFunction trivial(std::shared_ptr<const ClassData> domain);
  static ClassFunction irreducible(const CharacterTable& t, std::size_t row);

  const ClassData& domain() const { return *domain_; }
  std::shared_ptr<const ClassData> domain_ptr() const { return domain_; }
  const Cyclotomic& value(std::size_t i) const { return values_[i]; }
  const std::vector<Cyclotomic>& values() const { return values_; }
  const Cyclotomic& at_identity() const { return values_[0]; }

  ClassFunction operator+(const ClassFunction& rhs) const;
  ClassFunction scaled(const Rational& r) const;
  bool equals(const ClassFunction& rhs) const;

private:
  std::shared_ptr<const ClassData> domain_;
  std::vector<Cyclotomic> values_;
};

// H-class index -> G-class index where each H-class representative fuses.
// Requires the subgroup relationship (checked via membership).
std::vector<std::size_t> fusion_map(const ClassData& sub, const ClassData& big);

// Induction: beta^G(g) = |C_G(g)| * sum over fusing H-classes of
// beta(c)/|C_H(c)|. Degree multiplies by the index.
ClassFunction induce(const ClassFunction& beta, std::shared_ptr<const ClassData> big);

// Restriction along the fusion map.
ClassFunction restrict_to(const ClassFunction& chi, std::shared_ptr<const ClassData> sub);

// Exact inner product (1/|G|) sum |C_i| f_i conj(g_i); input error when the
// domains differ or the result is not rational.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

// All irreducibles with positive multiplicity in f. Validates that f is a
// character: integral nonnegative multiplicities which exactly exhaust f.
std::vector<std::pair<std::size_t, u64>> constituents(const CharacterTable& t,
                                                      const ClassFunction& f);

// Pullback along the quotient map: chi(g) = chibar(gN).
ClassFunction inflate(const Quotient& q, std::shared_ptr<const ClassData> big,
                      const ClassFunction& chibar);

// Subgroup generated by the classes where chi attains chi(1); the kernel of a
// character, computed as a normal closure.
PermGroup kernel(const ClassFunction& chi, const Limits& lim = {});

} // namespace charvan
