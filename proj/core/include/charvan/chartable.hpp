#pragma once

#include "charvan/cyclotomic.hpp"
#include "charvan/group.hpp"

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace charvan {

// Dixon working prime: p = 1 (mod exponent) and p > 2*sqrt(|G|), together
// with a fixed primitive e-th root of unity mod p and discrete logs for the
// order-e subgroup it generates.
struct SplitPrime {
  u64 p = 0;
  u64 exponent = 1;
  u64 zeta = 1;                       // element of order `exponent` mod p
  std::vector<u64> zeta_pow;          // zeta^j for j < exponent
  std::unordered_map<u64, u64> dlog;  // zeta^j -> j
};

SplitPrime find_split_prime(u64 order, u64 exponent);

// Structure constants of the class algebra for a fixed class i:
// a[j][l] = #{ x in C_i : x^-1 z_l in C_j } for the canonical representative
// z_l of class l, i.e. the number of ways z_l factors as x*y with x in C_i,
// y in C_j.
struct ClassMatrix {
  std::size_t i = 0;
  std::vector<std::vector<u64>> a;
};

ClassMatrix class_matrix(const ClassData& cd, std::size_t i, int jobs = 1);

// Exact irreducible character table. Row 0 is the trivial character; the
// remaining rows are sorted by (degree, lexicographic value order).
class CharacterTable {
public:
  // Dixon-Schneider: simultaneous eigenspace splitting of the class matrices
  // over F_p followed by exact lifting of eigenvalue multiplicities.
  static CharacterTable dixon(std::shared_ptr<const ClassData> cd, int jobs = 1);

  const ClassData& classes() const { return *cd_; }
  std::shared_ptr<const ClassData> classes_ptr() const { return cd_; }
  u64 order() const { return cd_->order(); }
  u64 exponent() const { return cd_->exponent(); }
  std::size_t rows() const { return values_.size(); }
  std::size_t columns() const { return cd_->count(); }
  u64 degree(std::size_t r) const { return degrees_[r]; }
  const std::vector<u64>& degrees() const { return degrees_; }
  const Cyclotomic& value(std::size_t r, std::size_t i) const { return values_[r][i]; }
  const std::vector<Cyclotomic>& row(std::size_t r) const { return values_[r]; }

  const SplitPrime& split_prime() const { return prime_; }

  // p-part of the degree equals the p-part of |G|.
  bool p_defect_zero(std::size_t r, u64 p) const;

  // Serialized table (the documented JSON schema); `name` labels the group.
  std::string to_json(const std::string& name) const;
  // Rebuilds a table from JSON against freshly computed class data; returns
  // nothing when the JSON does not match the class data or schema version.
  static std::optional<CharacterTable> from_json(const std::string& text,
                                                 std::shared_ptr<const ClassData> cd);

  static constexpr int json_version = 1;

private:
  CharacterTable() = default;

  std::shared_ptr<const ClassData> cd_;
  std::vector<u64> degrees_;
  std::vector<std::vector<Cyclotomic>> values_;
  SplitPrime prime_;
};

struct OrthogonalityReport {
  bool ok = true;
  std::string violation; // first failure, human readable
};

// Exact row/column orthogonality and degree checks.
OrthogonalityReport verify_orthogonality(const CharacterTable& t);

// Human-readable table.
std::string table_text(const CharacterTable& t, const std::string& name);

} // namespace charvan
