#pragma once

#include "charvan/numbers.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace charvan {

// A permutation of {0, ..., degree-1}, stored as its image vector.
// Composition is the right action: (a*b)(i) = b(a(i)), i.e. a applies first.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::uint32_t degree); // identity
  explicit Perm(std::vector<std::uint32_t> images);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(img_.size()); }
  std::uint32_t operator[](std::uint32_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  bool is_identity() const;
  Perm operator*(const Perm& rhs) const;
  Perm inverse() const;
  Perm conjugated_by(const Perm& g) const; // g^-1 * (*this) * g
  Perm pow(i64 e) const;
  u64 order() const; // lcm of cycle lengths

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b) {
    return a.img_ <=> b.img_;
  }

private:
  std::vector<std::uint32_t> img_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t v : p.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Disjoint cycle notation with 1-based points; "()" or blank is the identity.
// Rejects repeated points, points exceeding the degree, malformed parentheses.
Perm parse_perm(std::string_view text, std::uint32_t degree);

// Canonical printer: cycles ordered by least point, each cycle starting at its
// least point; identity prints as "()".
std::string cycle_string(const Perm& p);

} // namespace charvan
