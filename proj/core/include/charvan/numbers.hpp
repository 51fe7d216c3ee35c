#pragma once

#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace charvan {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

// (prime, multiplicity) pairs, ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);

u64 p_part(u64 n, u64 p);

// Euler totient.
u64 totient(u64 n);

u64 gcd64(u64 a, u64 b);
u64 lcm64(u64 a, u64 b);

// A set of primes, optionally complemented ("pi'").
class PiSet {
public:
  PiSet() = default;
  explicit PiSet(std::set<u64> primes, bool complemented = false);

  static PiSet single(u64 p) { return PiSet({p}); }

  bool contains(u64 p) const {
    return complemented_ ? !primes_.contains(p) : primes_.contains(p);
  }
  PiSet complement() const { return PiSet(primes_, !complemented_); }
  bool complemented() const { return complemented_; }
  const std::set<u64>& primes() const { return primes_; }

  // n > 0 and every prime divisor of n is in the set. 1 counts.
  bool is_pi_number(u64 n) const;
  // Largest divisor of n all of whose prime factors lie in the set.
  u64 pi_part(u64 n) const;

  std::string str() const; // "{2,3}" or "{2,3}'"

private:
  std::set<u64> primes_;
  bool complemented_ = false;
};

} // namespace charvan
