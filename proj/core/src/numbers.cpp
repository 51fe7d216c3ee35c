#include "charvan/numbers.hpp"

#include "charvan/error.hpp"

#include <algorithm>
#include <sstream>

namespace charvan {

bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  if (n == 0) internal_error("factorize(0)");
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) { n /= d; ++e; }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

u64 p_part(u64 n, u64 p) {
  u64 m = 1;
  while (n % p == 0) { n /= p; m *= p; }
  return m;
}

u64 totient(u64 n) {
  u64 r = n;
  for (auto& [p, e] : factorize(n)) r -= r / p;
  return r;
}

u64 gcd64(u64 a, u64 b) { return std::gcd(a, b); }
u64 lcm64(u64 a, u64 b) { return a / std::gcd(a, b) * b; }

PiSet::PiSet(std::set<u64> primes, bool complemented)
    : primes_(std::move(primes)), complemented_(complemented) {
  for (u64 p : primes_)
    if (!is_prime(p)) input_error("PiSet: " + std::to_string(p) + " is not prime");
}

bool PiSet::is_pi_number(u64 n) const {
  if (n == 0) return false;
  for (u64 p : prime_divisors(n))
    if (!contains(p)) return false;
  return true;
}

u64 PiSet::pi_part(u64 n) const {
  u64 m = 1;
  for (auto& [p, e] : factorize(n))
    if (contains(p))
      for (unsigned i = 0; i < e; ++i) m *= p;
  return m;
}

std::string PiSet::str() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (u64 p : primes_) {
    if (!first) os << ',';
    os << p;
    first = false;
  }
  os << '}';
  if (complemented_) os << '\'';
  return os.str();
}

} // namespace charvan
