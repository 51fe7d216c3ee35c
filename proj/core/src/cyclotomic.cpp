#include "charvan/cyclotomic.hpp"

#include "charvan/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace charvan {

std::string rational_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    input_error("bad rational literal: " + s);
  }
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

namespace {

// x^n - 1 divided by the product of Phi_d over proper divisors d of n,
// by repeated exact division.
std::vector<mpz_class> compute_cyclotomic(u64 n,
                                          const std::map<u64, std::vector<mpz_class>>& memo) {
  std::vector<mpz_class> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (u64 d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<mpz_class>& div = memo.at(d);
    // exact division, divisor monic
    std::vector<mpz_class> q(poly.size() - div.size() + 1);
    std::vector<mpz_class> rem = poly;
    for (std::size_t i = q.size(); i-- > 0;) {
      q[i] = rem[i + div.size() - 1];
      if (q[i] == 0) continue;
      for (std::size_t j = 0; j < div.size(); ++j) rem[i + j] -= q[i] * div[j];
    }
    for (std::size_t j = 0; j + 1 < div.size(); ++j)
      if (rem[j] != 0) internal_error("cyclotomic polynomial division not exact");
    poly = std::move(q);
  }
  return poly;
}

std::mutex table_mutex;
std::map<u64, std::shared_ptr<const std::vector<mpz_class>>> phi_memo;
std::map<u64, std::shared_ptr<const std::vector<std::vector<mpz_class>>>> power_memo;

} // namespace

std::shared_ptr<const std::vector<mpz_class>> cyclotomic_polynomial(u64 n) {
  if (n == 0) input_error("cyclotomic_polynomial: n must be positive");
  std::lock_guard<std::mutex> lock(table_mutex);
  auto it = phi_memo.find(n);
  if (it != phi_memo.end()) return it->second;
  std::map<u64, std::vector<mpz_class>> local;
  for (u64 d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    auto hit = phi_memo.find(d);
    if (hit != phi_memo.end()) {
      local[d] = *hit->second;
      continue;
    }
    local[d] = compute_cyclotomic(d, local);
    phi_memo[d] = std::make_shared<const std::vector<mpz_class>>(local[d]);
  }
  return phi_memo.at(n);
}

namespace {

// Rows j = 0..n-1: coefficients of x^j reduced modulo Phi_n.
std::shared_ptr<const std::vector<std::vector<mpz_class>>> power_table(u64 n) {
  {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = power_memo.find(n);
    if (it != power_memo.end()) return it->second;
  }
  auto phi = cyclotomic_polynomial(n);
  std::size_t deg = phi->size() - 1;
  std::vector<std::vector<mpz_class>> rows(n, std::vector<mpz_class>(deg));
  if (deg > 0) rows[0][0] = 1;
  for (u64 j = 1; j < n; ++j) {
    // shift previous row by one and reduce the overflow term
    std::vector<mpz_class>& cur = rows[j];
    const std::vector<mpz_class>& prev = rows[j - 1];
    mpz_class top = deg > 0 ? prev[deg - 1] : mpz_class(0);
    for (std::size_t i = deg; i-- > 1;) cur[i] = prev[i - 1];
    if (deg > 0) cur[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < deg; ++i) cur[i] -= top * (*phi)[i];
  }
  auto ptr = std::make_shared<const std::vector<std::vector<mpz_class>>>(std::move(rows));
  std::lock_guard<std::mutex> lock(table_mutex);
  auto [it, inserted] = power_memo.emplace(n, ptr);
  return it->second;
}

} // namespace

Cyclotomic::Cyclotomic() : n_(1), c_(1) {}

Cyclotomic Cyclotomic::reduce(u64 n, std::vector<Rational> poly) {
  auto phi = cyclotomic_polynomial(n);
  std::size_t deg = phi->size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i] == 0) continue;
    Rational lead = poly[i];
    for (std::size_t j = 0; j < deg; ++j) poly[i - deg + j] -= lead * (*phi)[j];
    poly[i] = 0;
  }
  poly.resize(deg);
  return Cyclotomic(n, std::move(poly));
}

Cyclotomic Cyclotomic::from_rational(const Rational& r, u64 n) {
  std::vector<Rational> c(totient(n));
  c[0] = r;
  return Cyclotomic(n, std::move(c));
}

Cyclotomic Cyclotomic::root_of_unity(u64 n, i64 k) {
  if (n == 0) input_error("root_of_unity: modulus must be positive");
  i64 kk = k % static_cast<i64>(n);
  if (kk < 0) kk += static_cast<i64>(n);
  auto powers = power_table(n);
  const std::vector<mpz_class>& row = (*powers)[static_cast<u64>(kk)];
  std::vector<Rational> c(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) c[i] = Rational(row[i]);
  return Cyclotomic(n, std::move(c));
}

bool Cyclotomic::is_zero() const {
  for (const Rational& r : c_)
    if (r != 0) return false;
  return true;
}

Cyclotomic Cyclotomic::lifted_to(u64 big) const {
  if (big == n_) return *this;
  if (big % n_ != 0) internal_error("lifted_to: modulus does not divide target");
  u64 step = big / n_;
  auto powers = power_table(big);
  std::vector<Rational> out(totient(big));
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<mpz_class>& row = (*powers)[k * step % big];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (row[i] != 0) out[i] += c_[k] * row[i];
  }
  return Cyclotomic(big, std::move(out));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& rhs) const {
  u64 m = lcm64(n_, rhs.n_);
  Cyclotomic a = lifted_to(m);
  Cyclotomic b = rhs.lifted_to(m);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  return a;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic a = *this;
  for (Rational& r : a.c_) r = -r;
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& rhs) const { return *this + (-rhs); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& rhs) const {
  u64 m = lcm64(n_, rhs.n_);
  Cyclotomic a = lifted_to(m);
  Cyclotomic b = rhs.lifted_to(m);
  std::vector<Rational> poly(2 * a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      poly[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return reduce(m, std::move(poly));
}

Cyclotomic Cyclotomic::scaled(const Rational& r) const {
  Cyclotomic a = *this;
  for (Rational& q : a.c_) q *= r;
  return a;
}

Cyclotomic Cyclotomic::conjugate() const {
  auto powers = power_table(n_);
  std::vector<Rational> out(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    const std::vector<mpz_class>& row = (*powers)[k * (n_ - 1) % n_];
    for (std::size_t i = 0; i < out.size(); ++i)
      if (row[i] != 0) out[i] += c_[k] * row[i];
  }
  return Cyclotomic(n_, std::move(out));
}

std::optional<Rational> Cyclotomic::to_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return std::nullopt;
  return c_[0];
}

bool Cyclotomic::equals(const Cyclotomic& rhs) const {
  if (n_ == rhs.n_) return c_ == rhs.c_;
  u64 m = lcm64(n_, rhs.n_);
  return lifted_to(m).c_ == rhs.lifted_to(m).c_;
}

int Cyclotomic::compare(const Cyclotomic& a, const Cyclotomic& b) {
  u64 m = lcm64(a.n_, b.n_);
  Cyclotomic x = a.lifted_to(m);
  Cyclotomic y = b.lifted_to(m);
  for (std::size_t i = 0; i < x.c_.size(); ++i) {
    int c = cmp(x.c_[i], y.c_[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Rational v = c_[k];
    if (first) {
      if (v < 0) { os << '-'; v = -v; }
    } else {
      os << (v < 0 ? " - " : " + ");
      if (v < 0) v = -v;
    }
    first = false;
    bool unit = (v == 1);
    if (k == 0) {
      os << v.get_str();
    } else {
      if (!unit) os << v.get_str() << '*';
      os << 'z' << n_;
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::string Cyclotomic::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n_;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) coeffs[std::to_string(i)] = rational_string(c_[i]);
  j["c"] = std::move(coeffs);
  return j.dump();
}

Cyclotomic Cyclotomic::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    input_error(std::string("cyclotomic JSON: ") + e.what());
  }
  if (!j.contains("n") || !j.contains("c")) input_error("cyclotomic JSON: missing field");
  u64 n = j["n"].get<u64>();
  if (n == 0) input_error("cyclotomic JSON: bad modulus");
  std::vector<Rational> c(totient(n));
  for (auto& [key, val] : j["c"].items()) {
    std::size_t idx = std::stoull(key);
    if (idx >= c.size()) input_error("cyclotomic JSON: coefficient index out of range");
    c[idx] = parse_rational(val.get<std::string>());
  }
  return Cyclotomic(n, std::move(c));
}

} // namespace charvan
