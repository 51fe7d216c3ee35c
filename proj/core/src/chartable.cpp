#include "charvan/chartable.hpp"

#include "charvan/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <thread>

namespace charvan {

namespace {

// ---- arithmetic mod p (p < 2^31, so products fit in u64) ----

u64 mul(u64 a, u64 b, u64 p) { return a * b % p; }

u64 pw(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) { return pw(a % p, p - 2, p); }

u64 sub(u64 a, u64 b, u64 p) { return (a + p - b % p) % p; }

// Tonelli-Shanks; the input must be a quadratic residue.
u64 sqrt_mod(u64 a, u64 p) {
  a %= p;
  if (a == 0) return 0;
  if (p % 4 == 3) {
    u64 r = pw(a, (p + 1) / 4, p);
    if (mul(r, r, p) != a) internal_error("sqrt_mod: not a residue");
    return r;
  }
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) { q /= 2; ++s; }
  u64 z = 2;
  while (pw(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s, c = pw(z, q, p), t = pw(a, q, p), r = pw(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, tt = t;
    while (tt != 1) { tt = mul(tt, tt, p); ++i; }
    if (i == m) internal_error("sqrt_mod: not a residue");
    u64 b = pw(c, u64(1) << (m - i - 1), p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    r = mul(r, b, p);
  }
  return r;
}

// ---- dense polynomials over F_p, ascending coefficients ----

using Poly = std::vector<u64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mul(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

Poly poly_rem(Poly a, const Poly& m, u64 p) {
  trim(a);
  u64 lead_inv = inv(m.back(), p);
  while (a.size() >= m.size()) {
    u64 f = mul(a.back(), lead_inv, p);
    std::size_t off = a.size() - m.size();
    if (f != 0)
      for (std::size_t j = 0; j < m.size(); ++j) a[off + j] = sub(a[off + j], mul(f, m[j], p), p);
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 li = inv(a.back(), p);
    for (u64& c : a) c = mul(c, li, p);
  }
  return a;
}

Poly poly_div_exact(const Poly& a, const Poly& b, u64 p) {
  Poly q(a.size() - b.size() + 1, 0);
  Poly rem = a;
  u64 li = inv(b.back(), p);
  for (std::size_t i = q.size(); i-- > 0;) {
    q[i] = mul(rem[i + b.size() - 1], li, p);
    if (q[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      rem[i + j] = sub(rem[i + j], mul(q[i], b[j], p), p);
  }
  trim(q);
  return q;
}

Poly poly_powmod_linear(u64 shift, u64 e, const Poly& m, u64 p) {
  // (x + shift)^e mod m
  Poly base = poly_rem({shift, 1}, m, p);
  Poly r{1};
  while (e) {
    if (e & 1) r = poly_rem(poly_mul(r, base, p), m, p);
    base = poly_rem(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_deriv(const Poly& f, u64 p) {
  Poly d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(mul(f[i], i % p, p));
  trim(d);
  return d;
}

u64 poly_eval(const Poly& f, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = (mul(r, x, p) + f[i]) % p;
  return r;
}

// Roots of a squarefree polynomial that splits into linear factors over F_p.
// Deterministic shift-and-gcd splitting.
void poly_roots(const Poly& f, u64 p, std::vector<u64>& out) {
  if (f.size() <= 1) return;
  if (f.size() == 2) {
    out.push_back(mul(sub(0, f[0], p), inv(f[1], p), p));
    return;
  }
  Poly g = f;
  if (poly_eval(g, 0, p) == 0) {
    out.push_back(0);
    g = poly_div_exact(g, Poly{0, 1}, p);
    poly_roots(g, p, out);
    return;
  }
  for (u64 a = 0;; ++a) {
    if (a >= p) internal_error("poly_roots: no splitting shift found");
    if (poly_eval(g, sub(0, a, p), p) == 0) {
      // -a is itself a root
      out.push_back(sub(0, a, p));
      g = poly_div_exact(g, Poly{a, 1}, p);
      poly_roots(g, p, out);
      return;
    }
    Poly h = poly_powmod_linear(a, (p - 1) / 2, g, p);
    if (h.empty())
      internal_error("poly_roots: unexpected zero power");
    h[0] = sub(h[0], 1, p);
    Poly d = poly_gcd(h, g, p);
    if (!d.empty() && d.size() > 1 && d.size() < g.size()) {
      poly_roots(d, p, out);
      poly_roots(poly_div_exact(g, d, p), p, out);
      return;
    }
  }
}

// Characteristic polynomial via Hessenberg reduction; division-free except
// for pivots, which is required since p may be smaller than the dimension.
Poly charpoly(std::vector<std::vector<u64>> a, u64 p) {
  std::size_t n = a.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && a[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(a[piv], a[j + 1]);
      for (std::size_t r = 0; r < n; ++r) std::swap(a[r][piv], a[r][j + 1]);
    }
    u64 d = inv(a[j + 1][j], p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (a[i][j] == 0) continue;
      u64 f = mul(a[i][j], d, p);
      for (std::size_t c = 0; c < n; ++c) a[i][c] = sub(a[i][c], mul(f, a[j + 1][c], p), p);
      for (std::size_t r = 0; r < n; ++r) a[r][j + 1] = (a[r][j + 1] + mul(f, a[r][i], p)) % p;
    }
  }
  // det(xI - H) recurrence over leading principal minors.
  std::vector<Poly> c(n + 1);
  c[0] = {1};
  for (std::size_t m = 1; m <= n; ++m) {
    Poly t(c[m - 1].size() + 1, 0);
    for (std::size_t i = 0; i < c[m - 1].size(); ++i) {
      t[i + 1] = (t[i + 1] + c[m - 1][i]) % p;
      t[i] = sub(t[i], mul(a[m - 1][m - 1], c[m - 1][i], p), p);
    }
    u64 prod = 1;
    for (std::size_t i = 1; i < m; ++i) {
      prod = mul(prod, a[m - i][m - i - 1], p);
      u64 coef = mul(a[m - 1 - i][m - 1], prod, p);
      if (coef == 0) continue;
      for (std::size_t j = 0; j < c[m - 1 - i].size(); ++j)
        t[j] = sub(t[j], mul(coef, c[m - 1 - i][j], p), p);
    }
    trim(t);
    c[m] = std::move(t);
  }
  return c[n];
}

} // namespace

SplitPrime find_split_prime(u64 order, u64 exponent) {
  SplitPrime sp;
  sp.exponent = exponent;
  u64 p = exponent + 1;
  if (p < 3) p = 3;
  for (;; p += exponent) {
    if (p > (u64(1) << 31))
      resource_error("split prime exceeds 2^31");
    if (!is_prime(p)) continue;
    if (p * p > 4 * order) break;
  }
  sp.p = p;
  // primitive root, then the canonical order-e element
  u64 g = 2;
  auto fac = factorize(p - 1);
  for (;; ++g) {
    bool ok = true;
    for (auto& [q, e] : fac)
      if (pw(g, (p - 1) / q, p) == 1) { ok = false; break; }
    if (ok) break;
  }
  sp.zeta = pw(g, (p - 1) / exponent, p);
  sp.zeta_pow.resize(exponent);
  u64 z = 1;
  for (u64 j = 0; j < exponent; ++j) {
    sp.zeta_pow[j] = z;
    sp.dlog[z] = j;
    z = mul(z, sp.zeta, p);
  }
  if (z != 1) internal_error("split prime: zeta order mismatch");
  return sp;
}

ClassMatrix class_matrix(const ClassData& cd, std::size_t i, int jobs) {
  std::size_t k = cd.count();
  ClassMatrix m;
  m.i = i;
  m.a.assign(k, std::vector<u64>(k, 0));

  const auto& members = cd.class_members()[i];
  const auto& els = cd.elements();
  const auto& cls = cd.classes();

  auto count_range = [&](std::size_t lo, std::size_t hi,
                         std::vector<std::vector<u64>>& acc) {
    for (std::size_t t = lo; t < hi; ++t) {
      Perm xinv = els[members[t]].inverse();
      for (std::size_t l = 0; l < k; ++l) {
        Perm y = xinv * cls[l].rep;
        acc[cd.class_of(y)][l] += 1;
      }
    }
  };

  if (jobs > 1 && members.size() >= 64) {
    unsigned nthreads = std::min<std::size_t>(jobs, members.size());
    std::vector<std::vector<std::vector<u64>>> parts(
        nthreads, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
    std::vector<std::thread> threads;
    std::size_t chunk = (members.size() + nthreads - 1) / nthreads;
    for (unsigned t = 0; t < nthreads; ++t) {
      std::size_t lo = t * chunk, hi = std::min(members.size(), lo + chunk);
      threads.emplace_back([&, lo, hi, t] { count_range(lo, hi, parts[t]); });
    }
    for (auto& th : threads) th.join();
    for (auto& part : parts)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) m.a[j][l] += part[j][l];
  } else {
    count_range(0, members.size(), m.a);
  }

  // Column sums must equal |C_i|: every x lands in exactly one class.
  for (std::size_t l = 0; l < k; ++l) {
    u64 s = 0;
    for (std::size_t j = 0; j < k; ++j) s += m.a[j][l];
    if (s != cls[i].size) internal_error("class_matrix: column sum mismatch");
  }
  return m;
}

namespace {

// A simultaneous eigenspace, held as a reduced basis: pivots[r] is the pivot
// column of basis row r, basis[r][pivots[r']] = delta.
struct Subspace {
  std::vector<std::vector<u64>> basis;
  std::vector<std::size_t> pivots;
};

Subspace echelonize(std::vector<std::vector<u64>> rows, u64 p) {
  std::size_t k = rows.empty() ? 0 : rows[0].size();
  Subspace s;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    u64 d = inv(rows[rank][col], p);
    for (u64& v : rows[rank]) v = mul(v, d, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      u64 f = rows[r][col];
      for (std::size_t c = 0; c < k; ++c)
        rows[r][c] = sub(rows[r][c], mul(f, rows[rank][c], p), p);
    }
    s.pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  s.basis = std::move(rows);
  return s;
}

// Splits `w` into eigen-subspaces of the class matrix `m` (rows j, cols l).
std::vector<Subspace> split_subspace(const Subspace& w,
                                     const std::vector<std::vector<u64>>& m, u64 p) {
  std::size_t d = w.basis.size();
  std::size_t k = w.basis[0].size();
  // restriction matrix: column r = coordinates of M * basis[r]
  std::vector<std::vector<u64>> images(d, std::vector<u64>(k, 0));
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t j = 0; j < k; ++j) {
      u64 acc = 0;
      for (std::size_t l = 0; l < k; ++l)
        if (m[j][l] && w.basis[r][l]) acc = (acc + mul(m[j][l] % p, w.basis[r][l], p)) % p;
      images[r][j] = acc;
    }
  std::vector<std::vector<u64>> x(d, std::vector<u64>(d, 0));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t s = 0; s < d; ++s) x[s][r] = images[r][w.pivots[s]];
    // invariance check
    for (std::size_t c = 0; c < k; ++c) {
      u64 acc = 0;
      for (std::size_t s = 0; s < d; ++s)
        if (x[s][r] && w.basis[s][c]) acc = (acc + mul(x[s][r], w.basis[s][c], p)) % p;
      if (acc != images[r][c])
        internal_error("eigenspace splitting: subspace not invariant");
    }
  }

  Poly cp = charpoly(x, p);
  Poly d1 = poly_deriv(cp, p);
  Poly sf = d1.empty() ? cp : poly_div_exact(cp, poly_gcd(cp, d1, p), p);
  std::vector<u64> roots;
  poly_roots(sf, p, roots);
  std::sort(roots.begin(), roots.end());
  if (roots.empty()) internal_error("eigenspace splitting: no eigenvalues");

  std::vector<Subspace> out;
  for (u64 lambda : roots) {
    // kernel of (x - lambda I)
    std::vector<std::vector<u64>> mm(d, std::vector<u64>(d));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c)
        mm[r][c] = r == c ? sub(x[r][c], lambda, p) : x[r][c];
    // gaussian elimination to reduced row echelon
    std::vector<std::size_t> pivcol;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < d && rank < d; ++col) {
      std::size_t piv = rank;
      while (piv < d && mm[piv][col] == 0) ++piv;
      if (piv == d) continue;
      std::swap(mm[rank], mm[piv]);
      u64 dd = inv(mm[rank][col], p);
      for (u64& v : mm[rank]) v = mul(v, dd, p);
      for (std::size_t r = 0; r < d; ++r) {
        if (r == rank || mm[r][col] == 0) continue;
        u64 f = mm[r][col];
        for (std::size_t c = 0; c < d; ++c) mm[r][c] = sub(mm[r][c], mul(f, mm[rank][c], p), p);
      }
      pivcol.push_back(col);
      ++rank;
    }
    std::vector<bool> is_piv(d, false);
    for (std::size_t c : pivcol) is_piv[c] = true;
    std::vector<std::vector<u64>> kern;
    for (std::size_t freec = 0; freec < d; ++freec) {
      if (is_piv[freec]) continue;
      std::vector<u64> coord(d, 0);
      coord[freec] = 1;
      for (std::size_t r = 0; r < pivcol.size(); ++r)
        coord[pivcol[r]] = sub(0, mm[r][freec], p);
      // map back to ambient coordinates
      std::vector<u64> vec(k, 0);
      for (std::size_t s = 0; s < d; ++s) {
        if (coord[s] == 0) continue;
        for (std::size_t c = 0; c < k; ++c)
          vec[c] = (vec[c] + mul(coord[s], w.basis[s][c], p)) % p;
      }
      kern.push_back(std::move(vec));
    }
    if (kern.empty()) internal_error("eigenspace splitting: empty eigenspace");
    out.push_back(echelonize(std::move(kern), p));
  }
  std::size_t total = 0;
  for (const auto& s : out) total += s.basis.size();
  if (total != d) internal_error("eigenspace splitting: dimension mismatch");
  return out;
}

} // namespace

CharacterTable CharacterTable::dixon(std::shared_ptr<const ClassData> cd, int jobs) {
  CharacterTable t;
  t.cd_ = cd;
  std::size_t k = cd->count();
  u64 n = cd->order();
  t.prime_ = find_split_prime(n, cd->exponent());
  const u64 p = t.prime_.p;

  // Simultaneous eigenspaces of the class matrices.
  std::vector<Subspace> spaces;
  {
    std::vector<std::vector<u64>> id(k, std::vector<u64>(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    spaces.push_back(echelonize(std::move(id), p));
  }
  for (std::size_t i = 1; i < k; ++i) {
    bool done = true;
    for (const auto& s : spaces)
      if (s.basis.size() > 1) { done = false; break; }
    if (done) break;
    ClassMatrix cm = class_matrix(*cd, i, jobs);
    std::vector<Subspace> next;
    for (auto& s : spaces) {
      if (s.basis.size() == 1) {
        next.push_back(std::move(s));
        continue;
      }
      for (auto& piece : split_subspace(s, cm.a, p)) next.push_back(std::move(piece));
    }
    spaces = std::move(next);
  }
  for (const auto& s : spaces)
    if (s.basis.size() != 1)
      internal_error("dixon: class matrices did not separate the eigenspaces");
  if (spaces.size() != k) internal_error("dixon: wrong number of eigenspaces");

  // Central characters omega_i = |C_i| chi(g_i) / chi(1) mod p; the vector is
  // normalized by its identity-class coordinate (omega_0 = 1).
  std::vector<std::vector<u64>> omegas;
  for (const auto& s : spaces) {
    std::vector<u64> v = s.basis[0];
    if (v[0] == 0) internal_error("dixon: eigenvector with zero identity coordinate");
    u64 d0 = inv(v[0], p);
    for (u64& c : v) c = mul(c, d0, p);
    omegas.push_back(std::move(v));
  }

  // Degrees from the first orthogonality relation.
  std::vector<u64> inv_size(k);
  std::vector<std::size_t> inv_class(k);
  for (std::size_t i = 0; i < k; ++i) {
    inv_size[i] = inv(cd->cls(i).size % p, p);
    inv_class[i] = cd->power_class(i, -1);
  }
  struct Row {
    u64 degree;
    std::vector<Cyclotomic> values;
  };
  std::vector<Row> rows;
  for (const auto& w : omegas) {
    u64 s = 0;
    for (std::size_t i = 0; i < k; ++i)
      s = (s + mul(mul(w[i], w[inv_class[i]], p), inv_size[i], p)) % p;
    if (s == 0) internal_error("dixon: degenerate degree sum");
    u64 d2 = mul(n % p, inv(s, p), p);
    u64 r = sqrt_mod(d2, p);
    u64 deg = std::min(r, p - r);
    if (deg == 0 || deg * deg > n) internal_error("dixon: impossible degree");

    // character values mod p
    std::vector<u64> cval(k);
    for (std::size_t i = 0; i < k; ++i) cval[i] = mul(mul(deg % p, w[i], p), inv_size[i], p);

    // exact lifting, class by class, in Q(zeta_m) for m the element order
    Row row;
    row.degree = deg;
    row.values.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
      u64 m = cd->cls(i).element_order;
      if (m == 1) {
        row.values.push_back(Cyclotomic::from_int(static_cast<long>(deg)));
        continue;
      }
      u64 zm_step = cd->exponent() / m;
      std::vector<std::size_t> pclass(m);
      for (u64 tt = 0; tt < m; ++tt) pclass[tt] = cd->power_class(i, static_cast<i64>(tt));
      u64 minv = inv(m % p, p);
      Cyclotomic val; // zero
      u64 total = 0;
      for (u64 sdx = 0; sdx < m; ++sdx) {
        u64 acc = 0;
        for (u64 tt = 0; tt < m; ++tt) {
          u64 expo = (m - (sdx * tt) % m) % m; // zeta_m^{-s t}
          u64 root = t.prime_.zeta_pow[expo * zm_step];
          acc = (acc + mul(cval[pclass[tt]], root, p)) % p;
        }
        u64 mult = mul(acc, minv, p);
        if (mult > deg)
          internal_error("dixon: eigenvalue multiplicity out of range");
        total += mult;
        if (mult != 0)
          val = val + Cyclotomic::root_of_unity(m, static_cast<i64>(sdx))
                          .scaled(make_rational(static_cast<long>(mult)));
      }
      if (total != deg) internal_error("dixon: multiplicities do not sum to degree");
      row.values.push_back(std::move(val));
    }
    rows.push_back(std::move(row));
  }

  // Canonical row order: trivial character first, then (degree, lex values).
  Cyclotomic one = Cyclotomic::from_int(1);
  auto is_trivial = [&](const Row& r) {
    if (r.degree != 1) return false;
    for (const auto& v : r.values)
      if (!v.equals(one)) return false;
    return true;
  };
  std::stable_sort(rows.begin(), rows.end(), [&](const Row& a, const Row& b) {
    bool ta = is_trivial(a), tb = is_trivial(b);
    if (ta != tb) return ta;
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      int c = Cyclotomic::compare(a.values[i], b.values[i]);
      if (c != 0) return c < 0;
    }
    return false;
  });
  if (rows.empty() || !is_trivial(rows[0]))
    internal_error("dixon: trivial character not found");

  u64 degsum = 0;
  for (const Row& r : rows) degsum += r.degree * r.degree;
  if (degsum != n) internal_error("dixon: degree squares do not sum to |G|");

  for (Row& r : rows) {
    t.degrees_.push_back(r.degree);
    t.values_.push_back(std::move(r.values));
  }
  return t;
}

bool CharacterTable::p_defect_zero(std::size_t r, u64 p) const {
  return p_part(degrees_[r], p) == p_part(order(), p);
}

OrthogonalityReport verify_orthogonality(const CharacterTable& t) {
  const ClassData& cd = t.classes();
  std::size_t k = cd.count();
  u64 n = cd.order();
  u64 degsum = 0;
  for (std::size_t r = 0; r < t.rows(); ++r) degsum += t.degree(r) * t.degree(r);
  if (degsum != n)
    return {false, "sum of squared degrees " + std::to_string(degsum) +
                       " != " + std::to_string(n)};

  std::vector<std::vector<Cyclotomic>> conj(t.rows());
  for (std::size_t r = 0; r < t.rows(); ++r) {
    conj[r].reserve(k);
    for (std::size_t i = 0; i < k; ++i) conj[r].push_back(t.value(r, i).conjugate());
  }

  for (std::size_t r = 0; r < t.rows(); ++r)
    for (std::size_t s = r; s < t.rows(); ++s) {
      Cyclotomic acc;
      for (std::size_t i = 0; i < k; ++i) {
        Cyclotomic term = t.value(r, i) * conj[s][i];
        acc = acc + term.scaled(make_rational(static_cast<long>(cd.cls(i).size)));
      }
      Cyclotomic expect = Cyclotomic::from_int(r == s ? static_cast<long>(n) : 0);
      if (!acc.equals(expect))
        return {false, "row orthogonality fails for rows " + std::to_string(r) + "," +
                           std::to_string(s)};
    }

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) {
      Cyclotomic acc;
      for (std::size_t r = 0; r < t.rows(); ++r) acc = acc + t.value(r, i) * conj[r][j];
      Cyclotomic expect = Cyclotomic::from_int(
          i == j ? static_cast<long>(cd.cls(i).centralizer_order) : 0);
      if (!acc.equals(expect))
        return {false, "column orthogonality fails for classes " + std::to_string(i) +
                           "," + std::to_string(j)};
    }

  for (std::size_t r = 0; r < t.rows(); ++r)
    if (n % t.degree(r) != 0)
      return {false, "degree " + std::to_string(t.degree(r)) + " does not divide |G|"};
  return {};
}

namespace {

nlohmann::ordered_json cyclotomic_json(const Cyclotomic& v) {
  nlohmann::ordered_json j;
  j["n"] = v.modulus();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  const auto& c = v.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) coeffs[std::to_string(i)] = rational_string(c[i]);
  j["c"] = std::move(coeffs);
  return j;
}

} // namespace

std::string CharacterTable::to_json(const std::string& name) const {
  nlohmann::ordered_json j;
  j["version"] = json_version;
  j["name"] = name;
  j["order"] = order();
  j["exponent"] = exponent();
  nlohmann::ordered_json cls = nlohmann::ordered_json::array();
  for (const auto& c : cd_->classes()) {
    nlohmann::ordered_json e;
    e["rep"] = cycle_string(c.rep);
    e["size"] = c.size;
    e["order"] = c.element_order;
    cls.push_back(std::move(e));
  }
  j["classes"] = std::move(cls);
  j["degrees"] = degrees_;
  nlohmann::ordered_json vals = nlohmann::ordered_json::array();
  for (const auto& row : values_) {
    nlohmann::ordered_json r = nlohmann::ordered_json::array();
    for (const auto& v : row) r.push_back(cyclotomic_json(v));
    vals.push_back(std::move(r));
  }
  j["values"] = std::move(vals);
  return j.dump();
}

std::optional<CharacterTable> CharacterTable::from_json(
    const std::string& text, std::shared_ptr<const ClassData> cd) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
  if (!j.is_object() || !j.contains("version") || j["version"] != json_version)
    return std::nullopt;
  if (!j.contains("order") || j["order"] != cd->order()) return std::nullopt;
  if (!j.contains("classes") || j["classes"].size() != cd->count()) return std::nullopt;
  for (std::size_t i = 0; i < cd->count(); ++i) {
    const auto& e = j["classes"][i];
    if (e["rep"] != cycle_string(cd->cls(i).rep) || e["size"] != cd->cls(i).size ||
        e["order"] != cd->cls(i).element_order)
      return std::nullopt;
  }
  CharacterTable t;
  t.cd_ = cd;
  t.prime_ = find_split_prime(cd->order(), cd->exponent());
  try {
    t.degrees_ = j["degrees"].get<std::vector<u64>>();
    for (const auto& row : j["values"]) {
      std::vector<Cyclotomic> r;
      for (const auto& v : row) r.push_back(Cyclotomic::from_json(v.dump()));
      t.values_.push_back(std::move(r));
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (t.degrees_.size() != cd->count() || t.values_.size() != cd->count())
    return std::nullopt;
  return t;
}

std::string table_text(const CharacterTable& t, const std::string& name) {
  const ClassData& cd = t.classes();
  std::ostringstream os;
  os << name << ": order " << t.order() << ", exponent " << t.exponent() << ", "
     << cd.count() << " classes\n";
  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> head{"class"};
  for (std::size_t i = 0; i < cd.count(); ++i) head.push_back(cycle_string(cd.cls(i).rep));
  grid.push_back(head);
  std::vector<std::string> sizes{"size"};
  for (std::size_t i = 0; i < cd.count(); ++i)
    sizes.push_back(std::to_string(cd.cls(i).size));
  grid.push_back(sizes);
  for (std::size_t r = 0; r < t.rows(); ++r) {
    std::vector<std::string> row{"X" + std::to_string(r)};
    for (std::size_t i = 0; i < cd.count(); ++i) row.push_back(t.value(r, i).str());
    grid.push_back(row);
  }
  std::vector<std::size_t> width(grid[0].size(), 0);
  for (const auto& row : grid)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : grid) {
    for (std::size_t c = 0; c < row.size(); ++c)
      os << std::setw(static_cast<int>(width[c]) + 2) << row[c];
    os << '\n';
  }
  return os.str();
}

} // namespace charvan
