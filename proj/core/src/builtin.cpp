#include "charvan/builtin.hpp"

#include "charvan/error.hpp"
#include "charvan/subgroups.hpp"

#include <algorithm>
#include <cstdint>

namespace charvan {

namespace {

Perm perm_of(std::uint32_t degree, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& moves) {
  std::vector<std::uint32_t> img(degree);
  for (std::uint32_t i = 0; i < degree; ++i) img[i] = i;
  for (auto [from, to] : moves) img[from] = to;
  return Perm(std::move(img));
}

Perm n_cycle(std::uint32_t n) {
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return Perm(std::move(img));
}

BuiltinGroup cyclic(u64 n, const Limits& lim) {
  BuiltinGroup b;
  b.name = "C" + std::to_string(n);
  if (n == 1) {
    b.group = PermGroup::trivial(1);
    return b;
  }
  b.group = PermGroup::generated({n_cycle(static_cast<std::uint32_t>(n))}, lim);
  Perm g = b.group.generators()[0];
  for (u64 m = 2; m < n; ++m) {
    if (n % m != 0) continue;
    b.normals.emplace_back("C" + std::to_string(m),
                           PermGroup::generated({g.pow(static_cast<i64>(n / m))}, lim));
  }
  return b;
}

BuiltinGroup dihedral(u64 order, const Limits& lim) {
  if (order % 2 != 0 || order < 6) input_error("dihedral order must be even and >= 6");
  std::uint32_t m = static_cast<std::uint32_t>(order / 2);
  std::vector<std::uint32_t> refl(m);
  for (std::uint32_t j = 0; j < m; ++j) refl[j] = (m - j) % m;
  BuiltinGroup b;
  b.name = "D" + std::to_string(order);
  b.group = PermGroup::generated({n_cycle(m), Perm(std::move(refl))}, lim);
  if (b.group.order() != order) internal_error("dihedral: wrong order");
  b.normals.emplace_back("C" + std::to_string(m),
                         PermGroup::generated({n_cycle(m)}, lim));
  return b;
}

// Dicyclic of order 4m on 4m points, elements a^i b^j (i < 2m, j < 2) indexed
// i + 2m*j, acting by right multiplication. b^2 = a^m, b^-1 a b = a^-1.
BuiltinGroup dicyclic(u64 order, const std::string& name, const Limits& lim) {
  if (order % 4 != 0 || order < 8) input_error("dicyclic order must be 4m >= 8");
  std::uint32_t m2 = static_cast<std::uint32_t>(order / 2); // 2m
  std::uint32_t deg = static_cast<std::uint32_t>(order);
  std::vector<std::uint32_t> ra(deg), rb(deg);
  for (std::uint32_t i = 0; i < m2; ++i) {
    ra[i] = (i + 1) % m2;                 // (a^i, 0) * a
    ra[m2 + i] = m2 + (i + m2 - 1) % m2;  // (a^i b) * a = a^{i-1} b
    rb[i] = m2 + i;                       // (a^i, 0) * b
    rb[m2 + i] = (i + m2 / 2) % m2;       // (a^i b) * b = a^{i+m}
  }
  BuiltinGroup b;
  b.name = name;
  b.group = PermGroup::generated({Perm(std::move(ra)), Perm(std::move(rb))}, lim);
  if (b.group.order() != order) internal_error("dicyclic: wrong order");
  const Perm& a = b.group.generators()[0];
  b.normals.emplace_back("C" + std::to_string(m2), PermGroup::generated({a}, lim));
  b.normals.emplace_back("Z", PermGroup::generated({a.pow(m2 / 2)}, lim));
  return b;
}

BuiltinGroup symmetric(u64 n, const Limits& lim) {
  BuiltinGroup b;
  b.name = "S" + std::to_string(n);
  std::uint32_t deg = static_cast<std::uint32_t>(n);
  b.group = PermGroup::generated({perm_of(deg, {{0, 1}, {1, 0}}), n_cycle(deg)}, lim);
  if (n >= 3) {
    std::vector<Perm> agens;
    agens.push_back(parse_perm("(1 2 3)", deg));
    if (n > 3) {
      if (n % 2 == 1)
        agens.push_back(n_cycle(deg));
      else {
        std::vector<std::uint32_t> img(deg);
        img[0] = 0;
        for (std::uint32_t i = 1; i < deg; ++i) img[i] = 1 + (i % (deg - 1));
        agens.push_back(Perm(std::move(img)));
      }
    }
    b.normals.emplace_back("A" + std::to_string(n), PermGroup::generated(agens, lim));
  }
  if (n == 4)
    b.normals.emplace_back(
        "V4", PermGroup::generated({parse_perm("(1 2)(3 4)", 4), parse_perm("(1 3)(2 4)", 4)}, lim));
  return b;
}

BuiltinGroup alternating(u64 n, const Limits& lim) {
  BuiltinGroup b;
  b.name = "A" + std::to_string(n);
  std::uint32_t deg = static_cast<std::uint32_t>(n);
  if (n == 3) {
    b.group = PermGroup::generated({parse_perm("(1 2 3)", 3)}, lim);
    return b;
  }
  std::vector<Perm> gens;
  gens.push_back(parse_perm("(1 2 3)", deg));
  if (n % 2 == 1)
    gens.push_back(n_cycle(deg));
  else {
    std::vector<std::uint32_t> img(deg);
    img[0] = 0;
    for (std::uint32_t i = 1; i < deg; ++i) img[i] = 1 + (i % (deg - 1));
    gens.push_back(Perm(std::move(img)));
  }
  b.group = PermGroup::generated(gens, lim);
  if (n == 4)
    b.normals.emplace_back(
        "V4", PermGroup::generated({parse_perm("(1 2)(3 4)", 4), parse_perm("(1 3)(2 4)", 4)}, lim));
  return b;
}

BuiltinGroup sl23(const Limits& lim) {
  // Action on the 8 nonzero vectors of F_3^2.
  std::vector<std::pair<int, int>> vecs;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x || y) vecs.emplace_back(x, y);
  auto index_of = [&](int x, int y) {
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (vecs[i] == std::make_pair(x, y)) return static_cast<std::uint32_t>(i);
    internal_error("sl23: vector lookup");
  };
  auto mat_perm = [&](int a, int b, int c, int d) {
    std::vector<std::uint32_t> img(8);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
      auto [x, y] = vecs[i];
      img[i] = index_of(((a * x + b * y) % 3 + 3) % 3, ((c * x + d * y) % 3 + 3) % 3);
    }
    return Perm(std::move(img));
  };
  BuiltinGroup bg;
  bg.name = "SL(2,3)";
  Perm s = mat_perm(0, -1, 1, 0);
  Perm t = mat_perm(1, 1, 0, 1);
  bg.group = PermGroup::generated({s, t}, lim);
  if (bg.group.order() != 24) internal_error("SL(2,3): wrong order");
  PermGroup q8 = sylow(bg.group, 2, lim);
  if (!is_normal(bg.group, q8)) internal_error("SL(2,3): Sylow 2 not normal");
  bg.normals.emplace_back("Q8", std::move(q8));
  return bg;
}

// F_8 = GF(2)[t]/(t^3+t+1), elements as bitmasks 0..7.
std::uint32_t f8_mul(std::uint32_t a, std::uint32_t b) {
  std::uint32_t r = 0;
  for (int i = 0; i < 3; ++i)
    if (b >> i & 1) r ^= a << i;
  for (int d = 4; d >= 3; --d)
    if (r >> d & 1) r ^= 0b1011u << (d - 3);
  return r;
}

BuiltinGroup agammal18(const Limits& lim) {
  // Affine semilinear group of order 168 on the 8 field elements.
  auto map_perm = [&](auto&& f) {
    std::vector<std::uint32_t> img(8);
    for (std::uint32_t x = 0; x < 8; ++x) img[x] = f(x);
    return Perm(std::move(img));
  };
  Perm tau = map_perm([](std::uint32_t x) { return x ^ 1u; });
  Perm mu = map_perm([](std::uint32_t x) { return f8_mul(2, x); });
  Perm sigma = map_perm([](std::uint32_t x) { return f8_mul(x, x); });
  BuiltinGroup bg;
  bg.name = "AGammaL(1,8)";
  bg.group = PermGroup::generated({tau, mu, sigma}, lim);
  if (bg.group.order() != 168) internal_error("AGammaL(1,8): wrong order");
  PermGroup agl = PermGroup::generated({tau, mu}, lim);
  if (agl.order() != 56) internal_error("AGL(1,8): wrong order");
  bg.normals.emplace_back("AGL(1,8)", std::move(agl));
  Perm tau2 = map_perm([](std::uint32_t x) { return x ^ 2u; });
  Perm tau4 = map_perm([](std::uint32_t x) { return x ^ 4u; });
  bg.normals.emplace_back("F8", PermGroup::generated({tau, tau2, tau4}, lim));
  return bg;
}

BuiltinGroup sz_syl_norm8(const Limits& lim) {
  // Normalizer of a Sylow 2-subgroup of Sz(8): the Suzuki 2-group
  // Q = {(a,b) : a,b in F_8} with (a,b)(c,d) = (a+c, b+d+a^theta c),
  // theta(x) = x^4, extended by the order-7 automorphism
  // (a,b) -> (kappa a, kappa^{theta+1} b). Right regular action on Q.
  auto theta = [](std::uint32_t x) { return f8_mul(f8_mul(x, x), f8_mul(x, x)); };
  auto idx = [](std::uint32_t a, std::uint32_t b) { return a * 8 + b; };
  auto right_mul = [&](std::uint32_t c, std::uint32_t d) {
    std::vector<std::uint32_t> img(64);
    for (std::uint32_t a = 0; a < 8; ++a)
      for (std::uint32_t b = 0; b < 8; ++b)
        img[idx(a, b)] = idx(a ^ c, b ^ d ^ f8_mul(theta(a), c));
    return Perm(std::move(img));
  };
  // kappa = t: kappa^{theta+1} = t^5 = t^2+t+1 = 7.
  std::vector<std::uint32_t> phi(64);
  for (std::uint32_t a = 0; a < 8; ++a)
    for (std::uint32_t b = 0; b < 8; ++b) phi[idx(a, b)] = idx(f8_mul(2, a), f8_mul(7, b));

  BuiltinGroup bg;
  bg.name = "SzSylNorm8";
  Perm r1 = right_mul(1, 0), r2 = right_mul(2, 0), r4 = right_mul(4, 0);
  bg.group = PermGroup::generated({r1, Perm(std::move(phi))}, lim);
  if (bg.group.order() != 448) internal_error("SzSylNorm8: wrong order");
  PermGroup syl2 = PermGroup::generated({r1, r2, r4}, lim);
  if (syl2.order() != 64) internal_error("SzSylNorm8: Sylow 2 wrong order");
  if (!is_normal(bg.group, syl2)) internal_error("SzSylNorm8: Sylow 2 not normal");
  bg.normals.emplace_back("Syl2", std::move(syl2));
  return bg;
}

Perm embed(const Perm& p, std::uint32_t offset, std::uint32_t total) {
  std::vector<std::uint32_t> img(total);
  for (std::uint32_t i = 0; i < total; ++i) img[i] = i;
  for (std::uint32_t i = 0; i < p.degree(); ++i) img[offset + i] = offset + p[i];
  return Perm(std::move(img));
}

BuiltinGroup direct_product(const BuiltinGroup& a, const BuiltinGroup& b, const Limits& lim) {
  std::uint32_t da = a.group.degree(), db = b.group.degree();
  std::uint32_t total = da + db;
  auto embed_group = [&](const PermGroup& g, std::uint32_t off) {
    std::vector<Perm> gens;
    for (const Perm& p : g.generators()) gens.push_back(embed(p, off, total));
    return gens.empty() ? PermGroup::trivial(total) : PermGroup::generated(gens, lim);
  };
  BuiltinGroup bg;
  bg.name = a.name + "x" + b.name;
  std::vector<Perm> gens;
  for (const Perm& p : a.group.generators()) gens.push_back(embed(p, 0, total));
  for (const Perm& p : b.group.generators()) gens.push_back(embed(p, da, total));
  bg.group = PermGroup::generated(gens, lim);
  if (bg.group.order() != a.group.order() * b.group.order())
    internal_error("direct product: wrong order");
  auto add_normal = [&](const std::string& id, PermGroup g) {
    for (const auto& [n, _] : bg.normals)
      if (n == id) return;
    bg.normals.emplace_back(id, std::move(g));
  };
  add_normal(a.name, embed_group(a.group, 0));
  add_normal(b.name, embed_group(b.group, da));
  for (const auto& [id, g] : a.normals) add_normal(id, embed_group(g, 0));
  for (const auto& [id, g] : b.normals) add_normal(id, embed_group(g, da));
  return bg;
}

bool parse_family(const std::string& name, const std::string& prefix, u64& n) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
    return false;
  for (std::size_t i = prefix.size(); i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
  n = std::stoull(name.substr(prefix.size()));
  return true;
}

} // namespace

BuiltinGroup builtin_group(const std::string& name, const Limits& lim) {
  if (name == "trivial") return {name, PermGroup::trivial(1), {}};
  if (name == "V4")
    return {name,
            PermGroup::generated(
                {parse_perm("(1 2)(3 4)", 4), parse_perm("(1 3)(2 4)", 4)}, lim),
            {}};
  if (name == "Q8") {
    BuiltinGroup b = dicyclic(8, "Q8", lim);
    return b;
  }
  if (name == "Q16") return dicyclic(16, "Q16", lim);
  if (name == "SL(2,3)") return sl23(lim);
  if (name == "AGammaL(1,8)") return agammal18(lim);
  if (name == "SzSylNorm8") return sz_syl_norm8(lim);

  u64 n = 0;
  if (parse_family(name, "Dic", n)) return dicyclic(n, name, lim);
  if (parse_family(name, "C", n)) return cyclic(n, lim);
  if (parse_family(name, "D", n)) return dihedral(n, lim);
  if (parse_family(name, "S", n)) {
    if (n < 2 || n > 7) input_error("builtin: S" + std::to_string(n) + " not in catalog");
    return symmetric(n, lim);
  }
  if (parse_family(name, "A", n)) {
    if (n < 3 || n > 7) input_error("builtin: A" + std::to_string(n) + " not in catalog");
    return alternating(n, lim);
  }

  // direct products: split at each 'x' until both sides parse
  for (std::size_t pos = name.find('x'); pos != std::string::npos;
       pos = name.find('x', pos + 1)) {
    std::string left = name.substr(0, pos), right = name.substr(pos + 1);
    if (left.empty() || right.empty()) continue;
    try {
      BuiltinGroup a = builtin_group(left, lim);
      BuiltinGroup b = builtin_group(right, lim);
      return direct_product(a, b, lim);
    } catch (const Error&) {
      continue;
    }
  }
  input_error("builtin: unknown group name '" + name + "'");
}

std::vector<std::string> builtin_catalog() {
  return {"trivial",      "C<n>",        "V4",
          "D<n> (order)", "Dic<n> (order)", "Q8",
          "Q16",          "S2..S7",      "A3..A7",
          "SL(2,3)",      "AGammaL(1,8)", "SzSylNorm8",
          "<A>x<B> direct products"};
}

} // namespace charvan
