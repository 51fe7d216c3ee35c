#include "charvan/perm.hpp"

#include "charvan/error.hpp"

#include <algorithm>
#include <sstream>

namespace charvan {

Perm::Perm(std::uint32_t degree) : img_(degree) {
  for (std::uint32_t i = 0; i < degree; ++i) img_[i] = i;
}

Perm::Perm(std::vector<std::uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (std::uint32_t v : img_) {
    if (v >= img_.size() || seen[v]) input_error("Perm: image vector is not a bijection");
    seen[v] = true;
  }
}

bool Perm::is_identity() const {
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree()) input_error("Perm: degree mismatch in product");
  std::vector<std::uint32_t> r(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) r[i] = rhs.img_[img_[i]];
  Perm out;
  out.img_ = std::move(r);
  return out;
}

Perm Perm::inverse() const {
  std::vector<std::uint32_t> r(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) r[img_[i]] = i;
  Perm out;
  out.img_ = std::move(r);
  return out;
}

Perm Perm::conjugated_by(const Perm& g) const { return g.inverse() * (*this) * g; }

Perm Perm::pow(i64 e) const {
  Perm base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  Perm acc(degree());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

u64 Perm::order() const {
  std::vector<bool> seen(degree(), false);
  u64 ord = 1;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    u64 len = 0;
    std::uint32_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      j = img_[j];
      ++len;
    }
    ord = lcm64(ord, len);
  }
  return ord;
}

Perm parse_perm(std::string_view text, std::uint32_t degree) {
  std::vector<std::uint32_t> img(degree);
  for (std::uint32_t i = 0; i < degree; ++i) img[i] = i;
  std::vector<bool> used(degree, false);

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') input_error("Perm parse: expected '(' in cycle notation");
    ++pos;
    std::vector<std::uint32_t> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        input_error("Perm parse: expected point or ')'");
      u64 v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
      }
      if (v < 1 || v > degree)
        input_error("Perm parse: point " + std::to_string(v) + " out of range 1.." +
                    std::to_string(degree));
      std::uint32_t pt = static_cast<std::uint32_t>(v - 1);
      if (used[pt]) input_error("Perm parse: repeated point " + std::to_string(v));
      used[pt] = true;
      cycle.push_back(pt);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size()) input_error("Perm parse: unterminated cycle");
    ++pos; // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      img[cycle[i]] = cycle[(i + 1) % cycle.size()];
    skip_ws();
  }
  return Perm(std::move(img));
}

std::string cycle_string(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.degree(), false);
  bool any = false;
  for (std::uint32_t i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) {
      seen[i] = true;
      continue;
    }
    any = true;
    os << '(';
    std::uint32_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << (j + 1);
      first = false;
      j = p[j];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

} // namespace charvan
