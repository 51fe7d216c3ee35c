#include "charvan/classfun.hpp"

#include "charvan/error.hpp"

namespace charvan {

ClassFunction::ClassFunction(std::shared_ptr<const ClassData> domain,
                             std::vector<Cyclotomic> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_->count())
    input_error("ClassFunction: value count does not match class count");
}

ClassFunction ClassFunction::trivial(std::shared_ptr<const ClassData> domain) {
  std::vector<Cyclotomic> v(domain->count(), Cyclotomic::from_int(1));
  return ClassFunction(std::move(domain), std::move(v));
}

ClassFunction ClassFunction::irreducible(const CharacterTable& t, std::size_t row) {
  return ClassFunction(t.classes_ptr(), t.row(row));
}

ClassFunction ClassFunction::operator+(const ClassFunction& rhs) const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) v.push_back(values_[i] + rhs.values_[i]);
  return ClassFunction(domain_, std::move(v));
}

ClassFunction ClassFunction::scaled(const Rational& r) const {
  std::vector<Cyclotomic> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(x.scaled(r));
  return ClassFunction(domain_, std::move(v));
}

bool ClassFunction::equals(const ClassFunction& rhs) const {
  if (values_.size() != rhs.values_.size()) return false;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (!values_[i].equals(rhs.values_[i])) return false;
  return true;
}

namespace {

bool same_domain(const ClassData& a, const ClassData& b) {
  if (&a == &b) return true;
  if (a.group().degree() != b.group().degree() || a.order() != b.order() ||
      a.count() != b.count())
    return false;
  for (std::size_t i = 0; i < a.count(); ++i)
    if (!(a.cls(i).rep == b.cls(i).rep) || a.cls(i).size != b.cls(i).size) return false;
  return true;
}

} // namespace

std::vector<std::size_t> fusion_map(const ClassData& sub, const ClassData& big) {
  if (sub.group().degree() != big.group().degree())
    input_error("fusion_map: degree mismatch");
  std::vector<std::size_t> fuse(sub.count());
  for (std::size_t c = 0; c < sub.count(); ++c) {
    const Perm& rep = sub.cls(c).rep;
    if (!big.in_group(rep)) input_error("fusion_map: subgroup element not in group");
    fuse[c] = big.class_of(rep);
  }
  return fuse;
}

ClassFunction induce(const ClassFunction& beta, std::shared_ptr<const ClassData> big) {
  const ClassData& sub = beta.domain();
  std::vector<std::size_t> fuse = fusion_map(sub, *big);
  std::vector<Cyclotomic> vals(big->count());
  for (std::size_t c = 0; c < sub.count(); ++c) {
    Rational w(static_cast<unsigned long>(1), static_cast<unsigned long>(sub.cls(c).centralizer_order));
    w.canonicalize();
    vals[fuse[c]] = vals[fuse[c]] + beta.value(c).scaled(w);
  }
  for (std::size_t j = 0; j < big->count(); ++j)
    vals[j] = vals[j].scaled(make_rational(static_cast<long>(big->cls(j).centralizer_order)));
  return ClassFunction(std::move(big), std::move(vals));
}

ClassFunction restrict_to(const ClassFunction& chi, std::shared_ptr<const ClassData> sub) {
  std::vector<std::size_t> fuse = fusion_map(*sub, chi.domain());
  std::vector<Cyclotomic> vals;
  vals.reserve(sub->count());
  for (std::size_t c = 0; c < sub->count(); ++c) vals.push_back(chi.value(fuse[c]));
  return ClassFunction(std::move(sub), std::move(vals));
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (!same_domain(f.domain(), g.domain()))
    input_error("inner_product: class functions live on different groups");
  const ClassData& cd = f.domain();
  Cyclotomic acc;
  for (std::size_t i = 0; i < cd.count(); ++i) {
    Cyclotomic term = f.value(i) * g.value(i).conjugate();
    acc = acc + term.scaled(make_rational(static_cast<long>(cd.cls(i).size)));
  }
  auto r = acc.to_rational();
  if (!r) input_error("inner_product: value is not rational");
  Rational out = *r / Rational(static_cast<unsigned long>(cd.order()));
  out.canonicalize();
  return out;
}

std::vector<std::pair<std::size_t, u64>> constituents(const CharacterTable& t,
                                                      const ClassFunction& f) {
  if (!same_domain(t.classes(), f.domain()))
    input_error("constituents: class function not on the table's group");
  std::vector<std::pair<std::size_t, u64>> out;
  Rational total = 0;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    Rational m = inner_product(f, ClassFunction::irreducible(t, r));
    if (!is_integer(m) || m < 0)
      input_error("constituents: input is not a character (multiplicity " +
                  rational_string(m) + " at row " + std::to_string(r) + ")");
    if (m > 0) {
      u64 mult = m.get_num().get_ui();
      out.emplace_back(r, mult);
      total += m * static_cast<long>(t.degree(r));
    }
  }
  auto deg = f.at_identity().to_rational();
  if (!deg || total != *deg)
    input_error("constituents: multiplicities do not exhaust the degree");
  return out;
}

ClassFunction inflate(const Quotient& q, std::shared_ptr<const ClassData> big,
                      const ClassFunction& chibar) {
  if (chibar.domain().order() != q.group().order() ||
      chibar.domain().group().degree() != q.group().degree())
    input_error("inflate: class function does not live on the quotient");
  std::vector<Cyclotomic> vals;
  vals.reserve(big->count());
  for (std::size_t i = 0; i < big->count(); ++i) {
    Perm img = q.image(big->cls(i).rep);
    vals.push_back(chibar.value(chibar.domain().class_of(img)));
  }
  return ClassFunction(std::move(big), std::move(vals));
}

PermGroup kernel(const ClassFunction& chi, const Limits& lim) {
  auto deg = chi.at_identity().to_rational();
  if (!deg || !is_integer(*deg) || *deg <= 0)
    input_error("kernel: input is not a character");
  const ClassData& cd = chi.domain();
  std::vector<Perm> seeds;
  for (std::size_t i = 1; i < cd.count(); ++i)
    if (chi.value(i).equals(chi.at_identity())) seeds.push_back(cd.cls(i).rep);
  if (seeds.empty()) return PermGroup::trivial(cd.group().degree());
  return normal_closure(cd.group(), seeds, lim);
}

} // namespace charvan
