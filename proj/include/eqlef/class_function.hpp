#pragma once

#include <vector>

#include "eqlef/group.hpp"
#include "eqlef/rational.hpp"

namespace eqlef {

// Exact class function on a subgroup: one rational value per conjugacy
// class. Virtual characters live here by their value vectors; irreducible
// decomposition is never needed.
struct ClassFunction {
  Subgroup subgroup;
  ConjClasses classes;
  std::vector<Rat> values;  // aligned with classes.representatives

  const Rat& at_element(int element_index) const {
    return values[classes.class_of(element_index)];
  }
  const Rat& at_identity() const { return values[classes.class_of(0)]; }

  bool integer_valued() const {
    for (const auto& v : values)
      if (!is_integer(v)) return false;
    return true;
  }

  bool same_values(const ClassFunction& o) const {
    return subgroup == o.subgroup && values == o.values;
  }
};

inline ClassFunction make_class_function(Subgroup h, std::vector<Rat> values) {
  ClassFunction cf{std::move(h), {}, {}};
  cf.classes = conjugacy_classes(cf.subgroup);
  if (values.size() != cf.classes.size())
    throw Error("class function: one value per conjugacy class required");
  cf.values = std::move(values);
  return cf;
}

// Build from a per-element value table, checking constancy on classes.
inline ClassFunction class_function_from_elements(Subgroup h,
                                                  const std::vector<Rat>& by_member) {
  if (by_member.size() != h.members.size())
    throw Error("class function: one value per subgroup member required");
  ClassFunction cf{std::move(h), {}, {}};
  cf.classes = conjugacy_classes(cf.subgroup);
  cf.values.resize(cf.classes.size());
  for (std::size_t c = 0; c < cf.classes.size(); ++c) {
    const auto& cls = cf.classes.classes[c];
    for (std::size_t k = 0; k < cls.size(); ++k) {
      auto pos = std::lower_bound(cf.subgroup.members.begin(), cf.subgroup.members.end(),
                                  cls[k]) -
                 cf.subgroup.members.begin();
      if (k == 0)
        cf.values[c] = by_member[pos];
      else if (cf.values[c] != by_member[pos])
        throw Error("value table is not constant on conjugacy classes");
    }
  }
  return cf;
}

inline ClassFunction trivial_character(const Subgroup& h) {
  ClassFunction cf{h, conjugacy_classes(h), {}};
  cf.values.assign(cf.classes.size(), Rat(1));
  return cf;
}

inline ClassFunction regular_character(const Subgroup& h) {
  ClassFunction cf{h, conjugacy_classes(h), {}};
  cf.values.assign(cf.classes.size(), Rat(0));
  cf.values[cf.classes.class_of(0)] = Rat(static_cast<long>(h.order()));
  return cf;
}

// All {-1,+1}-valued one-dimensional characters: +1 on an index-<=2
// subgroup kernel, -1 off it. Includes the trivial character.
inline std::vector<ClassFunction> pm_one_characters(const Subgroup& h) {
  std::vector<ClassFunction> out;
  for (const auto& k : subgroups_within(h)) {
    if (k.order() * 2 != h.order() && k.order() != h.order()) continue;
    std::vector<Rat> by_member;
    by_member.reserve(h.members.size());
    for (int m : h.members) by_member.push_back(k.contains(m) ? Rat(1) : Rat(-1));
    out.push_back(class_function_from_elements(h, by_member));
  }
  return out;
}

// (ind chi)(k) = |H|^-1 sum over x in K with x^-1 k x in H of chi(x^-1 k x)
inline ClassFunction induce(const ClassFunction& chi, const Subgroup& k) {
  const Subgroup& h = chi.subgroup;
  if (h.parent != k.parent || !k.contains_all(h))
    throw Error("induce: not a subgroup chain");
  const auto& p = *k.parent;
  ClassFunction out{k, conjugacy_classes(k), {}};
  out.values.resize(out.classes.size());
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    int rep = out.classes.representatives[c];
    Rat total = 0;
    for (int x : k.members) {
      int conj = p.mul(p.mul(p.inv(x), rep), x);
      if (h.contains(conj)) total += chi.at_element(conj);
    }
    out.values[c] = total / Rat(static_cast<long>(h.order()));
  }
  return out;
}

inline ClassFunction restrict_cf(const ClassFunction& chi, const Subgroup& h) {
  const Subgroup& k = chi.subgroup;
  if (h.parent != k.parent || !k.contains_all(h))
    throw Error("restrict: not a subgroup chain");
  ClassFunction out{h, conjugacy_classes(h), {}};
  out.values.resize(out.classes.size());
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    out.values[c] = chi.at_element(out.classes.representatives[c]);
  return out;
}

// Transport chi on H to g H g^-1: the transported function takes chi(h) at
// g h g^-1.
inline ClassFunction conjugate_transport(const ClassFunction& chi, int g) {
  const auto& p = *chi.subgroup.parent;
  Subgroup target = conjugate_subgroup(chi.subgroup, g);
  int ginv = p.inv(g);
  ClassFunction out{std::move(target), {}, {}};
  out.classes = conjugacy_classes(out.subgroup);
  out.values.resize(out.classes.size());
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    int rep = out.classes.representatives[c];
    out.values[c] = chi.at_element(p.mul(p.mul(ginv, rep), g));
  }
  return out;
}

}  // namespace eqlef
