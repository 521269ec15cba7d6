#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <vector>

#include "eqlef/perm.hpp"

namespace eqlef {

// Finite permutation group on the vertex set, closed explicitly. Element 0
// is the identity; the multiplication table is cached at construction.
class PermGroup {
 public:
  // Closure of the generators, elements sorted by image list (the identity
  // sorts first).
  static std::shared_ptr<const PermGroup> closure(std::size_t degree,
                                                  const std::vector<Perm>& generators) {
    std::set<Perm> seen;
    seen.insert(Perm(degree));
    std::vector<Perm> frontier(seen.begin(), seen.end());
    for (const auto& g : generators) {
      if (g.degree() != degree) throw Error("generator degree mismatch");
      if (seen.insert(g).second) frontier.push_back(g);
    }
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const auto& a : frontier)
        for (const auto& b : std::vector<Perm>(seen.begin(), seen.end())) {
          Perm ab = a * b;
          if (seen.insert(ab).second) next.push_back(ab);
          Perm ba = b * a;
          if (seen.insert(ba).second) next.push_back(ba);
        }
      frontier = std::move(next);
    }
    return std::shared_ptr<const PermGroup>(
        new PermGroup(std::vector<Perm>(seen.begin(), seen.end())));
  }

  static std::shared_ptr<const PermGroup> trivial(std::size_t degree) {
    return closure(degree, {});
  }

  // Wrap an already-closed element list without re-sorting. Used for
  // induced actions, where element i must stay aligned with element i of
  // the source group.
  static std::shared_ptr<const PermGroup> from_elements_aligned(std::vector<Perm> elements) {
    auto g = std::shared_ptr<const PermGroup>(new PermGroup(std::move(elements)));
    if (!g->elements_[0].is_identity())
      throw Error("aligned group: identity must be element 0");
    return g;
  }

  std::size_t degree() const { return elements_.empty() ? 0 : elements_[0].degree(); }
  std::size_t order() const { return elements_.size(); }
  const Perm& element(int i) const { return elements_[i]; }
  const std::vector<Perm>& elements() const { return elements_; }

  int index_of(const Perm& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw Error("permutation is not a group element");
    return it->second;
  }

  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }

 private:
  explicit PermGroup(std::vector<Perm> elements) : elements_(std::move(elements)) {
    if (elements_.empty()) throw Error("empty group");
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (!index_.emplace(elements_[i], static_cast<int>(i)).second)
        throw Error("duplicate group element");
    }
    table_.assign(elements_.size(), std::vector<int>(elements_.size()));
    inverse_.assign(elements_.size(), -1);
    for (std::size_t a = 0; a < elements_.size(); ++a)
      for (std::size_t b = 0; b < elements_.size(); ++b) {
        auto it = index_.find(elements_[a] * elements_[b]);
        if (it == index_.end()) throw Error("element list is not closed");
        table_[a][b] = it->second;
        if (it->second == 0) inverse_[a] = static_cast<int>(b);
      }
    if (!elements_[0].is_identity()) throw Error("identity is not element 0");
    for (int x : inverse_)
      if (x < 0) throw Error("element list is missing an inverse");
  }

  std::vector<Perm> elements_;
  std::map<Perm, int> index_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

using GroupRef = std::shared_ptr<const PermGroup>;

// Subgroup by sorted member indices into the parent element list.
struct Subgroup {
  GroupRef parent;
  std::vector<int> members;  // sorted, members[0] == 0

  std::size_t order() const { return members.size(); }

  bool contains(int element_index) const {
    return std::binary_search(members.begin(), members.end(), element_index);
  }

  bool contains_all(const Subgroup& other) const {
    for (int m : other.members)
      if (!contains(m)) return false;
    return true;
  }

  bool operator==(const Subgroup& o) const {
    return parent == o.parent && members == o.members;
  }
  bool operator<(const Subgroup& o) const { return members < o.members; }
};

inline Subgroup make_subgroup(GroupRef parent, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h{std::move(parent), std::move(members)};
  if (h.members.empty() || h.members[0] != 0)
    throw Error("subgroup must contain the identity");
  for (int a : h.members)
    for (int b : h.members)
      if (!h.contains(h.parent->mul(a, b)))
        throw Error("subgroup member set is not closed");
  return h;
}

inline Subgroup whole_group(GroupRef g) {
  std::vector<int> all(g->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return Subgroup{std::move(g), std::move(all)};
}

inline Subgroup trivial_subgroup(GroupRef g) { return Subgroup{std::move(g), {0}}; }

// Closure of a seed set inside the parent group.
inline Subgroup generated_subgroup(const GroupRef& parent, std::vector<int> seed) {
  std::set<int> closed{0};
  for (int s : seed) closed.insert(s);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> current(closed.begin(), closed.end());
    for (int a : current)
      for (int b : current)
        if (closed.insert(parent->mul(a, b)).second) grew = true;
  }
  return Subgroup{parent, std::vector<int>(closed.begin(), closed.end())};
}

inline Subgroup conjugate_subgroup(const Subgroup& h, int g) {
  std::vector<int> members;
  members.reserve(h.members.size());
  const auto& p = *h.parent;
  int ginv = p.inv(g);
  for (int m : h.members) members.push_back(p.mul(p.mul(g, m), ginv));
  std::sort(members.begin(), members.end());
  return Subgroup{h.parent, std::move(members)};
}

// Conjugacy classes of a subgroup, each listed with its canonical
// representative (the smallest element index).
struct ConjClasses {
  std::vector<std::vector<int>> classes;  // each sorted; classes sorted by front
  std::vector<int> representatives;

  std::size_t size() const { return classes.size(); }

  int class_of(int element_index) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
      if (std::binary_search(classes[c].begin(), classes[c].end(), element_index))
        return static_cast<int>(c);
    throw Error("element is not in the subgroup");
  }
};

inline ConjClasses conjugacy_classes(const Subgroup& h) {
  const auto& p = *h.parent;
  std::set<int> remaining(h.members.begin(), h.members.end());
  ConjClasses out;
  while (!remaining.empty()) {
    int rep = *remaining.begin();
    std::set<int> orbit;
    for (int g : h.members) orbit.insert(p.mul(p.mul(g, rep), p.inv(g)));
    std::vector<int> cls(orbit.begin(), orbit.end());
    for (int x : cls) remaining.erase(x);
    out.representatives.push_back(cls.front());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

// All subgroups of H, exhaustive via closure over one-element extensions.
// Deterministic order: by order, then by member list.
inline std::vector<Subgroup> subgroups_within(const Subgroup& h) {
  std::set<std::vector<int>> found;
  found.insert({0});
  std::vector<std::vector<int>> frontier{{0}};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& base : frontier)
      for (int g : h.members) {
        if (std::binary_search(base.begin(), base.end(), g)) continue;
        auto seed = base;
        seed.push_back(g);
        auto extended = generated_subgroup(h.parent, seed).members;
        if (found.insert(extended).second) next.push_back(std::move(extended));
      }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  for (const auto& members : found) out.push_back(Subgroup{h.parent, members});
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

// Exhaustive for |G| <= 32; beyond that falls back to the cyclic subgroups
// (callers may add stabilizers or other subgroups of interest themselves).
inline std::vector<Subgroup> all_subgroups(const GroupRef& g) {
  if (g->order() <= 32) return subgroups_within(whole_group(g));
  std::set<std::vector<int>> found;
  for (std::size_t i = 0; i < g->order(); ++i)
    found.insert(generated_subgroup(g, {static_cast<int>(i)}).members);
  std::vector<Subgroup> out;
  for (const auto& members : found) out.push_back(Subgroup{g, members});
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

}  // namespace eqlef
