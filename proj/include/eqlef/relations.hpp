#pragma once

#include <set>
#include <vector>

#include "eqlef/lattice.hpp"
#include "eqlef/lefschetz.hpp"

namespace eqlef {

enum class SubgroupPolicy { all, cyclic_plus_stabilizers };

// Point-evaluation identifications: for a subgroup H, two barycentre sites
// in the same component of the fixed subcomplex X^H carry equal atoms once
// a character of H is induced up to the respective stabilizers. The
// generators anchor every site of a component against the first one.
struct RelationLattice {
  std::vector<LefschetzClass> generators;
};

namespace detail {

// deterministic character pool: trivial, all +-1-valued one-dimensional
// characters, and the regular character
inline std::vector<ClassFunction> character_pool(const Subgroup& h) {
  std::vector<ClassFunction> pool = pm_one_characters(h);
  pool.push_back(regular_character(h));
  std::vector<ClassFunction> dedup;
  for (auto& cf : pool) {
    bool seen = false;
    for (const auto& other : dedup)
      if (other.same_values(cf)) {
        seen = true;
        break;
      }
    if (!seen) dedup.push_back(std::move(cf));
  }
  return dedup;
}

// atom(site of member, ind_H^Stab(member)(chi)) written at the canonical
// representative
inline LefschetzClass induced_atom(const OrbitTable& table, const Simplex& member,
                                   const ClassFunction& chi) {
  Subgroup stab = setwise_stabilizer(table.group, member);
  ClassFunction ind = induce(chi, stab);
  SiteId site = table.site(member);
  int t = table.transporter_to(site, member);
  ClassFunction at_rep = conjugate_transport(ind, table.group->inv(t));
  LefschetzClass cls;
  add_atom(cls, table, site, at_rep);
  return cls;
}

}  // namespace detail

inline std::vector<Subgroup> policy_subgroups(const OrbitTable& table,
                                              SubgroupPolicy policy) {
  const GroupRef& g = table.group;
  if (policy == SubgroupPolicy::all && g->order() <= 32) return all_subgroups(g);

  std::set<std::vector<int>> members;
  for (std::size_t e = 0; e < g->order(); ++e)
    members.insert(generated_subgroup(g, {static_cast<int>(e)}).members);
  for (const auto& per_dim : table.orbits)
    for (const auto& orbit : per_dim) members.insert(orbit.stabilizer.members);
  std::vector<Subgroup> out;
  for (const auto& m : members) out.push_back(Subgroup{g, m});
  return out;
}

inline RelationLattice pointevals_relations(
    const ColouredComplex& x, const OrbitTable& table,
    SubgroupPolicy policy = SubgroupPolicy::all) {
  RelationLattice lattice;
  std::set<std::map<SiteId, IntVector>> seen;

  for (const auto& h : policy_subgroups(table, policy)) {
    auto fixed = fixed_subcomplex(x, h);
    if (fixed.simplices.empty()) continue;
    auto pool = detail::character_pool(h);

    for (const auto& component : fixed.components) {
      // meeting members per site, in site order
      std::map<SiteId, std::vector<Simplex>> meets;
      for (const auto& s : component) meets[table.site(s)].push_back(s);
      if (meets.size() < 2) continue;

      for (const auto& chi : pool) {
        auto base_it = meets.begin();
        LefschetzClass base = detail::induced_atom(table, base_it->second.front(), chi);
        for (auto it = std::next(base_it); it != meets.end(); ++it)
          for (const auto& member : it->second) {
            LefschetzClass gen = base - detail::induced_atom(table, member, chi);
            if (gen.is_zero()) continue;
            if (seen.insert(gen.atoms).second) lattice.generators.push_back(std::move(gen));
          }
      }
    }
  }
  return lattice;
}

// Shared coordinate frame: the union of (site, conjugacy class) slots that
// occur in any of the given classes, in site order.
struct CoordinateFrame {
  std::vector<std::pair<SiteId, int>> slots;
  std::map<SiteId, std::pair<std::size_t, std::size_t>> ranges;  // site -> [begin, size)

  static CoordinateFrame spanning(const std::vector<const LefschetzClass*>& classes) {
    CoordinateFrame frame;
    std::map<SiteId, std::size_t> sizes;
    for (const auto* cls : classes)
      for (const auto& [site, vec] : cls->atoms) {
        auto [it, fresh] = sizes.emplace(site, vec.size());
        if (!fresh && it->second != vec.size())
          throw Error("coordinate mismatch: atom vectors disagree across classes");
      }
    for (const auto& [site, size] : sizes) {
      frame.ranges.emplace(site, std::make_pair(frame.slots.size(), size));
      for (std::size_t c = 0; c < size; ++c)
        frame.slots.emplace_back(site, static_cast<int>(c));
    }
    return frame;
  }

  IntVector flatten(const LefschetzClass& cls) const {
    IntVector out(slots.size(), 0);
    for (const auto& [site, vec] : cls.atoms) {
      auto it = ranges.find(site);
      if (it == ranges.end()) throw Error("coordinate mismatch: unknown site");
      for (std::size_t c = 0; c < vec.size(); ++c) out[it->second.first + c] = vec[c];
    }
    return out;
  }

  LefschetzClass unflatten(const IntVector& v) const {
    LefschetzClass out;
    for (const auto& [site, range] : ranges) {
      IntVector vec(v.begin() + range.first, v.begin() + range.first + range.second);
      out.atoms.emplace(site, std::move(vec));
    }
    out.prune();
    return out;
  }
};

struct EqualityVerdict {
  bool equal = false;
  IntVector certificate;   // over the relation generators, when equal
  LefschetzClass residual; // the reduced difference, when not proven equal
};

// Equality modulo the relation lattice, decided by integer lattice
// membership of the flattened difference. "not proven" is not a disproof:
// the relation lattice is a sound under-approximation.
inline EqualityVerdict classes_equal_mod_relations(const LefschetzClass& u,
                                                   const LefschetzClass& v,
                                                   const RelationLattice& relations) {
  // shortest certificates first: zero difference, then a single signed
  // generator
  {
    auto diff = u - v;
    EqualityVerdict verdict;
    if (diff.is_zero()) {
      verdict.equal = true;
      verdict.certificate.assign(relations.generators.size(), Int(0));
      return verdict;
    }
    for (std::size_t i = 0; i < relations.generators.size(); ++i) {
      const auto& gen = relations.generators[i];
      int match = gen == diff ? 1 : (gen.scaled(Int(-1)) == diff ? -1 : 0);
      if (match != 0) {
        verdict.equal = true;
        verdict.certificate.assign(relations.generators.size(), Int(0));
        verdict.certificate[i] = match;
        return verdict;
      }
    }
  }

  std::vector<const LefschetzClass*> all{&u, &v};
  for (const auto& gen : relations.generators) all.push_back(&gen);
  auto frame = CoordinateFrame::spanning(all);

  std::vector<IntVector> columns;
  columns.reserve(relations.generators.size());
  for (const auto& gen : relations.generators) columns.push_back(frame.flatten(gen));
  IntLattice lattice(frame.slots.size(), std::move(columns));

  auto diff = u - v;
  auto result = lattice.membership(frame.flatten(diff));
  EqualityVerdict verdict;
  verdict.equal = result.inside;
  if (result.inside)
    verdict.certificate = std::move(result.certificate);
  else
    verdict.residual = frame.unflatten(result.residual);
  return verdict;
}

}  // namespace eqlef
