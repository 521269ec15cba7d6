#pragma once

#include <compare>
#include <map>
#include <vector>

#include "eqlef/complex.hpp"

namespace eqlef {

struct SiteId {
  int dim = 0;
  int orbit = 0;
  auto operator<=>(const SiteId&) const = default;
};

struct SimplexOrbit {
  Simplex representative;        // lexicographically smallest member
  std::vector<Simplex> members;  // sorted
  Subgroup stabilizer;           // of the representative
};

// Simplex orbits per dimension, deterministic: representatives appear in
// lexicographic order within each dimension.
struct OrbitTable {
  GroupRef group;
  std::vector<std::vector<SimplexOrbit>> orbits;  // [d]
  std::map<Simplex, SiteId> site_of;

  const SimplexOrbit& at(SiteId s) const { return orbits[s.dim][s.orbit]; }

  SiteId site(const Simplex& s) const {
    auto it = site_of.find(s);
    if (it == site_of.end()) throw Error("simplex has no orbit entry");
    return it->second;
  }

  // Some group element carrying the canonical representative to the given
  // member; deterministic (smallest element index).
  int transporter_to(SiteId id, const Simplex& member) const {
    const auto& o = at(id);
    for (std::size_t g = 0; g < group->order(); ++g)
      if (apply_perm(group->element(g), o.representative) == member)
        return static_cast<int>(g);
    throw Error("simplex is not in the orbit");
  }
};

inline OrbitTable orbits_and_stabilizers(const ColouredComplex& x, GroupRef g) {
  OrbitTable table;
  table.group = g;
  table.orbits.resize(x.dim + 1);
  for (int d = 0; d <= x.dim; ++d) {
    for (const auto& s : x.simplices[d]) {
      if (table.site_of.count(s)) continue;
      SimplexOrbit orbit;
      std::set<Simplex> members;
      std::vector<int> stab;
      for (std::size_t e = 0; e < g->order(); ++e) {
        Simplex img = apply_perm(g->element(e), s);
        members.insert(img);
        if (img == s) stab.push_back(static_cast<int>(e));
      }
      orbit.representative = s;  // lex scan order makes s the smallest member
      orbit.members.assign(members.begin(), members.end());
      orbit.stabilizer = Subgroup{g, std::move(stab)};
      SiteId id{d, static_cast<int>(table.orbits[d].size())};
      for (const auto& m : orbit.members) table.site_of.emplace(m, id);
      table.orbits[d].push_back(std::move(orbit));
    }
  }
  return table;
}

}  // namespace eqlef
