#pragma once

#include <vector>

#include "eqlef/complex.hpp"
#include "eqlef/matrix.hpp"

namespace eqlef {

// One level of barycentric subdivision data. Vertices of the level-k
// complex are simplices of the level-(k-1) complex; simplices are flags.
// Each vertex records the minimal base-complex simplex containing it (its
// carrier) and its exact barycentric coordinates over the base vertices.
struct SubdividedComplex {
  int level = 0;
  ColouredComplex complex;
  GroupRef group;  // induced action, element i aligned with element i of the base group
  std::vector<Simplex> vertex_carrier;    // per vertex, a base-complex simplex
  std::vector<RatVector> vertex_coords;   // per vertex, dense over base vertices

  // Minimal base simplex containing s: the union of its vertex carriers.
  // At level >= 1 the vertex carriers of a flag are nested, so this is the
  // carrier of the flag's top vertex; at level 0 it is s itself.
  Simplex carrier_of(const Simplex& s) const {
    Simplex carrier;
    for (int v : s) {
      Simplex merged;
      std::set_union(carrier.begin(), carrier.end(), vertex_carrier[v].begin(),
                     vertex_carrier[v].end(), std::back_inserter(merged));
      carrier = std::move(merged);
    }
    return carrier;
  }
};

inline SubdividedComplex level0(const ColouredComplex& x, GroupRef g) {
  SubdividedComplex out;
  out.level = 0;
  out.complex = x;
  out.group = std::move(g);
  out.vertex_carrier.resize(x.vertex_count());
  out.vertex_coords.assign(x.vertex_count(), RatVector(x.vertex_count(), Rat(0)));
  for (std::size_t v = 0; v < x.vertex_count(); ++v) {
    out.vertex_carrier[v] = Simplex{static_cast<int>(v)};
    out.vertex_coords[v][v] = 1;
  }
  return out;
}

inline SubdividedComplex subdivide(const SubdividedComplex& prev) {
  const ColouredComplex& pc = prev.complex;
  SubdividedComplex out;
  out.level = prev.level + 1;

  // new vertices = simplices of the previous level, dimension-major
  std::vector<Simplex> new_vertices;
  std::map<Simplex, int> vertex_id;
  std::vector<std::string> names;
  std::vector<int> colours;
  for (int d = 0; d <= pc.dim; ++d)
    for (const auto& s : pc.simplices[d]) {
      vertex_id.emplace(s, static_cast<int>(new_vertices.size()));
      new_vertices.push_back(s);
      names.push_back(pc.simplex_name(s));
      colours.push_back(d);
    }

  // flags: all chains in the face order, built dimension by dimension
  std::map<Simplex, std::vector<Simplex>> chains_ending;  // prev simplex -> flags (new ids)
  std::vector<Simplex> all_flags;
  for (int d = 0; d <= pc.dim; ++d)
    for (const auto& s : pc.simplices[d]) {
      std::vector<Simplex> own;
      own.push_back(Simplex{vertex_id.at(s)});
      // proper faces = nonempty proper subsets
      const std::size_t n = s.size();
      for (std::size_t mask = 1; mask + 1 < (std::size_t(1) << n); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::size_t(1) << i)) face.push_back(s[i]);
        for (const auto& chain : chains_ending.at(face)) {
          Simplex extended = chain;
          extended.push_back(vertex_id.at(s));
          own.push_back(std::move(extended));
        }
      }
      for (const auto& f : own) all_flags.push_back(f);
      chains_ending.emplace(s, std::move(own));
    }

  out.complex = make_complex(std::move(names), std::move(colours), all_flags);

  // carriers and coordinates
  const std::size_t base_n = prev.vertex_coords.empty()
                                 ? 0
                                 : prev.vertex_coords.front().size();
  out.vertex_carrier.resize(new_vertices.size());
  out.vertex_coords.assign(new_vertices.size(), RatVector(base_n, Rat(0)));
  for (std::size_t v = 0; v < new_vertices.size(); ++v) {
    const Simplex& s = new_vertices[v];
    Simplex carrier;
    for (int pv : s) {
      const Simplex& c = prev.vertex_carrier[pv];
      Simplex merged;
      std::set_union(carrier.begin(), carrier.end(), c.begin(), c.end(),
                     std::back_inserter(merged));
      carrier = std::move(merged);
    }
    out.vertex_carrier[v] = std::move(carrier);
    Rat weight = Rat(1) / Rat(static_cast<long>(s.size()));
    for (int pv : s)
      for (std::size_t j = 0; j < base_n; ++j)
        out.vertex_coords[v][j] += weight * prev.vertex_coords[pv][j];
  }

  // induced group action on the new vertex set, element-aligned
  std::vector<Perm> induced;
  induced.reserve(prev.group->order());
  for (std::size_t e = 0; e < prev.group->order(); ++e) {
    std::vector<int> images(new_vertices.size());
    for (std::size_t v = 0; v < new_vertices.size(); ++v)
      images[v] = vertex_id.at(apply_perm(prev.group->element(e), new_vertices[v]));
    induced.emplace_back(std::move(images));
  }
  out.group = PermGroup::from_elements_aligned(std::move(induced));
  return out;
}

// Levels 0..k of the subdivision tower over (X, G).
inline std::vector<SubdividedComplex> subdivision_tower(const ColouredComplex& x,
                                                        const GroupRef& g, int k) {
  std::vector<SubdividedComplex> levels;
  levels.push_back(level0(x, g));
  for (int i = 0; i < k; ++i) levels.push_back(subdivide(levels.back()));
  return levels;
}

}  // namespace eqlef
