#pragma once

// Shared complexes, actions, and map specs used across the test suites.

#include <string>
#include <vector>

#include "eqlef/cellular.hpp"
#include "eqlef/complex.hpp"
#include "eqlef/subdivision.hpp"

namespace fx {

using namespace eqlef;

// Unit circle as a square: vertices 1, i, -1, -i with alternating colours.
inline ColouredComplex square_circle() {
  return make_complex({"1", "i", "-1", "-i"}, {0, 1, 0, 1},
                      {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

// complex conjugation z -> conj(z): swaps i and -i
inline GroupRef conjugation_on_square() {
  return PermGroup::closure(4, {Perm({0, 3, 2, 1})});
}

// Circle as a regular 2m-gon, vertices p0..p(2m-1), alternating colours.
inline ColouredComplex polygon_circle(int half) {
  int n = 2 * half;
  std::vector<std::string> names;
  std::vector<int> colours;
  std::vector<Simplex> edges;
  for (int i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    colours.push_back(i % 2);
    edges.push_back({i, (i + 1) % n});
  }
  return make_complex(names, colours, edges);
}

// dihedral action on the 2m-gon: rotation by two steps and the reflection
// fixing p0
inline GroupRef dihedral_on_polygon(int half) {
  int n = 2 * half;
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 2) % n;
    refl[i] = (n - i) % n;
  }
  return PermGroup::closure(n, {Perm(rot), Perm(refl)});
}

// Boundary of the n-dimensional cross-polytope: vertices +-u1..+-un,
// colour(+-ui) = i-1, maximal simplices = one vertex from each pair.
inline ColouredComplex cross_polytope_boundary(int n) {
  std::vector<std::string> names;
  std::vector<int> colours;
  for (int i = 1; i <= n; ++i) {
    names.push_back("u" + std::to_string(i));
    names.push_back("-u" + std::to_string(i));
    colours.push_back(i - 1);
    colours.push_back(i - 1);
  }
  std::vector<Simplex> maximal;
  for (int signs = 0; signs < (1 << n); ++signs) {
    Simplex s;
    for (int i = 0; i < n; ++i) s.push_back(2 * i + ((signs >> i) & 1));
    maximal.push_back(s);
  }
  return make_complex(names, colours, maximal);
}

// coordinate flip u_k -> -u_k on the cross-polytope boundary (1-based k)
inline GroupRef coordinate_flip(int n, int k) {
  std::vector<int> img(2 * n);
  for (int i = 0; i < 2 * n; ++i) img[i] = i;
  img[2 * (k - 1)] = 2 * (k - 1) + 1;
  img[2 * (k - 1) + 1] = 2 * (k - 1);
  return PermGroup::closure(2 * n, {Perm(img)});
}

// Build a map spec from (level vertex name -> base vertex name) pairs.
inline CellularMapSpec map_by_names(
    const ColouredComplex& x, const std::vector<SubdividedComplex>& levels, int level,
    const std::vector<std::pair<std::string, std::string>>& pairs) {
  const auto& top = levels[level].complex;
  CellularMapSpec f{level, std::vector<int>(top.vertex_count(), -1)};
  for (const auto& [from, to] : pairs)
    f.vertex_images[top.vertex_index(from)] = x.vertex_index(to);
  for (int img : f.vertex_images)
    if (img < 0) throw Error("map_by_names: missing vertex image");
  return f;
}

// z -> z^2 on the square circle, as a simplicial map octagon -> square.
inline CellularMapSpec z2_map(const ColouredComplex& x,
                              const std::vector<SubdividedComplex>& levels) {
  return map_by_names(x, levels, 1,
                      {{"(1)", "1"},
                       {"(i)", "-1"},
                       {"(-1)", "1"},
                       {"(-i)", "-1"},
                       {"(1 i)", "i"},
                       {"(1 -i)", "-i"},
                       {"(i -1)", "-i"},
                       {"(-1 -i)", "i"}});
}

inline CellularMapSpec identity_map(const ColouredComplex& x) {
  CellularMapSpec f{0, {}};
  f.vertex_images.resize(x.vertex_count());
  for (std::size_t v = 0; v < x.vertex_count(); ++v)
    f.vertex_images[v] = static_cast<int>(v);
  return f;
}

// Vertex map of the u_k coordinate flip at level 0.
inline CellularMapSpec flip_map(const ColouredComplex& x, int k) {
  CellularMapSpec f = identity_map(x);
  f.vertex_images[2 * (k - 1)] = 2 * (k - 1) + 1;
  f.vertex_images[2 * (k - 1) + 1] = 2 * (k - 1);
  return f;
}

}  // namespace fx
