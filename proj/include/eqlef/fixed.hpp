#pragma once

#include <functional>
#include <numeric>
#include <vector>

#include "eqlef/complex.hpp"

namespace eqlef {

// Connected components of a simplex family under shared vertices, ordered
// by smallest vertex; each component keeps the input order of its
// simplices.
inline std::vector<std::vector<Simplex>> simplex_components(
    const std::vector<Simplex>& simplices) {
  int max_vertex = -1;
  for (const auto& s : simplices)
    for (int v : s) max_vertex = std::max(max_vertex, v);

  std::vector<int> parent(max_vertex + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& s : simplices)
    for (std::size_t i = 1; i < s.size(); ++i) {
      int a = find(s[0]), b = find(s[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  std::map<int, std::vector<Simplex>> by_root;
  for (const auto& s : simplices) by_root[find(s[0])].push_back(s);
  std::vector<std::vector<Simplex>> out;
  for (auto& [root, members] : by_root) out.push_back(std::move(members));
  return out;
}

// The subcomplex of simplices fixed (pointwise, by colour preservation) by
// every element of H, split into connected components.
struct FixedSubcomplex {
  std::vector<Simplex> simplices;                // dimension-major, lex
  std::vector<std::vector<Simplex>> components;  // ordered by smallest vertex
};

inline FixedSubcomplex fixed_subcomplex(const ColouredComplex& x, const Subgroup& h) {
  FixedSubcomplex out;
  for (const auto& list : x.simplices)
    for (const auto& s : list) {
      bool fixed = true;
      for (int m : h.members)
        if (!(apply_perm(h.parent->element(m), s) == s)) {
          fixed = false;
          break;
        }
      if (fixed) out.simplices.push_back(s);
    }
  out.components = simplex_components(out.simplices);
  return out;
}

}  // namespace eqlef
