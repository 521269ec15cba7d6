#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "eqlef/group.hpp"

namespace eqlef {

using Simplex = std::vector<int>;  // sorted vertex indices

// Finite coloured simplicial complex. Simplices are stored per dimension
// in lexicographic order; the colouring must be injective on every simplex
// (checked by validate_complex, which reports all violations at once).
struct ColouredComplex {
  std::vector<std::string> vertex_names;
  std::vector<int> colours;
  int dim = 0;
  std::vector<std::vector<Simplex>> simplices;      // [d] -> d-simplices
  std::map<Simplex, std::pair<int, int>> position;  // simplex -> (dim, index)

  std::size_t vertex_count() const { return vertex_names.size(); }

  std::size_t simplex_count() const {
    std::size_t n = 0;
    for (const auto& list : simplices) n += list.size();
    return n;
  }

  bool has_simplex(const Simplex& s) const { return position.count(s) > 0; }

  int vertex_index(const std::string& name) const {
    for (std::size_t i = 0; i < vertex_names.size(); ++i)
      if (vertex_names[i] == name) return static_cast<int>(i);
    throw Error("unknown vertex '" + name + "'");
  }

  // Vertices of a simplex in increasing colour order: the canonical
  // orientation used for all sign bookkeeping.
  std::vector<int> colour_ordered(const Simplex& s) const {
    std::vector<int> v = s;
    std::sort(v.begin(), v.end(),
              [&](int a, int b) { return colours[a] < colours[b]; });
    return v;
  }

  std::string simplex_name(const Simplex& s) const {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) out += " ";
      out += vertex_names[s[i]];
    }
    return out + ")";
  }
};

inline Simplex apply_perm(const Perm& g, const Simplex& s) {
  Simplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back(g(v));
  std::sort(out.begin(), out.end());
  return out;
}

// Face closure and indexing. Maximal simplices may overlap or repeat;
// every vertex is a 0-simplex whether or not it is listed.
inline ColouredComplex make_complex(std::vector<std::string> vertex_names,
                                    std::vector<int> colours,
                                    const std::vector<Simplex>& maximal) {
  ColouredComplex x;
  x.vertex_names = std::move(vertex_names);
  x.colours = std::move(colours);
  if (x.colours.size() != x.vertex_names.size())
    throw Error("one colour per vertex required");
  {
    std::set<std::string> seen;
    for (const auto& n : x.vertex_names)
      if (!seen.insert(n).second) throw Error("duplicate vertex name '" + n + "'");
  }

  std::set<Simplex> closed;
  for (std::size_t v = 0; v < x.vertex_names.size(); ++v)
    closed.insert(Simplex{static_cast<int>(v)});
  for (const auto& raw : maximal) {
    Simplex s = raw;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw Error("simplex repeats a vertex: " + x.simplex_name(raw));
    for (int v : s)
      if (v < 0 || static_cast<std::size_t>(v) >= x.vertex_names.size())
        throw Error("simplex uses an unknown vertex index");
    // all nonempty subsets
    const std::size_t n = s.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t(1) << i)) face.push_back(s[i]);
      closed.insert(std::move(face));
    }
  }

  x.dim = 0;
  for (const auto& s : closed) x.dim = std::max<int>(x.dim, static_cast<int>(s.size()) - 1);
  x.simplices.assign(x.dim + 1, {});
  for (const auto& s : closed) x.simplices[s.size() - 1].push_back(s);
  for (auto& list : x.simplices) std::sort(list.begin(), list.end());
  for (int d = 0; d <= x.dim; ++d)
    for (std::size_t i = 0; i < x.simplices[d].size(); ++i)
      x.position.emplace(x.simplices[d][i], std::make_pair(d, static_cast<int>(i)));
  return x;
}

// All colouring violations, one line each; empty means valid.
inline std::vector<std::string> validate_complex(const ColouredComplex& x) {
  std::vector<std::string> diags;
  for (std::size_t v = 0; v < x.vertex_count(); ++v)
    if (x.colours[v] < 0 || x.colours[v] > x.dim)
      diags.push_back("vertex '" + x.vertex_names[v] + "' has colour " +
                      std::to_string(x.colours[v]) + " outside 0.." +
                      std::to_string(x.dim));
  for (const auto& list : x.simplices)
    for (const auto& s : list) {
      std::set<int> cols;
      for (int v : s) cols.insert(x.colours[v]);
      if (cols.size() != s.size())
        diags.push_back("colouring is not injective on simplex " + x.simplex_name(s));
    }
  return diags;
}

// Group action checks: simplices map to simplices, colours are preserved,
// and the pointwise-fixing consequence is re-derived directly.
inline std::vector<std::string> validate_action(const ColouredComplex& x,
                                                const PermGroup& g) {
  std::vector<std::string> diags;
  if (g.degree() != x.vertex_count()) {
    diags.push_back("group degree does not match the vertex count");
    return diags;
  }
  for (std::size_t i = 0; i < g.order(); ++i) {
    const Perm& p = g.element(i);
    for (std::size_t v = 0; v < x.vertex_count(); ++v)
      if (x.colours[p(static_cast<int>(v))] != x.colours[v]) {
        diags.push_back("element " + p.cycle_str(x.vertex_names) +
                        " does not preserve the colour of vertex '" +
                        x.vertex_names[v] + "'");
        break;
      }
    for (const auto& list : x.simplices)
      for (const auto& s : list) {
        Simplex img = apply_perm(p, s);
        if (!x.has_simplex(img)) {
          diags.push_back("element " + p.cycle_str(x.vertex_names) +
                          " maps simplex " + x.simplex_name(s) +
                          " outside the complex");
        } else if (img == s) {
          for (int v : s)
            if (p(v) != v)
              diags.push_back("element " + p.cycle_str(x.vertex_names) +
                              " fixes simplex " + x.simplex_name(s) +
                              " setwise but moves vertex '" + x.vertex_names[v] + "'");
        }
      }
  }
  return diags;
}

inline void require_valid(const ColouredComplex& x, const PermGroup& g) {
  auto diags = validate_complex(x);
  auto more = validate_action(x, g);
  diags.insert(diags.end(), more.begin(), more.end());
  if (!diags.empty()) {
    std::string msg = "invalid complex/action:";
    for (const auto& d : diags) msg += "\n  " + d;
    throw Error(msg);
  }
}

}  // namespace eqlef
