#pragma once

#include <vector>

#include "eqlef/cellular.hpp"

namespace eqlef {

// Boundary matrix C_d -> C_{d-1} in the canonical (colour order)
// orientations; for d = 0 a 0-row matrix.
inline RatMatrix boundary_matrix(const ColouredComplex& x, int d,
                                 const Orientation& orient = canonical_orientation) {
  if (d == 0) return RatMatrix(0, x.simplices[0].size());
  RatMatrix b(x.simplices[d - 1].size(), x.simplices[d].size());
  for (std::size_t col = 0; col < x.simplices[d].size(); ++col) {
    const Simplex& s = x.simplices[d][col];
    auto ordered = x.colour_ordered(s);
    for (std::size_t i = 0; i < ordered.size(); ++i) {
      std::vector<int> face_vertices;
      for (std::size_t j = 0; j < ordered.size(); ++j)
        if (j != i) face_vertices.push_back(ordered[j]);
      Simplex face = face_vertices;
      std::sort(face.begin(), face.end());
      int row = x.position.at(face).second;
      int sign = (i % 2 == 0) ? 1 : -1;
      b(row, col) += Rat(sign * orient(s) * orient(face));
    }
  }
  return b;
}

inline Int chain_supertrace(const std::vector<RatMatrix>& phi) {
  Int total = 0;
  for (std::size_t d = 0; d < phi.size(); ++d) {
    Rat tr = 0;
    for (std::size_t i = 0; i < phi[d].rows(); ++i) tr += phi[d](i, i);
    total += (d % 2 == 0) ? to_integer(tr) : -to_integer(tr);
  }
  return total;
}

// Independent columns of m (the pivot columns of its rref), as vectors.
inline std::vector<RatVector> column_space_basis(const RatMatrix& m) {
  RatMatrix r = m;
  std::vector<RatVector> basis;
  for (auto c : rref(r)) basis.push_back(m.column(c));
  return basis;
}

// Supertrace of the induced map on rational homology, computed from the
// full chain map and the boundary matrices by exact rank/complement
// computations. Independent of the chain-level trace, which it oracles.
inline Int homology_supertrace(const ColouredComplex& x,
                               const std::vector<RatMatrix>& phi) {
  Rat total = 0;
  for (int d = 0; d <= x.dim; ++d) {
    auto cycles = kernel_basis(boundary_matrix(x, d));
    std::vector<RatVector> boundaries;
    if (d + 1 <= x.dim) boundaries = column_space_basis(boundary_matrix(x, d + 1));

    // extend the boundary basis to a basis of the cycle space
    const std::size_t n = x.simplices[d].size();
    RatMatrix ext(n, boundaries.size() + cycles.size());
    for (std::size_t j = 0; j < boundaries.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) ext(i, j) = boundaries[j][i];
    for (std::size_t j = 0; j < cycles.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) ext(i, boundaries.size() + j) = cycles[j][i];
    RatMatrix reduced = ext;
    auto pivots = rref(reduced);

    std::vector<RatVector> complement;
    for (auto c : pivots)
      if (c >= boundaries.size()) complement.push_back(cycles[c - boundaries.size()]);

    if (complement.empty()) continue;
    RatMatrix basis(n, boundaries.size() + complement.size());
    for (std::size_t j = 0; j < boundaries.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) basis(i, j) = boundaries[j][i];
    for (std::size_t j = 0; j < complement.size(); ++j)
      for (std::size_t i = 0; i < n; ++i)
        basis(i, boundaries.size() + j) = complement[j][i];

    Rat tr = 0;
    for (std::size_t j = 0; j < complement.size(); ++j) {
      auto image = phi[d].apply(complement[j]);
      auto coeffs = solve(basis, image);
      if (!coeffs) throw Error("chain map does not preserve cycles");
      tr += (*coeffs)[boundaries.size() + j];
    }
    total += (d % 2 == 0) ? tr : -tr;
  }
  return to_integer(total);
}

inline Int homology_trace_oracle(const ColouredComplex& x,
                                 const std::vector<SubdividedComplex>& levels,
                                 const CellularMapSpec& f) {
  validate_map(x, levels, f);
  return homology_supertrace(x, chain_map_matrices(x, levels, f));
}

}  // namespace eqlef
