#pragma once

#include <functional>
#include <map>
#include <vector>

#include "eqlef/orbits.hpp"
#include "eqlef/subdivision.hpp"

namespace eqlef {

// Simplicial self-map data: a vertex map from the level-k subdivision back
// to the base complex. The induced cellular chain map is recovered from
// signed counts of top-dimensional flags.
struct CellularMapSpec {
  int level = 0;
  std::vector<int> vertex_images;  // level-k vertex -> base vertex
};

// Orientation convention: per base simplex a sign, +1 meaning "increasing
// colour order". The default convention is all +1; chain map diagonals do
// not depend on the choice.
using Orientation = std::function<int(const Simplex&)>;

inline int canonical_orientation(const Simplex&) { return 1; }

inline void validate_map(const ColouredComplex& x,
                         const std::vector<SubdividedComplex>& levels,
                         const CellularMapSpec& f) {
  if (f.level < 0 || f.level >= static_cast<int>(levels.size()))
    throw Error("map level outside the subdivision tower");
  const SubdividedComplex& top = levels[f.level];
  if (f.vertex_images.size() != top.complex.vertex_count())
    throw Error("map must assign an image to every level-" +
                std::to_string(f.level) + " vertex");
  for (int img : f.vertex_images)
    if (img < 0 || static_cast<std::size_t>(img) >= x.vertex_count())
      throw Error("map image is not a vertex of the base complex");

  for (const auto& list : top.complex.simplices)
    for (const auto& s : list) {
      Simplex image;
      for (int v : s) image.push_back(f.vertex_images[v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (!x.has_simplex(image))
        throw Error("map is not simplicial on " + top.complex.simplex_name(s));
    }

  const GroupRef& base = levels.front().group;
  for (std::size_t e = 0; e < base->order(); ++e) {
    const Perm& up = top.group->element(e);
    const Perm& down = base->element(e);
    for (std::size_t v = 0; v < top.complex.vertex_count(); ++v)
      if (f.vertex_images[up(static_cast<int>(v))] !=
          down(f.vertex_images[v]))
        throw Error("map is not equivariant at level vertex " +
                    top.complex.vertex_names[v] + " under element " +
                    down.cycle_str(x.vertex_names));
  }
}

// Sign of the flag inside its carrier: determinant of the barycentric
// coordinates of the flag's vertices (in subdivision colour order) over
// the carrier's vertices (in base colour order).
inline int subdivision_sign(const ColouredComplex& x, const SubdividedComplex& level_k,
                            const Simplex& flag, const Simplex& carrier) {
  if (flag.size() != carrier.size())
    throw Error("subdivision_sign: dimension mismatch");
  if (!(level_k.carrier_of(flag) == carrier))
    throw Error("subdivision_sign: carrier mismatch");
  auto rows = level_k.complex.colour_ordered(flag);
  auto cols = x.colour_ordered(carrier);
  RatMatrix m(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      m(i, j) = level_k.vertex_coords[rows[i]][cols[j]];
  int s = det_sign(m);
  if (s == 0) throw Error("subdivision_sign: degenerate flag");
  return s;
}

// 0 when the vertex map degenerates the flag or misses the target;
// otherwise the parity of the permutation aligning the images with the
// target's colour order.
inline int map_vertex_sign(const ColouredComplex& x, const SubdividedComplex& level_k,
                           const CellularMapSpec& f, const Simplex& flag,
                           const Simplex& target) {
  auto ordered = level_k.complex.colour_ordered(flag);
  std::vector<int> images;
  images.reserve(ordered.size());
  for (int v : ordered) images.push_back(f.vertex_images[v]);

  Simplex image_set = images;
  std::sort(image_set.begin(), image_set.end());
  if (std::adjacent_find(image_set.begin(), image_set.end()) != image_set.end())
    return 0;
  if (image_set != target) return 0;

  auto target_order = x.colour_ordered(target);
  std::vector<int> perm(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    auto it = std::find(target_order.begin(), target_order.end(), images[i]);
    perm[i] = static_cast<int>(it - target_order.begin());
  }
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) sign = -sign;
  return sign;
}

// Top-dimensional flags of the level-k complex bucketed by their carrier,
// kept only when the dimensions agree (those are the flags that subdivide
// the carrier).
inline std::map<Simplex, std::vector<Simplex>> flags_by_carrier(
    const SubdividedComplex& level_k) {
  std::map<Simplex, std::vector<Simplex>> buckets;
  for (const auto& list : level_k.complex.simplices)
    for (const auto& s : list) {
      const Simplex& carrier = level_k.carrier_of(s);
      if (carrier.size() == s.size()) buckets[carrier].push_back(s);
    }
  return buckets;
}

// Subdivision chain operator C_d(base) -> C_d(level k): the signed sum of
// the flags subdividing each simplex.
inline std::vector<RatMatrix> subdivision_chain_matrices(
    const ColouredComplex& x, const SubdividedComplex& level_k) {
  std::vector<RatMatrix> sd;
  for (int d = 0; d <= x.dim; ++d)
    sd.emplace_back(level_k.complex.simplices.size() > static_cast<std::size_t>(d)
                        ? level_k.complex.simplices[d].size()
                        : 0,
                    x.simplices[d].size());
  auto buckets = flags_by_carrier(level_k);
  for (const auto& [carrier, flags] : buckets) {
    auto [d, col] = x.position.at(carrier);
    for (const auto& flag : flags) {
      int row = level_k.complex.position.at(flag).second;
      sd[d](row, col) += Rat(subdivision_sign(x, level_k, flag, carrier));
    }
  }
  return sd;
}

// Full chain map matrices, one square integer matrix per dimension,
// indexed by the base complex's simplex lists.
inline std::vector<RatMatrix> chain_map_matrices(
    const ColouredComplex& x, const std::vector<SubdividedComplex>& levels,
    const CellularMapSpec& f, const Orientation& orient = canonical_orientation) {
  const SubdividedComplex& top = levels[f.level];
  std::vector<RatMatrix> phi;
  for (int d = 0; d <= x.dim; ++d)
    phi.emplace_back(x.simplices[d].size(), x.simplices[d].size());

  auto buckets = flags_by_carrier(top);
  for (const auto& [carrier, flags] : buckets) {
    auto [d, col] = x.position.at(carrier);
    for (const auto& flag : flags) {
      Simplex image;
      for (int v : flag) image.push_back(f.vertex_images[v]);
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      if (image.size() != flag.size()) continue;
      auto it = x.position.find(image);
      if (it == x.position.end())
        throw Error("chain map: non-simplicial image");
      auto [di, row] = it->second;
      int value = subdivision_sign(x, top, flag, carrier) * orient(carrier) *
                  map_vertex_sign(x, top, f, flag, image) * orient(image);
      phi[d](row, col) += value;
    }
  }
  return phi;
}

// Diagonal multiplicities per orbit site. Equivariance makes the diagonal
// entry constant along each orbit; that is recomputed and asserted here.
inline std::map<SiteId, Int> chain_diagonal(const ColouredComplex& x,
                                            const OrbitTable& table,
                                            const std::vector<SubdividedComplex>& levels,
                                            const CellularMapSpec& f) {
  validate_map(x, levels, f);
  auto phi = chain_map_matrices(x, levels, f);
  std::map<SiteId, Int> out;
  for (int d = 0; d <= x.dim; ++d)
    for (std::size_t o = 0; o < table.orbits[d].size(); ++o) {
      const auto& orbit = table.orbits[d][o];
      Int value;
      bool first = true;
      for (const auto& member : orbit.members) {
        int idx = x.position.at(member).second;
        Int here = to_integer(phi[d](idx, idx));
        if (first) {
          value = here;
          first = false;
        } else if (here != value) {
          throw Error("chain diagonal is not constant on the orbit of " +
                      x.simplex_name(orbit.representative));
        }
      }
      out[SiteId{d, static_cast<int>(o)}] = value;
    }
  return out;
}

}  // namespace eqlef
