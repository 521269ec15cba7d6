#pragma once

#include <map>
#include <vector>

#include "eqlef/cellular.hpp"
#include "eqlef/class_function.hpp"
#include "eqlef/fixed.hpp"
#include "eqlef/lattice.hpp"
#include "eqlef/sign_character.hpp"

namespace eqlef {

// Integer formal sum of atoms (orbit site, class function of its
// stabilizer). The vector at a site is indexed by the conjugacy classes of
// the canonical representative's stabilizer; zero vectors are pruned, so
// the representation is canonical.
struct LefschetzClass {
  std::map<SiteId, IntVector> atoms;

  bool is_zero() const { return atoms.empty(); }

  void prune() {
    for (auto it = atoms.begin(); it != atoms.end();) {
      bool zero = true;
      for (const auto& x : it->second)
        if (x != 0) {
          zero = false;
          break;
        }
      it = zero ? atoms.erase(it) : ++it;
    }
  }

  LefschetzClass operator+(const LefschetzClass& o) const {
    LefschetzClass out = *this;
    for (const auto& [site, vec] : o.atoms) {
      auto [it, fresh] = out.atoms.emplace(site, vec);
      if (!fresh) {
        if (it->second.size() != vec.size())
          throw Error("atom vectors disagree in length at one site");
        for (std::size_t i = 0; i < vec.size(); ++i) it->second[i] += vec[i];
      }
    }
    out.prune();
    return out;
  }

  LefschetzClass operator-(const LefschetzClass& o) const {
    return *this + o.scaled(Int(-1));
  }

  LefschetzClass scaled(const Int& c) const {
    LefschetzClass out = *this;
    if (c == 0) {
      out.atoms.clear();
      return out;
    }
    for (auto& [site, vec] : out.atoms)
      for (auto& x : vec) x *= c;
    return out;
  }

  bool operator==(const LefschetzClass& o) const { return atoms == o.atoms; }
};

// The stabilizer's integrality guard: a class function entering an atom
// must be integer-valued.
inline IntVector integer_vector_of(const ClassFunction& cf) {
  IntVector out;
  out.reserve(cf.values.size());
  for (const auto& v : cf.values) {
    if (!is_integer(v))
      throw Error("class function entering an atom is not integer-valued");
    out.push_back(numerator(v));
  }
  return out;
}

// atom(site, coeff * cf); cf must live on the stabilizer of the site's
// canonical representative.
inline void add_atom(LefschetzClass& cls, const OrbitTable& table, SiteId site,
                     const ClassFunction& cf, const Int& coeff = Int(1)) {
  const auto& orbit = table.at(site);
  if (!(cf.subgroup == orbit.stabilizer))
    throw Error("atom class function lives on the wrong stabilizer");
  IntVector vec = integer_vector_of(cf);
  for (auto& x : vec) x *= coeff;
  auto [it, fresh] = cls.atoms.emplace(site, vec);
  if (!fresh)
    for (std::size_t i = 0; i < vec.size(); ++i) it->second[i] += vec[i];
  cls.prune();
}

// Forgets equivariance: each atom counts orbit-size times its value at the
// identity. For a trivial group this is the classical Lefschetz number.
inline Int lefschetz_index(const LefschetzClass& cls, const OrbitTable& table) {
  Int total = 0;
  for (const auto& [site, vec] : cls.atoms) {
    const auto& orbit = table.at(site);
    auto classes = conjugacy_classes(orbit.stabilizer);
    total += Int(static_cast<long>(orbit.members.size())) * vec[classes.class_of(0)];
  }
  return total;
}

// sum over orbit sites of (-1)^dim Phi_sigma,sigma [xi_site]
inline LefschetzClass combinatorial_lefschetz(const ColouredComplex& x,
                                              const OrbitTable& table,
                                              const std::vector<SubdividedComplex>& levels,
                                              const CellularMapSpec& f) {
  auto diag = chain_diagonal(x, table, levels, f);
  LefschetzClass out;
  for (const auto& [site, phi] : diag) {
    Int n = (site.dim % 2 == 0) ? phi : -phi;
    if (n == 0) continue;
    add_atom(out, table, site, trivial_character(table.at(site).stabilizer), n);
  }
  return out;
}

// Lefschetz class of the identity: the equivariant Euler characteristic.
inline LefschetzClass euler_characteristic(const ColouredComplex& x,
                                           const OrbitTable& table) {
  LefschetzClass out;
  for (int d = 0; d <= x.dim; ++d)
    for (std::size_t o = 0; o < table.orbits[d].size(); ++o) {
      SiteId site{d, static_cast<int>(o)};
      add_atom(out, table, site, trivial_character(table.at(site).stabilizer),
               (d % 2 == 0) ? Int(1) : Int(-1));
    }
  return out;
}

// Setwise stabilizer of an arbitrary simplex (not necessarily a canonical
// representative).
inline Subgroup setwise_stabilizer(const GroupRef& g, const Simplex& s) {
  std::vector<int> members;
  for (std::size_t e = 0; e < g->order(); ++e)
    if (apply_perm(g->element(e), s) == s) members.push_back(static_cast<int>(e));
  return Subgroup{g, std::move(members)};
}

// Transverse fixed-point datum: the fixed point is the barycentre of
// site_simplex, the stabilizer acts orthogonally on the tangent space, and
// dphi is the derivative there.
struct FixedOrbitDatum {
  Simplex site_simplex;
  OrthogonalActionData tangent;
  RatMatrix dphi;
};

inline LefschetzClass smooth_transverse_lefschetz(const ColouredComplex& x,
                                                  const OrbitTable& table,
                                                  const std::vector<FixedOrbitDatum>& data) {
  LefschetzClass out;
  for (const auto& datum : data) {
    if (!x.has_simplex(datum.site_simplex))
      throw Error("fixed-point site is not a simplex of the complex");
    Subgroup stab = setwise_stabilizer(table.group, datum.site_simplex);
    if (!(datum.tangent.subgroup() == stab))
      throw Error("tangent action must live on the stabilizer of the site " +
                  x.simplex_name(datum.site_simplex));
    if (datum.dphi.rows() != datum.tangent.dim() || datum.dphi.cols() != datum.tangent.dim())
      throw Error("dphi dimension mismatch");

    RatMatrix one_minus = RatMatrix::identity(datum.tangent.dim()) - datum.dphi;
    if (det_sign(one_minus) == 0) throw Error("not transverse: id - dphi is singular");

    auto sign = signed_sign_character(datum.tangent, one_minus);

    SiteId site = table.site(datum.site_simplex);
    int t = table.transporter_to(site, datum.site_simplex);
    // cf lives on Stab(member); move it to Stab(representative) along the
    // transporter rep -> member: conjugating by its inverse.
    auto cf_rep = conjugate_transport(sign.cf, table.group->inv(t));
    add_atom(out, table, site, cf_rep);
  }
  return out;
}

// Normal data for one representative component of the fixed submanifold.
struct ComponentNormalData {
  Simplex at;  // any simplex inside the chosen component
  OrthogonalActionData normal;
  RatMatrix dnu;
};

struct SubmanifoldDatum {
  std::vector<Simplex> y_simplices;
  std::vector<ComponentNormalData> components;
};

// Eul_Y twisted orbit-wise by the sign character of id - dnu on each
// component of Y.
inline LefschetzClass smooth_submanifold_lefschetz(const ColouredComplex& x,
                                                   const OrbitTable& table,
                                                   const SubmanifoldDatum& sub) {
  const GroupRef& g = table.group;

  std::set<Simplex> y_set(sub.y_simplices.begin(), sub.y_simplices.end());
  if (y_set.empty()) throw Error("empty fixed submanifold");
  for (const auto& s : y_set) {
    if (!x.has_simplex(s))
      throw Error("submanifold simplex " + x.simplex_name(s) + " is not in the complex");
    if (s.size() > 1) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != i) face.push_back(s[j]);
        if (!y_set.count(face))
          throw Error("submanifold is not face-closed at " + x.simplex_name(s));
      }
    }
    for (std::size_t e = 0; e < g->order(); ++e)
      if (!y_set.count(apply_perm(g->element(e), s)))
        throw Error("submanifold is not invariant at " + x.simplex_name(s));
  }

  auto components = simplex_components(std::vector<Simplex>(y_set.begin(), y_set.end()));

  // locate each supplied component and compute its signed character
  struct ResolvedComponent {
    std::set<Simplex> simplices;
    Subgroup setwise;
    SignedSignCharacter sign;
  };
  std::vector<ResolvedComponent> resolved;
  for (const auto& data : sub.components) {
    const std::vector<Simplex>* found = nullptr;
    for (const auto& comp : components)
      if (std::binary_search(comp.begin(), comp.end(), data.at)) {
        found = &comp;
        break;
      }
    if (!found)
      throw Error("component marker " + x.simplex_name(data.at) +
                  " is not in the submanifold");
    ResolvedComponent rc{std::set<Simplex>(found->begin(), found->end()), {}, {}};

    std::vector<int> members;
    for (std::size_t e = 0; e < g->order(); ++e) {
      bool preserves = true;
      for (const auto& s : rc.simplices)
        if (!rc.simplices.count(apply_perm(g->element(e), s))) {
          preserves = false;
          break;
        }
      if (preserves) members.push_back(static_cast<int>(e));
    }
    rc.setwise = Subgroup{g, std::move(members)};
    if (!(data.normal.subgroup() == rc.setwise))
      throw Error("normal action must live on the setwise stabilizer of the component at " +
                  x.simplex_name(data.at));
    if (data.dnu.rows() != data.normal.dim() || data.dnu.cols() != data.normal.dim())
      throw Error("dnu dimension mismatch");
    RatMatrix one_minus = RatMatrix::identity(data.normal.dim()) - data.dnu;
    if (det_sign(one_minus) == 0)
      throw Error("id - dnu is singular on the component at " + x.simplex_name(data.at));
    rc.sign = signed_sign_character(data.normal, one_minus);
    resolved.push_back(std::move(rc));
  }

  LefschetzClass out;
  for (int d = 0; d <= x.dim; ++d)
    for (std::size_t o = 0; o < table.orbits[d].size(); ++o) {
      SiteId site{d, static_cast<int>(o)};
      const auto& orbit = table.at(site);
      if (!y_set.count(orbit.representative)) continue;

      // find a supplied component and a group element carrying it onto the
      // component of the representative
      const ResolvedComponent* source = nullptr;
      int carry = -1;
      for (const auto& rc : resolved) {
        for (std::size_t e = 0; e < g->order() && carry < 0; ++e) {
          Simplex moved = apply_perm(g->element(e), *rc.simplices.begin());
          // same component iff the moved simplex's component contains the rep
          for (const auto& comp : components)
            if (std::binary_search(comp.begin(), comp.end(), moved) &&
                std::binary_search(comp.begin(), comp.end(), orbit.representative)) {
              carry = static_cast<int>(e);
              source = &rc;
              break;
            }
        }
        if (source) break;
      }
      if (!source)
        throw Error("no normal data covers the component of " +
                    x.simplex_name(orbit.representative));

      auto cf_here = conjugate_transport(source->sign.cf, carry);
      if (!cf_here.subgroup.contains_all(orbit.stabilizer))
        throw Error("simplex stabilizer is not contained in its component stabilizer at " +
                    x.simplex_name(orbit.representative));
      auto cf = restrict_cf(cf_here, orbit.stabilizer);
      add_atom(out, table, site, cf, (d % 2 == 0) ? Int(1) : Int(-1));
    }
  return out;
}

// A class on X rewritten over the subdivision: the atom at the orbit of a
// simplex becomes the atom at the orbit of the corresponding subdivision
// vertex (same stabilizer, element-aligned groups).
inline LefschetzClass embed_into_subdivision(const LefschetzClass& cls,
                                             const ColouredComplex& x,
                                             const OrbitTable& table,
                                             const SubdividedComplex& sd,
                                             const OrbitTable& sd_table) {
  if (sd.complex.vertex_count() != x.simplex_count())
    throw Error("subdivision does not belong to this complex");
  // dimension-major vertex ids in the subdivision
  std::vector<int> offset(x.dim + 1, 0);
  for (int d = 1; d <= x.dim; ++d)
    offset[d] = offset[d - 1] + static_cast<int>(x.simplices[d - 1].size());

  LefschetzClass out;
  for (const auto& [site, vec] : cls.atoms) {
    const auto& orbit = table.at(site);
    int vid = offset[site.dim] + x.position.at(orbit.representative).second;
    SiteId new_site = sd_table.site(Simplex{vid});
    const auto& new_orbit = sd_table.at(new_site);
    if (new_orbit.stabilizer.members != orbit.stabilizer.members)
      throw Error("subdivision vertex stabilizer is misaligned");
    auto [it, fresh] = out.atoms.emplace(new_site, vec);
    if (!fresh)
      for (std::size_t i = 0; i < vec.size(); ++i) it->second[i] += vec[i];
  }
  out.prune();
  return out;
}

}  // namespace eqlef
