#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "eqlef/class_function.hpp"
#include "eqlef/matrix.hpp"

namespace eqlef {

// Exact orthogonal representation of a subgroup on Q^dim. Scene authors
// supply matrices for a generating set; the closure fills in the rest and
// every group law is checked exactly.
class OrthogonalActionData {
 public:
  OrthogonalActionData(Subgroup h, std::size_t dim, std::vector<RatMatrix> rho_by_member)
      : subgroup_(std::move(h)), dim_(dim), rho_(std::move(rho_by_member)) {
    if (rho_.size() != subgroup_.members.size())
      throw Error("orthogonal action: one matrix per subgroup member required");
    validate();
  }

  // Extend generator images multiplicatively; conflicting or insufficient
  // images are rejected.
  static OrthogonalActionData from_generators(
      const Subgroup& h, std::size_t dim,
      const std::vector<std::pair<int, RatMatrix>>& generator_images) {
    const auto& p = *h.parent;
    std::map<int, RatMatrix> known;
    known.emplace(0, RatMatrix::identity(dim));
    for (const auto& [g, m] : generator_images) {
      if (!h.contains(g)) throw Error("orthogonal action: matrix given for element outside the subgroup");
      if (m.rows() != dim || m.cols() != dim)
        throw Error("orthogonal action: matrix dimension mismatch");
      if (!(m.transposed() * m == RatMatrix::identity(dim)))
        throw Error("orthogonal action: matrix is not orthogonal");
      auto [it, fresh] = known.emplace(g, m);
      if (!fresh && !(it->second == m))
        throw Error("orthogonal action: conflicting matrices for one element");
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::pair<int, RatMatrix>> snapshot(known.begin(), known.end());
      for (const auto& [a, ma] : snapshot)
        for (const auto& [b, mb] : snapshot) {
          int ab = p.mul(a, b);
          RatMatrix mab = ma * mb;
          auto it = known.find(ab);
          if (it == known.end()) {
            known.emplace(ab, std::move(mab));
            grew = true;
          } else if (!(it->second == mab)) {
            throw Error("orthogonal action: generator images are inconsistent");
          }
        }
    }
    if (known.size() != h.members.size())
      throw Error("orthogonal action: images do not generate the whole subgroup");
    std::vector<RatMatrix> rho;
    rho.reserve(h.members.size());
    for (int m : h.members) rho.push_back(known.at(m));
    return OrthogonalActionData(h, dim, std::move(rho));
  }

  const Subgroup& subgroup() const { return subgroup_; }
  std::size_t dim() const { return dim_; }

  const RatMatrix& rho(int element_index) const {
    auto pos = std::lower_bound(subgroup_.members.begin(), subgroup_.members.end(),
                                element_index) -
               subgroup_.members.begin();
    if (pos == static_cast<long>(subgroup_.members.size()) ||
        subgroup_.members[pos] != element_index)
      throw Error("orthogonal action: element outside the subgroup");
    return rho_[pos];
  }

 private:
  void validate() const {
    const auto& p = *subgroup_.parent;
    RatMatrix id = RatMatrix::identity(dim_);
    for (std::size_t i = 0; i < rho_.size(); ++i) {
      if (rho_[i].rows() != dim_ || rho_[i].cols() != dim_)
        throw Error("orthogonal action: matrix dimension mismatch");
      if (!(rho_[i].transposed() * rho_[i] == id))
        throw Error("orthogonal action: matrix is not orthogonal");
    }
    if (!(rho(0) == id)) throw Error("orthogonal action: rho(e) != I");
    for (int a : subgroup_.members)
      for (int b : subgroup_.members)
        if (!(rho(a) * rho(b) == rho(p.mul(a, b))))
          throw Error("orthogonal action: rho is not a homomorphism");
  }

  Subgroup subgroup_;
  std::size_t dim_;
  std::vector<RatMatrix> rho_;  // aligned with subgroup members
};

enum class Parity { even, odd };

inline const char* parity_str(Parity p) { return p == Parity::even ? "even" : "odd"; }

// The graded sign line bundle of a commuting invertible map, as a signed
// class function cf(g) = sign det(A|Fix(g)), together with the equivalent
// (parity, character) presentation: cf = (-1)^parity * chi, chi(e) = +1.
struct SignedSignCharacter {
  ClassFunction cf;
  Parity parity;
  ClassFunction chi;

  static SignedSignCharacter from_cf(ClassFunction cf_in) {
    SignedSignCharacter s{std::move(cf_in), Parity::even, {}};
    for (const auto& v : s.cf.values)
      if (v != 1 && v != -1) throw Error("sign character values must be +-1");
    s.parity = (s.cf.at_identity() == -1) ? Parity::odd : Parity::even;
    s.chi = s.cf;
    if (s.parity == Parity::odd)
      for (auto& v : s.chi.values) v = -v;
    return s;
  }
};

inline void require_commutes(const OrthogonalActionData& data, const RatMatrix& a) {
  for (int g : data.subgroup().members)
    if (!(a * data.rho(g) == data.rho(g) * a))
      throw Error("does not commute with the action");
}

// cf(g) = sign det of A restricted to the fixed subspace of rho(g).
inline SignedSignCharacter signed_sign_character(const OrthogonalActionData& data,
                                                 const RatMatrix& a) {
  if (a.rows() != data.dim() || a.cols() != data.dim())
    throw Error("sign character: matrix dimension mismatch");
  if (det_sign(a) == 0) throw Error("singular A");
  require_commutes(data, a);

  const Subgroup& h = data.subgroup();
  std::vector<Rat> by_member;
  by_member.reserve(h.members.size());
  for (int g : h.members) {
    auto basis = fixed_subspace(data.rho(g));
    by_member.push_back(det_sign(restrict_operator(a, basis)));
  }
  // Constancy on classes is a theorem for orthogonal actions; the
  // element-wise construction re-checks it.
  return SignedSignCharacter::from_cf(class_function_from_elements(h, by_member));
}

inline SignedSignCharacter tensor(const SignedSignCharacter& s1,
                                  const SignedSignCharacter& s2) {
  if (!(s1.cf.subgroup == s2.cf.subgroup))
    throw Error("tensor: mismatched subgroups");
  ClassFunction cf = s1.cf;
  for (std::size_t i = 0; i < cf.values.size(); ++i) cf.values[i] *= s2.cf.values[i];
  return SignedSignCharacter::from_cf(std::move(cf));
}

// Degree table indexed by conjugacy classes of subgroups L of H: the sign
// of det of A on the joint fixed subspace of L. Restricting to cyclic L
// recovers the signed class function.
struct SubgroupDegree {
  Subgroup representative;
  int value;  // -1 or +1
};

inline std::vector<RatVector> joint_fixed_subspace(const OrthogonalActionData& data,
                                                   const Subgroup& l) {
  const std::size_t n = data.dim();
  std::vector<int> nontrivial;
  for (int g : l.members)
    if (g != 0) nontrivial.push_back(g);
  RatMatrix stacked(nontrivial.size() * n, n);
  for (std::size_t k = 0; k < nontrivial.size(); ++k) {
    const RatMatrix& m = data.rho(nontrivial[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        stacked(k * n + i, j) = m(i, j) - (i == j ? Rat(1) : Rat(0));
  }
  return kernel_basis(stacked);
}

inline std::vector<SubgroupDegree> lueck_rosenberg_degree(
    const OrthogonalActionData& data, const RatMatrix& a) {
  if (det_sign(a) == 0) throw Error("singular A");
  require_commutes(data, a);

  const Subgroup& h = data.subgroup();
  auto subgroups = subgroups_within(h);
  // Group the subgroups into H-conjugacy classes, keyed by the smallest
  // member list in the class.
  std::map<std::vector<int>, std::vector<int>> class_rep;  // canonical -> members
  for (const auto& l : subgroups) {
    std::vector<int> canon = l.members;
    for (int g : h.members) {
      auto conj = conjugate_subgroup(l, g).members;
      if (conj < canon) canon = std::move(conj);
    }
    auto it = class_rep.find(canon);
    if (it == class_rep.end()) class_rep.emplace(canon, l.members);
  }

  std::vector<SubgroupDegree> out;
  for (const auto& [canon, members] : class_rep) {
    Subgroup l{h.parent, canon};
    auto basis = joint_fixed_subspace(data, l);
    out.push_back(SubgroupDegree{l, det_sign(restrict_operator(a, basis))});
  }
  return out;
}

}  // namespace eqlef
