#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "eqlef/rational.hpp"

namespace eqlef {

using IntVector = std::vector<Int>;

// Integer span of a finite generator set, with membership certificates.
// The generator matrix (generators as columns) is brought to column
// Hermite normal form once; the accumulated unimodular column transform
// converts solutions over HNF columns back to coefficients over the
// original generators.
class IntLattice {
 public:
  struct Membership {
    bool inside = false;
    IntVector certificate;  // coefficients over the original generators
    IntVector residual;     // v reduced by the lattice; zero iff inside
  };

  IntLattice(std::size_t ambient_dim, std::vector<IntVector> generators)
      : dim_(ambient_dim), generators_(std::move(generators)) {
    for (const auto& g : generators_)
      if (g.size() != dim_) throw Error("lattice generator has wrong dimension");
    compute_hnf();
  }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<IntVector>& generators() const { return generators_; }
  std::size_t rank() const { return pivots_.size(); }

  Membership membership(const IntVector& v) const {
    if (v.size() != dim_) throw Error("lattice membership: dimension mismatch");
    const std::size_t m = generators_.size();
    Membership result;
    result.residual = v;
    IntVector y(m, 0);
    bool exact = true;
    for (const auto& [row, col] : pivots_) {
      const Int& pivot = hnf_[col][row];
      Int q = result.residual[row] / pivot;
      Int r = result.residual[row] - q * pivot;
      if (r != 0) {
        // Keep the residual canonically reduced even when division fails.
        if (r < 0) {
          r += abs(pivot);
          q -= sign_of(pivot);
        }
        exact = false;
      }
      y[col] = q;
      for (std::size_t i = 0; i < dim_; ++i)
        result.residual[i] -= q * hnf_[col][i];
    }
    for (const auto& x : result.residual)
      if (x != 0) exact = false;
    if (!exact) return result;

    result.inside = true;
    result.certificate.assign(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t i = 0; i < m; ++i)
        result.certificate[i] += u_[j][i] * y[j];
    }
    return result;
  }

 private:
  void compute_hnf() {
    const std::size_t m = generators_.size();
    hnf_.assign(m, IntVector(dim_, 0));
    u_.assign(m, IntVector(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
      hnf_[j] = generators_[j];
      u_[j][j] = 1;
    }

    std::size_t next_col = 0;
    for (std::size_t row = 0; row < dim_ && next_col < m; ++row) {
      // gcd elimination across the active columns at this row
      while (true) {
        std::size_t best = m;
        for (std::size_t j = next_col; j < m; ++j) {
          if (hnf_[j][row] == 0) continue;
          if (best == m || abs(hnf_[j][row]) < abs(hnf_[best][row])) best = j;
        }
        if (best == m) break;  // row is clear on active columns
        bool reduced_any = false;
        for (std::size_t j = next_col; j < m; ++j) {
          if (j == best || hnf_[j][row] == 0) continue;
          Int q = hnf_[j][row] / hnf_[best][row];
          if (q != 0) sub_column(j, best, q);
          if (hnf_[j][row] != 0) reduced_any = true;
        }
        if (!reduced_any) {
          if (best != next_col) {
            std::swap(hnf_[best], hnf_[next_col]);
            std::swap(u_[best], u_[next_col]);
          }
          if (hnf_[next_col][row] < 0) negate_column(next_col);
          pivots_.emplace_back(row, next_col);
          ++next_col;
          break;
        }
      }
    }
  }

  void sub_column(std::size_t j, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < dim_; ++i) hnf_[j][i] -= q * hnf_[src][i];
    for (std::size_t i = 0; i < u_[j].size(); ++i) u_[j][i] -= q * u_[src][i];
  }

  void negate_column(std::size_t j) {
    for (auto& x : hnf_[j]) x = -x;
    for (auto& x : u_[j]) x = -x;
  }

  std::size_t dim_;
  std::vector<IntVector> generators_;
  std::vector<IntVector> hnf_;  // columns, indexed [col][row]
  std::vector<IntVector> u_;    // unimodular transform, hnf = gen * u
  std::vector<std::pair<std::size_t, std::size_t>> pivots_;  // (row, col)
};

}  // namespace eqlef
