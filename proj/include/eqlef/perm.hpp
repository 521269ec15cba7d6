#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "eqlef/rational.hpp"

namespace eqlef {

// Permutation of {0, ..., degree-1}, stored as the image list.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
  }
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw Error("invalid permutation image list");
      seen[v] = true;
    }
  }

  std::size_t degree() const { return images_.size(); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i)) return false;
    return true;
  }

  // (p * q)(x) = p(q(x))
  Perm operator*(const Perm& q) const {
    if (degree() != q.degree()) throw Error("permutation degree mismatch");
    std::vector<int> r(degree());
    for (std::size_t x = 0; x < degree(); ++x) r[x] = images_[q.images_[x]];
    Perm p;
    p.images_ = std::move(r);
    return p;
  }

  Perm inverse() const {
    std::vector<int> r(degree());
    for (std::size_t x = 0; x < degree(); ++x) r[images_[x]] = static_cast<int>(x);
    Perm p;
    p.images_ = std::move(r);
    return p;
  }

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

  // Disjoint cycle notation over caller-supplied point names.
  std::string cycle_str(const std::vector<std::string>& names) const {
    std::string out;
    std::vector<bool> done(degree(), false);
    for (std::size_t start = 0; start < degree(); ++start) {
      if (done[start] || images_[start] == static_cast<int>(start)) continue;
      out += "(";
      int x = static_cast<int>(start);
      bool first = true;
      while (!done[x]) {
        done[x] = true;
        if (!first) out += " ";
        out += names[x];
        first = false;
        x = images_[x];
      }
      out += ")";
    }
    return out.empty() ? "e" : out;
  }

 private:
  std::vector<int> images_;
};

}  // namespace eqlef
