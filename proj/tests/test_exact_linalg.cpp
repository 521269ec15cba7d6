#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eqlef/lattice.hpp"
#include "eqlef/matrix.hpp"

using namespace eqlef;

namespace {

RatMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<RatVector> r;
  for (const auto& row : rows) {
    RatVector v;
    for (long x : row) v.push_back(Rat(x));
    r.push_back(v);
  }
  return RatMatrix::from_rows(r);
}

RatMatrix random_int_matrix(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rat(d(rng));
  return m;
}

// Oracle: cofactor expansion, exact. Only usable for tiny matrices; the
// fraction-free path is checked against it.
Rat det_by_cofactors(const RatMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);
  if (n == 1) return m(0, 0);
  Rat total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(i - 1, cc++) = m(i, c);
      }
    }
    Rat term = m(0, j) * det_by_cofactors(minor);
    total += (j % 2 == 0) ? term : -term;
  }
  return total;
}

}  // namespace

TEST_CASE("det_sign basics") {
  CHECK(det_sign(mat({{-1}})) == -1);
  CHECK(det_sign(RatMatrix(0, 0)) == 1);
  CHECK(det_sign(mat({{0, -1}, {1, 0}})) == 1);
  CHECK(det_by_cofactors(mat({{0, -1}, {1, 0}})) == Rat(1));
  CHECK(det_sign(mat({{1, 2}, {2, 4}})) == 0);
  CHECK_THROWS_AS(det_sign(RatMatrix(2, 3)), Error);
}

TEST_CASE("det_sign agrees with cofactor expansion on random matrices") {
  std::mt19937 rng(20240701);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + trial % 5;
    auto m = random_int_matrix(rng, n, -4, 4);
    CHECK(det_sign(m) == sign_of(det_by_cofactors(m)));
  }
}

TEST_CASE("det_sign is multiplicative") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + trial % 4;
    auto a = random_int_matrix(rng, n, -3, 3);
    auto b = random_int_matrix(rng, n, -3, 3);
    CHECK(det_sign(a * b) == det_sign(a) * det_sign(b));
  }
}

TEST_CASE("fixed_subspace") {
  auto full = fixed_subspace(RatMatrix::identity(2));
  REQUIRE(full.size() == 2);
  CHECK(full[0] == RatVector{Rat(1), Rat(0)});
  CHECK(full[1] == RatVector{Rat(0), Rat(1)});

  CHECK(fixed_subspace(mat({{-1}})).empty());
  CHECK(fixed_subspace(mat({{0, -1}, {1, 0}})).empty());

  // every returned vector is fixed exactly
  std::mt19937 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto m = random_int_matrix(rng, 3, -2, 2);
    for (const auto& v : fixed_subspace(m)) CHECK(m.apply(v) == v);
  }
}

TEST_CASE("restrict_operator") {
  RatMatrix two = RatMatrix::identity(2).scaled(Rat(2));
  auto c = restrict_operator(two, {RatVector{Rat(1), Rat(0)}});
  REQUIRE(c.rows() == 1);
  CHECK(c(0, 0) == Rat(2));

  auto d = restrict_operator(mat({{3, 0}, {0, 5}}), {RatVector{Rat(0), Rat(1)}});
  CHECK(d(0, 0) == Rat(5));

  CHECK_THROWS_WITH(restrict_operator(mat({{0, 1}, {1, 0}}), {RatVector{Rat(1), Rat(0)}}),
                    "restrict_operator: not invariant");
}

TEST_CASE("restricted det_sign is basis independent") {
  // A preserves the plane spanned by e1, e2 inside Q^3.
  auto a = mat({{0, -2, 0}, {3, 0, 0}, {0, 0, 7}});
  std::vector<RatVector> b1{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}};
  std::vector<RatVector> b2{{Rat(2), Rat(1), Rat(0)}, {Rat(1), Rat(1), Rat(0)}};
  CHECK(det_sign(restrict_operator(a, b1)) == det_sign(restrict_operator(a, b2)));
}

TEST_CASE("lattice membership") {
  IntLattice even2(2, {{Int(2), Int(0)}, {Int(0), Int(2)}});
  auto out = even2.membership({Int(1), Int(1)});
  CHECK_FALSE(out.inside);
  CHECK(out.residual == IntVector{Int(1), Int(1)});

  IntLattice line(3, {{Int(1), Int(2), Int(-1)}});
  auto in = line.membership({Int(1), Int(2), Int(-1)});
  REQUIRE(in.inside);
  CHECK(in.certificate == IntVector{Int(1)});

  IntLattice empty(2, {});
  CHECK(empty.membership({Int(0), Int(0)}).inside);
  CHECK(empty.membership({Int(0), Int(0)}).certificate.empty());
  CHECK_FALSE(empty.membership({Int(1), Int(0)}).inside);

  CHECK_THROWS_AS(line.membership({Int(1)}), Error);
}

TEST_CASE("lattice certificates reproduce the vector") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> entry(-5, 5);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t dim = 2 + trial % 4;
    std::size_t gens = 1 + trial % 5;
    std::vector<IntVector> g(gens, IntVector(dim));
    for (auto& v : g)
      for (auto& x : v) x = entry(rng);
    IntLattice lat(dim, g);

    // inside case: random integer combination must come back inside, and
    // the certificate must reproduce it over the generators
    IntVector v(dim, 0);
    for (const auto& gen : g) {
      Int c = coeff(rng);
      for (std::size_t i = 0; i < dim; ++i) v[i] += c * gen[i];
    }
    auto out = lat.membership(v);
    REQUIRE(out.inside);
    IntVector rebuilt(dim, 0);
    for (std::size_t j = 0; j < gens; ++j)
      for (std::size_t i = 0; i < dim; ++i) rebuilt[i] += out.certificate[j] * g[j][i];
    CHECK(rebuilt == v);
  }
}
