#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "eqlef/sign_character.hpp"

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

// Z/2 acting on R by -1: the reflection representation on the line.
OrthogonalActionData reflection_line() {
  auto g = PermGroup::closure(2, {Perm({1, 0})});
  return OrthogonalActionData::from_generators(whole_group(g), 1, {{1, mat({{-1}})}});
}

OrthogonalActionData trivial_action(std::size_t dim) {
  auto g = PermGroup::trivial(1);
  return OrthogonalActionData(whole_group(g), dim, {RatMatrix::identity(dim)});
}

// central element of the group algebra: lambda*I + sum over classes of a
// coefficient times the class sum; always commutes with rho
RatMatrix random_central(std::mt19937& rng, const OrthogonalActionData& data) {
  std::uniform_int_distribution<int> coeff(-2, 2);
  const auto& h = data.subgroup();
  auto classes = conjugacy_classes(h);
  while (true) {
    RatMatrix a = RatMatrix::identity(data.dim()).scaled(Rat(coeff(rng) * 2 + 1));
    for (const auto& cls : classes.classes) {
      Rat c(coeff(rng));
      if (c == 0) continue;
      for (int g : cls) a = a + data.rho(g).scaled(c);
    }
    if (det_sign(a) != 0) return a;
  }
}

}  // namespace

TEST_CASE("reflection on the line: signed cf (-1,+1), presentation (odd, chi)") {
  auto data = reflection_line();
  auto s = signed_sign_character(data, mat({{-1}}));
  CHECK(s.cf.at_element(0) == Rat(-1));
  CHECK(s.cf.at_element(1) == Rat(1));
  CHECK(s.parity == Parity::odd);
  CHECK(s.chi.at_element(0) == Rat(1));
  CHECK(s.chi.at_element(1) == Rat(-1));
}

TEST_CASE("identity map has trivial even sign") {
  auto data = reflection_line();
  auto s = signed_sign_character(data, RatMatrix::identity(1));
  CHECK(s.parity == Parity::even);
  CHECK(s.cf.at_element(0) == Rat(1));
  CHECK(s.cf.at_element(1) == Rat(1));
}

TEST_CASE("orientation reversal on R^3, trivial group") {
  auto data = trivial_action(3);
  auto s = signed_sign_character(data, RatMatrix::identity(3).scaled(Rat(-1)));
  CHECK(s.parity == Parity::odd);
  CHECK(s.cf.at_identity() == Rat(-1));
  CHECK(s.chi.at_identity() == Rat(1));
}

TEST_CASE("input validation") {
  auto data = reflection_line();
  CHECK_THROWS_WITH(signed_sign_character(data, mat({{0}})), "singular A");

  auto g = PermGroup::closure(2, {Perm({1, 0})});
  // swap matrix is orthogonal and generates a valid Z/2 action on R^2
  auto swap2 = OrthogonalActionData::from_generators(whole_group(g), 2,
                                                     {{1, mat({{0, 1}, {1, 0}})}});
  CHECK_THROWS_WITH(signed_sign_character(swap2, mat({{1, 0}, {0, 2}})),
                    "does not commute with the action");

  CHECK_THROWS_WITH(
      OrthogonalActionData::from_generators(whole_group(g), 1, {{1, mat({{2}})}}),
      "orthogonal action: matrix is not orthogonal");
}

TEST_CASE("tensor") {
  auto data = reflection_line();
  auto odd = signed_sign_character(data, mat({{-1}}));
  auto even = signed_sign_character(data, RatMatrix::identity(1));

  auto unit = tensor(odd, even);
  CHECK(unit.cf.same_values(odd.cf));

  auto square = tensor(odd, odd);
  CHECK(square.parity == Parity::even);
  CHECK(square.cf.at_element(0) == Rat(1));
  CHECK(square.cf.at_element(1) == Rat(1));

  auto other = trivial_action(1);
  auto foreign = signed_sign_character(other, RatMatrix::identity(1));
  CHECK_THROWS_AS(tensor(odd, foreign), Error);
}

TEST_CASE("lueck_rosenberg degree table") {
  auto data = reflection_line();
  auto table = lueck_rosenberg_degree(data, mat({{-1}}));
  REQUIRE(table.size() == 2);
  for (const auto& entry : table) {
    if (entry.representative.order() == 1)
      CHECK(entry.value == -1);  // Fix({e}) = R, det -1
    else
      CHECK(entry.value == 1);  // Fix(Z/2) = {0}, empty product
  }

  auto id_table = lueck_rosenberg_degree(data, RatMatrix::identity(1));
  for (const auto& entry : id_table) CHECK(entry.value == 1);
}

TEST_CASE("degree at cyclic subgroups equals the signed class function") {
  std::mt19937 rng(555);
  auto g = PermGroup::closure(4, {Perm({1, 2, 3, 0}), Perm({3, 2, 1, 0})});  // dihedral, order 8
  // signed-permutation representation on R^2: rotation and reflection
  auto rot = mat({{0, -1}, {1, 0}});
  auto refl = mat({{1, 0}, {0, -1}});
  auto data = OrthogonalActionData::from_generators(
      whole_group(g), 2,
      {{g->index_of(Perm({1, 2, 3, 0})), rot}, {g->index_of(Perm({3, 2, 1, 0})), refl}});

  for (int trial = 0; trial < 10; ++trial) {
    auto a = random_central(rng, data);
    auto s = signed_sign_character(data, a);
    auto table = lueck_rosenberg_degree(data, a);
    for (const auto& entry : table) {
      // look only at cyclic subgroups: generated by one element
      for (int m : entry.representative.members) {
        if (generated_subgroup(g, {m}).members == entry.representative.members) {
          CHECK(Rat(entry.value) == s.cf.at_element(m));
          break;
        }
      }
    }
  }
}

TEST_CASE("multiplicativity and scale invariance on random central elements") {
  std::mt19937 rng(777);
  auto g = PermGroup::closure(3, {Perm({1, 0, 2}), Perm({1, 2, 0})});
  std::vector<RatMatrix> gens3;
  // permutation matrices of the two generators of S3 on R^3
  auto permmat = [](const Perm& p) {
    RatMatrix m(p.degree(), p.degree());
    for (std::size_t x = 0; x < p.degree(); ++x) m(p(x), x) = 1;
    return m;
  };
  auto data = OrthogonalActionData::from_generators(
      whole_group(g), 3,
      {{g->index_of(Perm({1, 0, 2})), permmat(Perm({1, 0, 2}))},
       {g->index_of(Perm({1, 2, 0})), permmat(Perm({1, 2, 0}))}});

  std::uniform_int_distribution<int> scale(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    auto a1 = random_central(rng, data);
    auto a2 = random_central(rng, data);
    auto lhs = signed_sign_character(data, a1 * a2);
    auto rhs = tensor(signed_sign_character(data, a1), signed_sign_character(data, a2));
    CHECK(lhs.cf.same_values(rhs.cf));

    auto rescaled = signed_sign_character(data, a1.scaled(Rat(scale(rng))));
    CHECK(rescaled.cf.same_values(signed_sign_character(data, a1).cf));
  }
}

TEST_CASE("direct sum law") {
  std::mt19937 rng(31);
  auto g = PermGroup::closure(2, {Perm({1, 0})});
  auto h = whole_group(g);
  auto d1 = OrthogonalActionData::from_generators(h, 1, {{1, mat({{-1}})}});
  auto d2 = OrthogonalActionData::from_generators(h, 2, {{1, mat({{0, 1}, {1, 0}})}});

  // block action on R^3 = R^1 + R^2
  RatMatrix block_rho(3, 3);
  block_rho(0, 0) = -1;
  block_rho(1, 2) = 1;
  block_rho(2, 1) = 1;
  auto d = OrthogonalActionData::from_generators(h, 3, {{1, block_rho}});

  for (int trial = 0; trial < 15; ++trial) {
    auto a1 = random_central(rng, d1);
    auto a2 = random_central(rng, d2);
    RatMatrix a(3, 3);
    a(0, 0) = a1(0, 0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) a(i + 1, j + 1) = a2(i, j);
    auto whole = signed_sign_character(d, a);
    auto prod = tensor(signed_sign_character(d1, a1), signed_sign_character(d2, a2));
    CHECK(whole.cf.same_values(prod.cf));
  }
}
