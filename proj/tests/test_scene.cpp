#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eqlef/report.hpp"
#include "eqlef/scene.hpp"

using namespace eqlef;

namespace {

std::string fixture_dir() {
  if (const char* env = std::getenv("EQLEF_FIXTURE_DIR")) return env;
  return "fixtures";
}

Scene load_fixture(const std::string& name) {
  std::ifstream in(fixture_dir() + "/" + name + ".scene");
  REQUIRE(in.good());
  return parse_scene(in, name);
}

Scene from_string(const std::string& text) {
  std::istringstream in(text);
  return parse_scene(in, "inline");
}

}  // namespace

TEST_CASE("parse the z^2 fixture") {
  auto scene = load_fixture("square_z2_n2");
  CHECK(scene.complex.vertex_count() == 4);
  CHECK(scene.complex.simplex_count() == 8);
  CHECK(scene.group->order() == 2);
  REQUIRE(scene.map);
  CHECK(scene.map->level == 1);
  REQUIRE(scene.fixed_data.size() == 1);
  CHECK(scene.fixed_data[0].site_simplex == Simplex{0});
  CHECK(scene.fixed_data[0].tangent.subgroup().order() == 2);
}

TEST_CASE("image notation and cycle notation agree") {
  const std::string base = R"(
[complex]
vertex a 0
vertex b 1
vertex c 0
vertex d 1
simplex a b
simplex b c
simplex c d
simplex d a
[group]
generators g
[action]
)";
  auto s1 = from_string(base + "g: (b d)\n");
  auto s2 = from_string(base + "g: b->d d->b\n");
  CHECK(s1.group->order() == 2);
  CHECK(s2.group->order() == 2);
  CHECK(s1.generators[0].second == s2.generators[0].second);
}

TEST_CASE("parse errors carry section and line context") {
  CHECK_THROWS_WITH(from_string("[complex]\nvertex a\n"),
                    Catch::Matchers::ContainsSubstring("complex:2"));
  CHECK_THROWS_WITH(from_string("[complex]\nvertex a 0\n[map]\nlevel 1\nbogus -> a\n"),
                    Catch::Matchers::ContainsSubstring("map:5"));
  CHECK_THROWS_WITH(from_string("vertex a 0\n"),
                    Catch::Matchers::ContainsSubstring("before the first"));
  CHECK_THROWS_AS(from_string("[complex]\nvertex a 0\nvertex b 1\nsimplex a b\n"
                              "[group]\ngenerators g\n"),
                  Error);  // missing action line
}

TEST_CASE("invalid colouring is rejected with diagnostics") {
  CHECK_THROWS_WITH(from_string(R"(
[complex]
vertex a 0
vertex b 1
vertex c 0
simplex a b
simplex b c
simplex c a
)"),
                    Catch::Matchers::ContainsSubstring("not injective"));
}

TEST_CASE("level-2 flag addresses resolve") {
  auto scene = load_fixture("square_z2_n3");
  REQUIRE(scene.map);
  CHECK(scene.map->level == 2);
  CHECK(scene.levels[2].complex.vertex_count() == 16);
  // the address ((1)) names the 16-gon vertex sitting at the original
  // vertex 1, which must map to 1
  int v = scene.levels[2].complex.vertex_index("((1))");
  CHECK(scene.map->vertex_images[v] == scene.complex.vertex_index("1"));
}

TEST_CASE("reports are deterministic") {
  ReportOptions options;
  options.json = true;
  auto a = run_command("compare", load_fixture("square_z2_n2"), options);
  auto b = run_command("compare", load_fixture("square_z2_n2"), options);
  CHECK(a.text == b.text);
  CHECK(a.exit_code == 0);
}

TEST_CASE("compare on the z^2 fixture: equal, one-generator certificate") {
  auto result = run_command("compare", load_fixture("square_z2_n2"), {});
  CHECK(result.exit_code == 0);
  CHECK(result.text.find("verdict: equal") != std::string::npos);
  // exactly one certificate line
  std::size_t count = 0, pos = 0;
  while ((pos = result.text.find("* R", pos)) != std::string::npos) {
    ++count;
    pos += 3;
  }
  CHECK(count == 1);
}

TEST_CASE("compare on the corrupted fixture: not-proven, exit 2") {
  auto result = run_command("compare", load_fixture("square_z2_bad"), {});
  CHECK(result.exit_code == 2);
  CHECK(result.text.find("verdict: not-proven") != std::string::npos);
  CHECK(result.text.find("residual") != std::string::npos);
}

TEST_CASE("euler reports") {
  auto point = run_command("euler", load_fixture("point"), {});
  CHECK(point.text.find("index: 1") != std::string::npos);

  auto square = run_command("euler", load_fixture("square_z2_n2"), {});
  CHECK(square.text.find("index: 0") != std::string::npos);
  std::size_t atoms = 0, pos = 0;
  while ((pos = square.text.find("atom site=", pos)) != std::string::npos) {
    ++atoms;
    pos += 10;
  }
  CHECK(atoms == 5);

  auto oct = run_command("euler", load_fixture("octahedron_z2"), {});
  CHECK(oct.text.find("index: 2") != std::string::npos);
}

TEST_CASE("lef-comb and lef-smooth reports for z^2") {
  auto comb = run_command("lef-comb", load_fixture("square_z2_n2"), {});
  CHECK(comb.text.find("atom site=(1) stab=2 cf=[1, 1]") != std::string::npos);
  CHECK(comb.text.find("atom site=(1 i) stab=1 cf=[-1]") != std::string::npos);
  CHECK(comb.text.find("index: -1") != std::string::npos);

  auto smooth = run_command("lef-smooth", load_fixture("square_z2_n2"), {});
  CHECK(smooth.text.find("atom site=(1) stab=2 cf=[-1, 1]") != std::string::npos);
  CHECK(smooth.text.find("cf = [-1, 1]; (parity, chi) = (odd, [1, -1])") !=
        std::string::npos);
}

TEST_CASE("oracle reports") {
  auto z2 = run_command("oracle", load_fixture("square_z2_n2"), {});
  CHECK(z2.exit_code == 0);
  CHECK(z2.text.find("chain supertrace: -1") != std::string::npos);
  CHECK(z2.text.find("homology supertrace: -1") != std::string::npos);

  auto z3 = run_command("oracle", load_fixture("square_z2_n3"), {});
  CHECK(z3.text.find("chain supertrace: -2") != std::string::npos);

  auto s3 = run_command("oracle", load_fixture("cross16_reflection"), {});
  CHECK(s3.text.find("homology supertrace: 2") != std::string::npos);
}

TEST_CASE("compare across the remaining fixtures") {
  for (const auto& name : {"point", "square_z2_n3", "octagon_d4", "hexadecagon_d8",
                           "cross16_reflection", "cross16_reflection_z2",
                           "octahedron_z2"}) {
    INFO(name);
    auto result = run_command("compare", load_fixture(name), {});
    CHECK(result.exit_code == 0);
  }
}

TEST_CASE("policy override is honoured") {
  ReportOptions options;
  options.policy_override = SubgroupPolicy::cyclic_plus_stabilizers;
  auto result = run_command("compare", load_fixture("square_z2_n2"), options);
  CHECK(result.text.find("policy: cyclic+stab") != std::string::npos);
  CHECK(result.exit_code == 0);
}

TEST_CASE("json block mirrors the verdict") {
  ReportOptions options;
  options.json = true;
  auto result = run_command("compare", load_fixture("square_z2_n2"), options);
  auto pos = result.text.find("[json]\n");
  REQUIRE(pos != std::string::npos);
  auto j = nlohmann::json::parse(result.text.substr(pos + 7));
  CHECK(j["verdict"] == "equal");
  CHECK(j["command"] == "compare");
  CHECK(j["group_order"] == 2);
}
