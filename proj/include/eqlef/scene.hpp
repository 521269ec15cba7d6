#pragma once

#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "eqlef/lefschetz.hpp"
#include "eqlef/relations.hpp"

namespace eqlef {

// Plain-text scene files: explicit [section] headers, one declaration per
// line, '#' comments, rationals as "p/q". Every declaration is validated
// against the module invariants before any computation runs; errors carry
// section and line context.
struct Scene {
  std::string name;

  ColouredComplex complex;
  GroupRef group;
  std::vector<std::pair<std::string, Perm>> generators;  // name -> permutation

  std::optional<CellularMapSpec> map;
  std::vector<FixedOrbitDatum> fixed_data;
  std::optional<SubmanifoldDatum> submanifold;

  SubgroupPolicy policy = SubgroupPolicy::all;

  // derived
  OrbitTable table;
  std::vector<SubdividedComplex> levels;

  bool has_smooth() const { return !fixed_data.empty() || submanifold.has_value(); }
};

namespace scene_detail {

struct Line {
  int number;
  std::string text;
};

inline std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] inline void fail(const std::string& section, int line, const std::string& what) {
  throw Error("scene." + section + ":" + std::to_string(line) + ": " + what);
}

// Nested flag address: a level-0 address is a vertex name; a level-k
// address is "(" followed by level-(k-1) addresses ")". Returns the vertex
// index at the requested level.
struct AddressParser {
  const std::vector<SubdividedComplex>& levels;
  const std::string section;
  int line;

  int parse(const std::string& text, int level) const {
    try {
      std::size_t pos = 0;
      int v = parse_inner(text, pos, level);
      skip_space(text, pos);
      if (pos != text.size())
        fail(section, line, "trailing characters in address '" + text + "'");
      return v;
    } catch (const Error& e) {
      std::string what = e.what();
      if (what.rfind("scene.", 0) == 0) throw;
      fail(section, line, what);
    }
  }

 private:
  static void skip_space(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  int parse_inner(const std::string& s, std::size_t& pos, int level) const {
    skip_space(s, pos);
    if (pos >= s.size()) fail(section, line, "truncated address");
    if (s[pos] != '(') {
      // bare token: a vertex name at this level
      std::size_t start = pos;
      while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) &&
             s[pos] != '(' && s[pos] != ')')
        ++pos;
      return levels[level].complex.vertex_index(s.substr(start, pos - start));
    }
    if (level == 0) fail(section, line, "nested address at level 0");
    ++pos;  // consume '('
    Simplex prev_vertices;
    while (true) {
      skip_space(s, pos);
      if (pos >= s.size()) fail(section, line, "unbalanced '(' in address");
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      prev_vertices.push_back(parse_inner(s, pos, level - 1));
    }
    std::sort(prev_vertices.begin(), prev_vertices.end());
    prev_vertices.erase(std::unique(prev_vertices.begin(), prev_vertices.end()),
                        prev_vertices.end());
    const ColouredComplex& pc = levels[level - 1].complex;
    auto it = pc.position.find(prev_vertices);
    if (it == pc.position.end())
      fail(section, line, "address does not name a simplex of level " +
                              std::to_string(level - 1));
    // vertex ids at the next level are dimension-major over the previous
    // level's simplex lists
    int vid = 0;
    for (int d = 0; d < it->second.first; ++d)
      vid += static_cast<int>(pc.simplices[d].size());
    return vid + it->second.second;
  }
};

inline Perm parse_permutation(const ColouredComplex& x, const std::string& text,
                              const std::string& section, int line) {
  std::vector<int> images(x.vertex_count());
  for (std::size_t v = 0; v < images.size(); ++v) images[v] = static_cast<int>(v);

  auto tokens = tokenize(text);
  bool image_notation = !tokens.empty() && tokens[0].find("->") != std::string::npos;
  if (image_notation) {
    for (const auto& tok : tokens) {
      auto arrow = tok.find("->");
      if (arrow == std::string::npos)
        fail(section, line, "expected 'from->to' in image notation, got '" + tok + "'");
      int from = x.vertex_index(tok.substr(0, arrow));
      int to = x.vertex_index(tok.substr(arrow + 2));
      images[from] = to;
    }
  } else {
    // cycle notation: (a b c)(d e)
    std::size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size()) break;
      if (text[pos] != '(') fail(section, line, "expected '(' in cycle notation");
      ++pos;
      std::vector<int> cycle;
      std::string name;
      while (pos < text.size() && text[pos] != ')') {
        if (std::isspace(static_cast<unsigned char>(text[pos]))) {
          if (!name.empty()) cycle.push_back(x.vertex_index(name));
          name.clear();
        } else {
          name += text[pos];
        }
        ++pos;
      }
      if (pos >= text.size()) fail(section, line, "unbalanced '(' in cycle notation");
      ++pos;
      if (!name.empty()) cycle.push_back(x.vertex_index(name));
      for (std::size_t i = 0; i < cycle.size(); ++i)
        images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      any = true;
    }
    if (!any && !tokens.empty())
      fail(section, line, "cannot parse permutation '" + text + "'");
  }
  try {
    return Perm(images);
  } catch (const Error& e) {
    fail(section, line, e.what());
  }
}

inline RatMatrix parse_matrix(const std::string& text, const std::string& section,
                              int line) {
  auto open = text.find('[');
  auto close = text.rfind(']');
  if (open == std::string::npos || close == std::string::npos || close < open)
    fail(section, line, "matrix must be bracketed, e.g. [1 0; 1/2 1/2]");
  std::string body = text.substr(open + 1, close - open - 1);

  std::vector<RatVector> rows;
  std::string row_text;
  std::istringstream in(body);
  while (std::getline(in, row_text, ';')) {
    RatVector row;
    for (const auto& tok : tokenize(row_text)) {
      try {
        row.push_back(parse_rat(tok));
      } catch (const Error& e) {
        fail(section, line, e.what());
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) return RatMatrix(0, 0);  // "[]": zero-dimensional
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) fail(section, line, "ragged matrix rows");
  return RatMatrix::from_rows(rows);
}

}  // namespace scene_detail

inline Scene parse_scene(std::istream& in, const std::string& name = "-") {
  using namespace scene_detail;

  // ---- raw pass: collect lines per section --------------------------------
  std::map<std::string, std::vector<Line>> sections;
  std::string section = "";
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto tokens = tokenize(raw);
    if (tokens.empty()) continue;
    std::string joined = tokens[0];
    for (std::size_t i = 1; i < tokens.size(); ++i) joined += " " + tokens[i];
    if (joined.front() == '[' && joined.back() == ']') {
      section = joined.substr(1, joined.size() - 2);
      static const std::set<std::string> known{"complex", "group", "action",
                                               "map",     "smooth", "options"};
      if (!known.count(section)) fail(section, lineno, "unknown section");
      continue;
    }
    if (section.empty()) fail("preamble", lineno, "content before the first [section]");
    sections[section].push_back(Line{lineno, joined});
  }

  Scene scene;
  scene.name = name;

  // ---- [complex] -----------------------------------------------------------
  if (!sections.count("complex")) throw Error("scene has no [complex] section");
  {
    std::vector<std::string> names;
    std::vector<int> colours;
    std::vector<std::vector<std::string>> simplices;
    for (const auto& line : sections["complex"]) {
      auto tokens = tokenize(line.text);
      if (tokens[0] == "vertex") {
        if (tokens.size() != 3) fail("complex", line.number, "expected: vertex <name> <colour>");
        names.push_back(tokens[1]);
        try {
          colours.push_back(std::stoi(tokens[2]));
        } catch (...) {
          fail("complex", line.number, "colour must be an integer");
        }
      } else if (tokens[0] == "simplex") {
        simplices.push_back({tokens.begin() + 1, tokens.end()});
      } else {
        fail("complex", line.number, "expected 'vertex' or 'simplex'");
      }
    }
    ColouredComplex probe;
    probe.vertex_names = names;
    std::vector<Simplex> maximal;
    for (const auto& s : simplices) {
      Simplex sim;
      for (const auto& n : s) sim.push_back(probe.vertex_index(n));
      maximal.push_back(sim);
    }
    scene.complex = make_complex(names, colours, maximal);
    auto diags = validate_complex(scene.complex);
    if (!diags.empty()) {
      std::string msg = "invalid complex:";
      for (const auto& d : diags) msg += "\n  " + d;
      throw Error(msg);
    }
  }

  // ---- [group] + [action] --------------------------------------------------
  {
    std::vector<std::string> generator_names;
    for (const auto& line : sections["group"]) {
      auto tokens = tokenize(line.text);
      if (tokens[0] != "generators")
        fail("group", line.number, "expected: generators <name>...");
      generator_names.insert(generator_names.end(), tokens.begin() + 1, tokens.end());
    }
    std::map<std::string, std::pair<int, std::string>> action_lines;
    for (const auto& line : sections["action"]) {
      auto colon = line.text.find(':');
      if (colon == std::string::npos)
        fail("action", line.number, "expected: <generator>: <permutation>");
      std::string gname = line.text.substr(0, colon);
      while (!gname.empty() && gname.back() == ' ') gname.pop_back();
      action_lines[gname] = {line.number, line.text.substr(colon + 1)};
    }
    std::vector<Perm> perms;
    for (const auto& gname : generator_names) {
      auto it = action_lines.find(gname);
      if (it == action_lines.end())
        throw Error("scene.action: no action line for generator '" + gname + "'");
      Perm p = parse_permutation(scene.complex, it->second.second, "action",
                                 it->second.first);
      scene.generators.emplace_back(gname, p);
      perms.push_back(p);
      action_lines.erase(it);
    }
    if (!action_lines.empty())
      throw Error("scene.action: action line for undeclared generator '" +
                  action_lines.begin()->first + "'");
    scene.group = PermGroup::closure(scene.complex.vertex_count(), perms);
    auto diags = validate_action(scene.complex, *scene.group);
    if (!diags.empty()) {
      std::string msg = "invalid action:";
      for (const auto& d : diags) msg += "\n  " + d;
      throw Error(msg);
    }
  }

  // ---- [map] ----------------------------------------------------------------
  int map_level = 0;
  std::vector<std::pair<Line, std::string>> map_entries;  // (line, addr) -> name kept in text
  if (sections.count("map")) {
    for (const auto& line : sections["map"]) {
      auto tokens = tokenize(line.text);
      if (tokens[0] == "level") {
        if (tokens.size() != 2) fail("map", line.number, "expected: level <k>");
        try {
          map_level = std::stoi(tokens[1]);
        } catch (...) {
          fail("map", line.number, "level must be an integer");
        }
        if (map_level < 0 || map_level > 6)
          fail("map", line.number, "level must be between 0 and 6");
      } else {
        map_entries.push_back({line, line.text});
      }
    }
  }

  scene.table = orbits_and_stabilizers(scene.complex, scene.group);
  scene.levels = subdivision_tower(scene.complex, scene.group, map_level);

  if (sections.count("map")) {
    const auto& top = scene.levels[map_level].complex;
    CellularMapSpec f{map_level, std::vector<int>(top.vertex_count(), -1)};
    for (const auto& [line, text] : map_entries) {
      auto arrow = text.rfind("->");
      if (arrow == std::string::npos)
        fail("map", line.number, "expected: <address> -> <vertex>");
      std::string addr = text.substr(0, arrow);
      std::string target = tokenize(text.substr(arrow + 2)).empty()
                               ? std::string()
                               : tokenize(text.substr(arrow + 2))[0];
      if (target.empty()) fail("map", line.number, "missing image vertex");
      AddressParser parser{scene.levels, "map", line.number};
      int v = parser.parse(addr, map_level);
      if (f.vertex_images[v] != -1) fail("map", line.number, "vertex mapped twice");
      f.vertex_images[v] = scene.complex.vertex_index(target);
    }
    for (std::size_t v = 0; v < f.vertex_images.size(); ++v)
      if (f.vertex_images[v] < 0)
        throw Error("scene.map: no image for level-" + std::to_string(map_level) +
                    " vertex " + top.vertex_names[v]);
    validate_map(scene.complex, scene.levels, f);
    scene.map = std::move(f);
  }

  // ---- [smooth] --------------------------------------------------------------
  if (sections.count("smooth")) {
    const auto& lines = sections["smooth"];
    std::size_t i = 0;

    auto parse_simplex_addr = [&](const std::string& addr, int lineno) {
      // a site is a base-complex simplex: a vertex name or (v1 v2 ...)
      auto tokens = tokenize(addr);
      Simplex s;
      if (tokens.size() == 1 && tokens[0].front() != '(') {
        s.push_back(scene.complex.vertex_index(tokens[0]));
        return s;
      }
      std::string body = addr;
      auto open = body.find('(');
      auto close = body.rfind(')');
      if (open == std::string::npos || close == std::string::npos || close < open)
        fail("smooth", lineno, "site must be a vertex name or (v1 v2 ...)");
      for (const auto& tok : tokenize(body.substr(open + 1, close - open - 1)))
        s.push_back(scene.complex.vertex_index(tok));
      std::sort(s.begin(), s.end());
      if (!scene.complex.has_simplex(s))
        fail("smooth", lineno, "site is not a simplex of the complex");
      return s;
    };

    auto resolve_element_word = [&](const std::string& word, int lineno) {
      if (word == "e") return 0;
      Perm acc(scene.complex.vertex_count());
      std::size_t start = 0;
      while (start <= word.size()) {
        auto star = word.find('*', start);
        std::string part = word.substr(start, star == std::string::npos
                                                  ? std::string::npos
                                                  : star - start);
        bool found = false;
        for (const auto& [gname, perm] : scene.generators)
          if (gname == part) {
            acc = acc * perm;
            found = true;
            break;
          }
        if (!found) fail("smooth", lineno, "unknown generator '" + part + "' in element word");
        if (star == std::string::npos) break;
        start = star + 1;
      }
      try {
        return scene.group->index_of(acc);
      } catch (const Error&) {
        fail("smooth", lineno, "element word is not in the group");
      }
    };

    // one block at a time
    while (i < lines.size()) {
      auto tokens = tokenize(lines[i].text);
      if (tokens[0] == "fixed") {
        if (tokens.size() < 2) fail("smooth", lines[i].number, "expected: fixed <site>");
        std::string addr = lines[i].text.substr(lines[i].text.find(' ') + 1);
        Simplex site = parse_simplex_addr(addr, lines[i].number);
        std::vector<std::pair<int, RatMatrix>> rho;
        std::optional<RatMatrix> dphi;
        ++i;
        while (i < lines.size() && tokenize(lines[i].text)[0] != "end") {
          auto ts = tokenize(lines[i].text);
          auto eq = lines[i].text.find('=');
          if (eq == std::string::npos)
            fail("smooth", lines[i].number, "expected 'rho <word> = [..]' or 'dphi = [..]'");
          std::string rhs = lines[i].text.substr(eq + 1);
          if (ts[0] == "rho") {
            if (ts.size() < 2) fail("smooth", lines[i].number, "rho needs an element word");
            rho.emplace_back(resolve_element_word(ts[1], lines[i].number),
                             parse_matrix(rhs, "smooth", lines[i].number));
          } else if (ts[0] == "dphi") {
            dphi = parse_matrix(rhs, "smooth", lines[i].number);
          } else {
            fail("smooth", lines[i].number, "unexpected '" + ts[0] + "' in fixed block");
          }
          ++i;
        }
        if (i >= lines.size()) throw Error("scene.smooth: fixed block without 'end'");
        ++i;  // consume end
        if (!dphi) throw Error("scene.smooth: fixed block needs a dphi matrix");

        Subgroup stab = setwise_stabilizer(scene.group, site);
        auto tangent = OrthogonalActionData::from_generators(stab, dphi->rows(), rho);
        scene.fixed_data.push_back(FixedOrbitDatum{site, std::move(tangent), *dphi});
      } else if (tokens[0] == "submanifold") {
        struct RawComponent {
          Simplex at;
          std::vector<std::pair<int, RatMatrix>> rho;
          RatMatrix dnu;
        };
        std::set<Simplex> y_set;
        std::vector<RawComponent> raw_components;
        ++i;
        while (i < lines.size() && tokenize(lines[i].text)[0] != "end") {
          auto ts = tokenize(lines[i].text);
          if (ts[0] == "simplex") {
            Simplex s;
            for (auto it = ts.begin() + 1; it != ts.end(); ++it)
              s.push_back(scene.complex.vertex_index(*it));
            std::sort(s.begin(), s.end());
            // close under faces
            const std::size_t n = s.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
              Simplex face;
              for (std::size_t b = 0; b < n; ++b)
                if (mask & (std::size_t(1) << b)) face.push_back(s[b]);
              y_set.insert(std::move(face));
            }
            ++i;
          } else if (ts[0] == "component") {
            if (ts.size() < 2)
              fail("smooth", lines[i].number, "expected: component <site>");
            std::string addr = lines[i].text.substr(lines[i].text.find(' ') + 1);
            RawComponent rc;
            rc.at = parse_simplex_addr(addr, lines[i].number);
            std::optional<RatMatrix> dnu;
            ++i;
            while (i < lines.size() && tokenize(lines[i].text)[0] != "end") {
              auto inner = tokenize(lines[i].text);
              auto eq = lines[i].text.find('=');
              if (eq == std::string::npos)
                fail("smooth", lines[i].number,
                     "expected 'rho <word> = [..]' or 'dnu = [..]'");
              std::string rhs = lines[i].text.substr(eq + 1);
              if (inner[0] == "rho") {
                rc.rho.emplace_back(resolve_element_word(inner[1], lines[i].number),
                                    parse_matrix(rhs, "smooth", lines[i].number));
              } else if (inner[0] == "dnu") {
                dnu = parse_matrix(rhs, "smooth", lines[i].number);
              } else {
                fail("smooth", lines[i].number,
                     "unexpected '" + inner[0] + "' in component block");
              }
              ++i;
            }
            if (i >= lines.size())
              throw Error("scene.smooth: component block without 'end'");
            ++i;
            if (!dnu) throw Error("scene.smooth: component block needs a dnu matrix");
            rc.dnu = *dnu;
            raw_components.push_back(std::move(rc));
          } else {
            fail("smooth", lines[i].number, "unexpected '" + ts[0] + "' in submanifold block");
          }
        }
        if (i >= lines.size()) throw Error("scene.smooth: submanifold block without 'end'");
        ++i;

        // Y is now complete: resolve each component's setwise stabilizer
        // and build the orthogonal action data
        SubmanifoldDatum sub;
        sub.y_simplices.assign(y_set.begin(), y_set.end());
        auto components = simplex_components(sub.y_simplices);
        for (auto& rc : raw_components) {
          const std::vector<Simplex>* found = nullptr;
          for (const auto& comp : components)
            if (std::binary_search(comp.begin(), comp.end(), rc.at)) {
              found = &comp;
              break;
            }
          if (!found)
            throw Error("scene.smooth: component marker " +
                        scene.complex.simplex_name(rc.at) + " is not in the submanifold");
          std::set<Simplex> comp_set(found->begin(), found->end());
          std::vector<int> members;
          for (std::size_t e = 0; e < scene.group->order(); ++e) {
            bool preserves = true;
            for (const auto& s : comp_set)
              if (!comp_set.count(apply_perm(scene.group->element(e), s))) {
                preserves = false;
                break;
              }
            if (preserves) members.push_back(static_cast<int>(e));
          }
          Subgroup setwise{scene.group, std::move(members)};
          auto normal =
              OrthogonalActionData::from_generators(setwise, rc.dnu.rows(), rc.rho);
          sub.components.push_back(
              ComponentNormalData{rc.at, std::move(normal), std::move(rc.dnu)});
        }
        scene.submanifold = std::move(sub);
      } else {
        fail("smooth", lines[i].number, "expected 'fixed' or 'submanifold'");
      }
    }
  }

  // ---- [options] ---------------------------------------------------------------
  for (const auto& line : sections["options"]) {
    auto tokens = tokenize(line.text);
    if (tokens[0] == "policy" && tokens.size() == 2) {
      if (tokens[1] == "all")
        scene.policy = SubgroupPolicy::all;
      else if (tokens[1] == "cyclic+stab")
        scene.policy = SubgroupPolicy::cyclic_plus_stabilizers;
      else
        fail("options", line.number, "policy must be 'all' or 'cyclic+stab'");
    } else {
      fail("options", line.number, "expected: policy <all|cyclic+stab>");
    }
  }

  return scene;
}

}  // namespace eqlef
