#pragma once

#include <json.hpp>

#include <optional>
#include <sstream>
#include <string>

#include "eqlef/homology.hpp"
#include "eqlef/scene.hpp"

namespace eqlef {

// Deterministic report assembly: identical scene bytes produce identical
// report bytes. Timing never goes to stdout for that reason.
struct ReportOptions {
  bool json = false;
  std::optional<SubgroupPolicy> policy_override;
};

struct CommandResult {
  std::string text;
  int exit_code = 0;
};

namespace report_detail {

inline std::string site_str(const ColouredComplex& x, const OrbitTable& table,
                            SiteId site) {
  return x.simplex_name(table.at(site).representative);
}

inline std::string vec_str(const IntVector& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + "]";
}

inline std::string rat_vec_str(const std::vector<Rat>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  return out + "]";
}

inline std::string atom_line(const ColouredComplex& x, const OrbitTable& table,
                             SiteId site, const IntVector& vec) {
  return "atom site=" + site_str(x, table, site) + " stab=" +
         std::to_string(table.at(site).stabilizer.order()) + " cf=" + vec_str(vec);
}

inline std::string class_inline(const ColouredComplex& x, const OrbitTable& table,
                                const LefschetzClass& cls) {
  if (cls.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [site, vec] : cls.atoms) {
    if (!first) out += "; ";
    out += "site=" + site_str(x, table, site) + " cf=" + vec_str(vec);
    first = false;
  }
  return out;
}

inline nlohmann::json class_json(const ColouredComplex& x, const OrbitTable& table,
                                 const LefschetzClass& cls) {
  nlohmann::json atoms = nlohmann::json::array();
  for (const auto& [site, vec] : cls.atoms) {
    nlohmann::json cf = nlohmann::json::array();
    for (const auto& v : vec) cf.push_back(v.str());
    atoms.push_back({{"site", site_str(x, table, site)},
                     {"stab", table.at(site).stabilizer.order()},
                     {"cf", cf}});
  }
  return atoms;
}

inline void print_class(std::ostringstream& out, const ColouredComplex& x,
                        const OrbitTable& table, const LefschetzClass& cls) {
  if (cls.is_zero()) {
    out << "zero class\n";
    return;
  }
  for (const auto& [site, vec] : cls.atoms)
    out << atom_line(x, table, site, vec) << "\n";
}

}  // namespace report_detail

inline LefschetzClass smooth_class_of(const Scene& scene) {
  LefschetzClass cls;
  if (!scene.fixed_data.empty())
    cls = cls + smooth_transverse_lefschetz(scene.complex, scene.table, scene.fixed_data);
  if (scene.submanifold)
    cls = cls + smooth_submanifold_lefschetz(scene.complex, scene.table, *scene.submanifold);
  return cls;
}

inline CommandResult run_command(const std::string& command, const Scene& scene,
                                 const ReportOptions& options) {
  using namespace report_detail;
  const ColouredComplex& x = scene.complex;
  const OrbitTable& table = scene.table;
  SubgroupPolicy policy = options.policy_override.value_or(scene.policy);

  std::ostringstream out;
  nlohmann::json j;
  out << "eqlef report\n";
  out << "scene: " << scene.name << "\n";
  out << "command: " << command << "\n";
  out << "complex: " << x.vertex_count() << " vertices, " << x.simplex_count()
      << " simplices, dimension " << x.dim << "\n";
  out << "group: order " << scene.group->order() << "\n";
  out << "policy: " << (policy == SubgroupPolicy::all ? "all" : "cyclic+stab") << "\n";
  j["scene"] = scene.name;
  j["command"] = command;
  j["complex"] = {{"vertices", x.vertex_count()},
                  {"simplices", x.simplex_count()},
                  {"dimension", x.dim}};
  j["group_order"] = scene.group->order();
  j["policy"] = policy == SubgroupPolicy::all ? "all" : "cyclic+stab";

  int exit_code = 0;

  if (command == "euler") {
    auto eul = euler_characteristic(x, table);
    out << "\n[euler]\n";
    print_class(out, x, table, eul);
    out << "index: " << lefschetz_index(eul, table).str() << "\n";
    j["euler"] = {{"atoms", class_json(x, table, eul)},
                  {"index", lefschetz_index(eul, table).str()}};
  } else if (command == "lef-comb") {
    if (!scene.map) throw Error("lef-comb needs a [map] section");
    auto cls = combinatorial_lefschetz(x, table, scene.levels, *scene.map);
    out << "\n[lef-comb]\n";
    print_class(out, x, table, cls);
    out << "index: " << lefschetz_index(cls, table).str() << "\n";
    j["lef_comb"] = {{"atoms", class_json(x, table, cls)},
                     {"index", lefschetz_index(cls, table).str()}};
  } else if (command == "lef-smooth") {
    if (!scene.has_smooth()) throw Error("lef-smooth needs a [smooth] section");
    out << "\n[sign characters]\n";
    nlohmann::json signs = nlohmann::json::array();
    for (const auto& datum : scene.fixed_data) {
      RatMatrix one_minus = RatMatrix::identity(datum.tangent.dim()) - datum.dphi;
      if (det_sign(one_minus) == 0) throw Error("not transverse: id - dphi is singular");
      auto sign = signed_sign_character(datum.tangent, one_minus);
      out << "site=" << x.simplex_name(datum.site_simplex)
          << ": cf = " << rat_vec_str(sign.cf.values) << "; (parity, chi) = ("
          << parity_str(sign.parity) << ", " << rat_vec_str(sign.chi.values) << ")\n";
      signs.push_back({{"site", x.simplex_name(datum.site_simplex)},
                       {"cf", rat_vec_str(sign.cf.values)},
                       {"parity", parity_str(sign.parity)},
                       {"chi", rat_vec_str(sign.chi.values)}});
    }
    if (scene.submanifold)
      for (const auto& comp : scene.submanifold->components) {
        RatMatrix one_minus = RatMatrix::identity(comp.normal.dim()) - comp.dnu;
        if (det_sign(one_minus) == 0) throw Error("id - dnu is singular");
        auto sign = signed_sign_character(comp.normal, one_minus);
        out << "component=" << x.simplex_name(comp.at)
            << ": cf = " << rat_vec_str(sign.cf.values) << "; (parity, chi) = ("
            << parity_str(sign.parity) << ", " << rat_vec_str(sign.chi.values) << ")\n";
        signs.push_back({{"component", x.simplex_name(comp.at)},
                         {"cf", rat_vec_str(sign.cf.values)},
                         {"parity", parity_str(sign.parity)},
                         {"chi", rat_vec_str(sign.chi.values)}});
      }
    auto cls = smooth_class_of(scene);
    out << "\n[lef-smooth]\n";
    print_class(out, x, table, cls);
    out << "index: " << lefschetz_index(cls, table).str() << "\n";
    j["sign_characters"] = signs;
    j["lef_smooth"] = {{"atoms", class_json(x, table, cls)},
                       {"index", lefschetz_index(cls, table).str()}};
  } else if (command == "compare") {
    if (!scene.map) throw Error("compare needs a [map] section");
    if (!scene.has_smooth()) throw Error("compare needs a [smooth] section");
    auto comb = combinatorial_lefschetz(x, table, scene.levels, *scene.map);
    auto smooth = smooth_class_of(scene);
    auto relations = pointevals_relations(x, table, policy);
    auto verdict = classes_equal_mod_relations(comb, smooth, relations);

    out << "\n[lef-comb]\n";
    print_class(out, x, table, comb);
    out << "index: " << lefschetz_index(comb, table).str() << "\n";
    out << "\n[lef-smooth]\n";
    print_class(out, x, table, smooth);
    out << "index: " << lefschetz_index(smooth, table).str() << "\n";
    out << "\n[compare]\n";
    out << "relations: " << relations.generators.size() << " generators\n";
    j["lef_comb"] = {{"atoms", class_json(x, table, comb)},
                     {"index", lefschetz_index(comb, table).str()}};
    j["lef_smooth"] = {{"atoms", class_json(x, table, smooth)},
                       {"index", lefschetz_index(smooth, table).str()}};
    j["relations"] = relations.generators.size();
    if (verdict.equal) {
      out << "verdict: equal\n";
      out << "certificate:\n";
      nlohmann::json cert = nlohmann::json::array();
      bool any = false;
      for (std::size_t i = 0; i < verdict.certificate.size(); ++i) {
        if (verdict.certificate[i] == 0) continue;
        out << "  " << verdict.certificate[i].str() << " * R" << i << " where R" << i
            << " = " << class_inline(x, table, relations.generators[i]) << "\n";
        cert.push_back({{"generator", i},
                        {"coefficient", verdict.certificate[i].str()},
                        {"class", class_inline(x, table, relations.generators[i])}});
        any = true;
      }
      if (!any) out << "  (empty: the classes are identical)\n";
      j["verdict"] = "equal";
      j["certificate"] = cert;
    } else {
      out << "verdict: not-proven\n";
      out << "residual:\n";
      for (const auto& [site, vec] : verdict.residual.atoms)
        out << "  " << atom_line(x, table, site, vec) << "\n";
      j["verdict"] = "not-proven";
      j["residual"] = class_json(x, table, verdict.residual);
      exit_code = 2;
    }
  } else if (command == "oracle") {
    if (!scene.map) throw Error("oracle needs a [map] section");
    auto phi = chain_map_matrices(x, scene.levels, *scene.map);
    Int chain = chain_supertrace(phi);
    Int homology = homology_supertrace(x, phi);
    out << "\n[oracle]\n";
    out << "chain supertrace: " << chain.str() << "\n";
    out << "homology supertrace: " << homology.str() << "\n";
    out << "agreement: " << (chain == homology ? "yes" : "NO") << "\n";
    j["oracle"] = {{"chain_supertrace", chain.str()},
                   {"homology_supertrace", homology.str()},
                   {"agreement", chain == homology}};
    if (chain != homology) exit_code = 1;
  } else {
    throw Error("unknown command '" + command + "'");
  }

  if (options.json) out << "\n[json]\n" << j.dump() << "\n";
  return CommandResult{out.str(), exit_code};
}

}  // namespace eqlef
