#include "spencerlab/commands.hpp"

#include <algorithm>
#include <sstream>

#include "spencerlab/builders.hpp"
#include "spencerlab/errors.hpp"
#include "spencerlab/scene_file.hpp"

namespace spencerlab {

namespace {

Json ring_json(const AffineScene& scene) {
  const auto& ring = *scene.ring();
  Json weights = Json::array();
  for (std::size_t j = 0; j < ring.nvars(); ++j) weights.push_back(ring.weight(j));
  Json ideal = Json::array();
  for (const auto& g : scene.ideal().generators()) ideal.push_back(g.to_string());
  return {{"variables", ring.names()}, {"weights", weights}, {"ideal", ideal}};
}

bool all_zero(const HomologyTable& t) { return t.entries().empty(); }

Ideal along_ideal(const std::string& along, const AffineScene& scene) {
  if (along == "self") return scene.ideal();
  if (along == "origin") {
    std::vector<Polynomial> vars;
    for (std::size_t j = 0; j < scene.nvars(); ++j) vars.push_back(Polynomial::variable(scene.ring(), j));
    return Ideal(scene.ring(), vars);
  }
  return load_ideal(along, scene.ring());
}

void need_degree_bound(int d) {
  if (d < 0) throw InputError("--degree-bound must be >= 0");
}

Json homology_command(const GradedComplex& c, int degree_bound) {
  check_d_squared(c, degree_bound);
  return {{"complex", c.name()}, {"tables", to_json(homology_table(c, degree_bound))}};
}

int stage_count(const CommandOptions& o, const GradedComplex& c, const Ideal& ideal) {
  if (o.r_max < 0) throw InputError("--r-max must be >= 1");
  return o.r_max > 0 ? o.r_max : default_stage_count(c, ideal, o.degree_bound);
}

Json limit_command(const Tower& t) {
  const LimitReport limits = tower_limit(t);
  Json failures = Json::array();
  for (const auto& [r, i, d] : check_chain_maps(t)) failures.push_back({r, i, d});
  return {{"complex", t.name},
          {"tables", to_json(limits.limit_table())},
          {"limits", to_json(limits)},
          {"chain_map_failures", failures}};
}

Json milnor_command(const AffineScene& scene) {
  if (scene.ideal().size() != 1)
    throw InputError("milnor needs a hypersurface scene (exactly one generator), got " +
                     std::to_string(scene.ideal().size()));
  return to_json(milnor_tjurina(scene.ideal().generators()[0]), scene.ring());
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "derham",      "jet",   "spencer", "koszul",     "filtered-spencer", "kashiwara",       "euler-certify",
      "milnor",      "smooth", "spencer-h0", "complete", "derived-complete", "independence"};
  return names;
}

Json run_command(const CommandOptions& o, const AffineScene& scene) {
  need_degree_bound(o.degree_bound);
  const int D = o.degree_bound;
  Json body;
  const std::string& cmd = o.command;

  if (cmd == "derham") {
    body = homology_command(build_de_rham(scene), D);
  } else if (cmd == "jet") {
    body = homology_command(build_jet_complex(scene, o.r), D);
    body["r"] = o.r;
  } else if (cmd == "spencer") {
    body = homology_command(build_spencer_of_module(dmodule_by_name(scene, o.module), scene), D);
    body["module"] = o.module;
  } else if (cmd == "koszul") {
    std::vector<Polynomial> elems;
    for (const auto& e : o.elements) elems.push_back(scene.parse(e));
    if (o.elements.empty())
      for (std::size_t j = 0; j < scene.nvars(); ++j) elems.push_back(Polynomial::variable(scene.ring(), j));
    body = homology_command(build_koszul(scene, elems), D);
    Json el = Json::array();
    for (const auto& e : elems) el.push_back(e.to_string());
    body["elements"] = el;
  } else if (cmd == "filtered-spencer") {
    const GradedComplex c = o.n ? filtered_spencer(*o.n, o.p) : filtered_spencer(scene, o.p);
    body = homology_command(c, D);
    const HomologyTable t = homology_table(c, D);
    body["p"] = o.p;
    body["n"] = c.term(-1)->module.scene().nvars();
    body["resolution"] = all_zero(t);
  } else if (cmd == "kashiwara") {
    body = to_json(kashiwara_quotient(scene, o.p, D));
  } else if (cmd == "euler-certify") {
    GradedComplex c = o.complex == "derham" ? build_de_rham(scene)
                      : o.complex == "jet" ? build_jet_complex(scene, o.r)
                                           : throw InputError("--complex must be derham or jet, got '" + o.complex + "'");
    // the jet complex lives on the thickened diagonal; its Euler field is the ring's own
    const Derivation xi = euler_derivation(c.term(0)->module.scene());
    body = homology_command(c, D);
    body["cartan"] = to_json(cartan_check(c, xi, D));
    body["certificate"] = to_json(acyclicity_certificate(c, xi, D));
  } else if (cmd == "milnor") {
    body = milnor_command(scene);
  } else if (cmd == "smooth") {
    body = to_json(jacobian_smoothness(scene));
  } else if (cmd == "spencer-h0") {
    body = to_json(spencer_h0(scene, D));
  } else if (cmd == "complete") {
    const Ideal ideal = along_ideal(o.along.empty() ? "self" : o.along, scene);
    const GradedComplex c = build_de_rham(scene.ambient());
    body = limit_command(completed_complex(c, ideal, stage_count(o, c, ideal), D));
  } else if (cmd == "derived-complete") {
    const Ideal ideal = along_ideal(o.along.empty() ? "origin" : o.along, scene);
    const PresentedModule m = free_module(scene, {{"1", 0}});
    const GradedComplex kos = build_koszul(m, ideal.generators());
    body = limit_command(koszul_tower(m, ideal, stage_count(o, kos, ideal), D));
    body["module"] = "O_Y";
  } else if (cmd == "independence") {
    if (o.extended_scene.empty()) throw InputError("independence needs --extended-scene FILE");
    const AffineScene second = load_scene(o.extended_scene);
    const GradedComplex c = build_de_rham(second.ambient());
    const int stages = o.r_max > 0 ? o.r_max : default_stage_count(c, second.ideal(), D);
    const IndependenceReport rep = embedding_independence(scene, second, stages, D);
    body = {{"tables", to_json(rep.de_rham_first.limit_table())},
            {"extended_scene", second.name()},
            {"extended_tables", to_json(rep.de_rham_second.limit_table())},
            {"spencer_tables", to_json(rep.spencer_first.limit_table())},
            {"extended_spencer_tables", to_json(rep.spencer_second.limit_table())},
            {"de_rham_equal", rep.de_rham_equal},
            {"spencer_equal", rep.spencer_equal},
            {"equal", rep.equal()},
            {"mismatches", rep.mismatches},
            {"limits", to_json(rep.de_rham_first)}};
  } else {
    throw InputError("unknown command '" + cmd + "'");
  }

  Json out = body;
  out["command"] = cmd;
  out["scene"] = scene.name();
  out["ring"] = ring_json(scene);
  out["degree_bound"] = D;
  return out;
}

std::string render_text(const Json& result) {
  std::ostringstream out;
  out << result.value("command", "?") << " on " << result.value("scene", "?") << " (degree bound "
      << result.value("degree_bound", 0) << ")\n";
  auto table = [&](const std::string& key, const std::string& title) {
    if (!result.contains(key)) return;
    HomologyTable t(0, result.value("degree_bound", 0));
    for (const auto& [i, row] : result[key].items())
      for (const auto& [w, d] : row.items()) t.set(std::stoi(i), std::stoi(w), d.get<std::size_t>());
    out << render_table(t, title);
  };
  table("tables", "homology");
  table("extended_tables", "homology (extended scene)");
  table("spencer_tables", "filtered Spencer");
  table("extended_spencer_tables", "filtered Spencer (extended scene)");
  static const std::vector<std::string> skip = {"command", "scene", "degree_bound", "tables", "extended_tables",
                                                "spencer_tables", "extended_spencer_tables", "limits", "ring"};
  for (const auto& [key, value] : result.items()) {
    if (std::find(skip.begin(), skip.end(), key) != skip.end()) continue;
    if (key == "certificate") {
      out << "certificate: " << (value["valid"].get<bool>() ? "valid" : "NOT valid") << " ("
          << value["pieces_checked"] << " pieces, form degrees " << value["form_degrees"].dump() << ")\n";
      continue;
    }
    out << key << ": " << value.dump() << "\n";
  }
  if (result.contains("limits")) {
    const auto& l = result["limits"];
    out << "tower: " << l["stages"] << " stages, " << (l["all_stabilized"].get<bool>() ? "all entries stabilized" : "NOT stabilized: " + l["not_stabilized"].dump()) << "\n";
  }
  return out.str();
}

}  // namespace spencerlab
