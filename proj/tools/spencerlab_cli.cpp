#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "spencerlab/commands.hpp"
#include "spencerlab/errors.hpp"
#include "spencerlab/scene_file.hpp"

using namespace spencerlab;

namespace {

struct Sub {
  CLI::App* app;
  std::string scene_file;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spencerlab: exact homology of Koszul, de Rham, jet and Spencer complexes"};
  app.require_subcommand(1);

  CommandOptions o;
  std::string format = "json";
  std::size_t n = 0;
  std::vector<Sub> subs;
  subs.reserve(command_names().size());  // options bind to scene_file by reference

  for (const auto& name : command_names()) {
    Sub s{app.add_subcommand(name), ""};
    auto* sc = s.app;
    // filtered-spencer may run on bare affine space given --n
    auto* scene_opt = sc->add_option("scene", subs.emplace_back(s).scene_file, "scene file");
    if (name != "filtered-spencer") scene_opt->required()->check(CLI::ExistingFile);
    sc->add_option("--degree-bound,-D", o.degree_bound, "top weight")->capture_default_str();
    sc->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
    if (name == "jet") sc->add_option("--r", o.r, "jet order")->capture_default_str();
    if (name == "spencer") sc->add_option("--module", o.module, "O | omega1 | omega-top | omega<k>")->capture_default_str();
    if (name == "koszul") sc->add_option("--elements", o.elements, "ring elements (default: the variables)");
    if (name == "filtered-spencer") {
      sc->add_option("--n", n, "dimension of affine space (instead of a scene)");
      sc->add_option("--p", o.p, "order budget")->capture_default_str();
    }
    if (name == "kashiwara") sc->add_option("--p", o.p, "operator order bound")->capture_default_str();
    if (name == "euler-certify") {
      sc->add_option("--complex", o.complex, "derham | jet")->check(CLI::IsMember({"derham", "jet"}))->capture_default_str();
      sc->add_option("--r", o.r, "jet order")->capture_default_str();
    }
    if (name == "complete") sc->add_option("--along", o.along, "self | ideal file")->default_str("self");
    if (name == "derived-complete") sc->add_option("--along", o.along, "origin | self | ideal file")->default_str("origin");
    if (name == "complete" || name == "derived-complete" || name == "independence")
      sc->add_option("--r-max", o.r_max, "number of tower stages (default: enough to stabilize)");
    if (name == "independence")
      sc->add_option("--extended-scene", o.extended_scene, "same variety in a larger ambient space")
          ->required()
          ->check(CLI::ExistingFile);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const Sub* chosen = nullptr;
    for (const auto& s : subs)
      if (s.app->parsed()) chosen = &s;
    o.command = chosen->app->get_name();
    if (n > 0) o.n = n;
    AffineScene scene = [&] {
      if (!chosen->scene_file.empty()) return load_scene(chosen->scene_file);
      if (!o.n) throw InputError("filtered-spencer needs a scene file or --n");
      return affine_space(*o.n);
    }();
    const Json result = run_command(o, scene);
    if (format == "json") {
      std::cout << result.dump(2) << "\n";
    } else {
      std::cout << render_text(result);
    }
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
