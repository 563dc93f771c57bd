#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "spencerlab/report.hpp"
#include "spencerlab/scene.hpp"

namespace spencerlab {

struct CommandOptions {
  std::string command;
  int degree_bound = 8;
  int r = 1;                              // jet order
  std::string module = "O";               // spencer
  std::vector<std::string> elements;      // koszul; empty: the variables
  std::optional<std::size_t> n;           // filtered-spencer; default: the scene's ambient space
  int p = 2;                              // filtered-spencer, kashiwara
  std::string complex = "derham";         // euler-certify
  std::string along;                      // complete: self|FILE, derived-complete: origin|self|FILE
  int r_max = 0;                          // tower stages; 0 = automatic
  std::filesystem::path extended_scene;   // independence
};

const std::vector<std::string>& command_names();

/// Runs one command on a scene.  Throws the library's errors unchanged.
Json run_command(const CommandOptions& options, const AffineScene& scene);

/// Human-readable rendering of a command result.
std::string render_text(const Json& result);

}  // namespace spencerlab
