#include "spencerlab/scene_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "spencerlab/errors.hpp"

namespace spencerlab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct Sections {
  std::map<std::string, std::string> ring;
  std::vector<std::pair<int, std::string>> ideal;  // (line number, text)
  std::map<std::string, std::string> options;
};

Sections split_sections(const std::string& text, bool bare_lines_are_ideal) {
  Sections out;
  std::string section = bare_lines_are_ideal ? "ideal" : "";
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw InputError("line " + std::to_string(line_no) + ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "ring" && section != "ideal" && section != "options")
        throw InputError("line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      continue;
    }
    if (section == "ideal") {
      out.ideal.emplace_back(line_no, line);
      continue;
    }
    if (section.empty()) throw InputError("line " + std::to_string(line_no) + ": content before any section");
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InputError("line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    auto& target = section == "ring" ? out.ring : out.options;
    if (!target.emplace(key, value).second)
      throw InputError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
  }
  return out;
}

std::vector<Polynomial> parse_lines(const std::vector<std::pair<int, std::string>>& lines, const RingPtr& ring) {
  std::vector<Polynomial> gens;
  for (const auto& [line_no, text] : lines) {
    try {
      gens.push_back(parse_polynomial(text, ring));
    } catch (const InputError& e) {
      throw InputError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return gens;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

AffineScene parse_scene(const std::string& text, const std::string& fallback_name) {
  const Sections s = split_sections(text, false);
  auto vars = s.ring.find("variables");
  if (vars == s.ring.end()) throw InputError("[ring] needs 'variables ='");
  const std::vector<std::string> names = split_list(vars->second);
  std::vector<int> weights;
  if (auto w = s.ring.find("weights"); w != s.ring.end()) {
    for (const auto& item : split_list(w->second)) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size()) throw InputError("weight '" + item + "' is not an integer");
      weights.push_back(value);
    }
  } else {
    weights.assign(names.size(), 1);
  }
  for (const auto& [key, value] : s.ring)
    if (key != "variables" && key != "weights") throw InputError("unknown [ring] key '" + key + "'");
  if (weights.size() != names.size()) throw InputError("variables and weights have different lengths");
  RingPtr ring = make_ring(names, weights);

  std::string name = fallback_name;
  for (const auto& [key, value] : s.options) {
    if (key == "name") {
      name = value;
    } else {
      throw InputError("unknown [options] key '" + key + "'");
    }
  }
  return AffineScene(ring, Ideal(ring, parse_lines(s.ideal, ring)), name);
}

AffineScene load_scene(const std::filesystem::path& path) {
  return parse_scene(read_file(path), path.stem().string());
}

Ideal parse_ideal_text(const std::string& text, const RingPtr& ring) {
  const Sections s = split_sections(text, true);
  if (!s.ring.empty()) {
    // a full scene file: its ring must match
    const AffineScene other = parse_scene(text);
    if (!(*other.ring() == *ring)) throw InputError("ideal file is over a different ring");
    return Ideal(ring, other.ideal().generators());
  }
  return Ideal(ring, parse_lines(s.ideal, ring));
}

Ideal load_ideal(const std::filesystem::path& path, const RingPtr& ring) {
  return parse_ideal_text(read_file(path), ring);
}

std::string format_scene(const AffineScene& scene) {
  std::ostringstream out;
  const auto& ring = *scene.ring();
  out << "[ring]\nvariables = ";
  for (std::size_t j = 0; j < ring.nvars(); ++j) out << (j ? ", " : "") << ring.names()[j];
  out << "\nweights = ";
  for (std::size_t j = 0; j < ring.nvars(); ++j) out << (j ? ", " : "") << ring.weight(j);
  out << "\n";
  if (!scene.ideal().empty()) {
    out << "[ideal]\n";
    for (const auto& g : scene.ideal().generators()) out << g.to_string() << "\n";
  }
  if (!scene.name().empty()) out << "[options]\nname = " << scene.name() << "\n";
  return out.str();
}

}  // namespace spencerlab
