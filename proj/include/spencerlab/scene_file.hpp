#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "spencerlab/scene.hpp"

namespace spencerlab {

/// Scene files:
///
///   # comment
///   [ring]
///   variables = x, y
///   weights = 2, 3
///   [ideal]
///   x^3 - y^2
///   [options]
///   name = cusp
///
/// [ideal] and [options] are optional; blank lines and '#' comments are ignored.
AffineScene parse_scene(const std::string& text, const std::string& fallback_name = "");
AffineScene load_scene(const std::filesystem::path& path);

/// Polynomials over an existing ring: an [ideal] section, or one polynomial per line.
Ideal parse_ideal_text(const std::string& text, const RingPtr& ring);
Ideal load_ideal(const std::filesystem::path& path, const RingPtr& ring);

/// Canonical scene-file text (round-trips through parse_scene).
std::string format_scene(const AffineScene& scene);

}  // namespace spencerlab
