#pragma once

#include "stabgeo/lattice.hpp"

#include <string>

namespace stabgeo {

// Readers for the surface description format. Numbers must be exact:
// integers may appear bare, anything else as a "p/q" or decimal string.
// Floating-point literals are rejected so no value is silently rounded.
// Loading and validation are separate steps; feed the result to
// validate_surface to obtain a usable surface.
SurfaceData parse_surface_json(const std::string& text);
SurfaceData parse_surface_toml(const std::string& text);

// Dispatches on the file extension (.json or .toml).
SurfaceData load_surface_file(const std::string& path);

}  // namespace stabgeo
