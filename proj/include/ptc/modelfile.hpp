#pragma once

#include <string>

#include "ptc/presentation.hpp"

namespace ptc {

// Parses the INI-style model format:
//
//   [meta]
//   name = ky
//   assert.fiber_formal = product of odd spheres
//   [generators]
//   x = 3 fiber
//   b = 6 base
//   [differential]
//   z = x*y
//
// Sections may appear in any order; generators without a differential line
// get d = 0; the block defaults to fiber. Throws ParseError with the line
// number on malformed input. The result is not yet validated.
CdgaPresentation parse_model(const std::string& text);

// Reads and parses a model file. Throws IoError when unreadable.
CdgaPresentation load_model_file(const std::string& path);

// Canonical text form; parse_model(serialize_model(p)) reproduces p.
std::string serialize_model(const CdgaPresentation& p);

}  // namespace ptc
