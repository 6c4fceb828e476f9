#pragma once

#include <string>

#include "kmroot/cartan.hpp"

namespace kmroot {

// Graphviz rendering. Double edges come out as two parallel lines with
// arrowheads in both directions; multiplicity a >= 3 draws a parallel lines.
std::string render_dot(const DynkinDiagram& d, const std::string& name = "");

// Plain text: one line per edge, "u --- v" for single edges, "u <==> v" for
// double, "u <=a=> v" for higher multiplicity.
std::string render_ascii(const DynkinDiagram& d, const std::string& name = "");

}  // namespace kmroot
