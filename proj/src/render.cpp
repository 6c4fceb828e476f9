#include "kmroot/render.hpp"

namespace kmroot {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_dot(const DynkinDiagram& d, const std::string& name) {
  std::string out = "graph " + quoted(name.empty() ? "diagram" : name) + " {\n";
  out += "  rankdir=LR;\n";
  out += "  node [shape=circle, fontsize=11, width=0.35, fixedsize=true];\n";
  for (int i = 0; i < d.n(); ++i)
    out += "  n" + std::to_string(i) + " [label=" + quoted(d.label(i)) + "];\n";
  for (int i = 0; i < d.n(); ++i)
    for (int j = i + 1; j < d.n(); ++j) {
      const Int m = d.mult(i, j);
      if (m == 0) continue;
      const std::string edge = "  n" + std::to_string(i) + " -- n" + std::to_string(j);
      if (m == 1) {
        out += edge + ";\n";
      } else {
        // One parallel line per bond, arrowheads marking the multiple bond.
        for (Int t = 0; t < m; ++t)
          out += edge + " [dir=both, arrowsize=0.4, arrowhead=vee, arrowtail=vee];\n";
      }
    }
  out += "}\n";
  return out;
}

std::string render_ascii(const DynkinDiagram& d, const std::string& name) {
  std::string out = (name.empty() ? std::string("diagram") : name) + "  (rank " +
                    std::to_string(d.n()) + ")\n";
  out += "vertices:";
  for (int i = 0; i < d.n(); ++i) out += " " + d.label(i);
  out += "\n";
  bool any = false;
  for (int i = 0; i < d.n(); ++i)
    for (int j = i + 1; j < d.n(); ++j) {
      const Int m = d.mult(i, j);
      if (m == 0) continue;
      any = true;
      std::string bond;
      if (m == 1)
        bond = " --- ";
      else if (m == 2)
        bond = " <==> ";
      else
        bond = " <=" + std::to_string(m) + "=> ";
      out += "  " + d.label(i) + bond + d.label(j) + "\n";
    }
  if (!any) out += "  (no edges)\n";
  return out;
}

}  // namespace kmroot
