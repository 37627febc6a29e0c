#include "bcm/lattice.hpp"

#include <sstream>

#include "bcm/change.hpp"

namespace bcm {

std::string lattice_dot(const Catalog& catalog,
                        const std::optional<ModelSet>& highlight,
                        const std::vector<std::string>& model_names,
                        std::size_t max_universe) {
  const std::size_t n = catalog.universe_size();
  if (n > max_universe)
    throw BoundError("lattice export limited to " + std::to_string(max_universe) +
                     " model classes, universe has " + std::to_string(n));
  if (highlight && highlight->universe_size() != n)
    throw UniverseMismatchError("highlight set over a different universe");

  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [fontsize=10];\n";

  std::vector<ModelSet> nodes = all_subsets(n);
  for (const ModelSet& node : nodes) {
    out << "  n" << node.bits() << " [label=\"" << node.render(model_names) << "\", shape="
        << (catalog.contains(node) ? "box" : "ellipse") << "];\n";
  }

  // Cover relations of the powerset: S -> T when T = S plus one model.
  for (const ModelSet& node : nodes) {
    for (std::size_t m = 0; m < n; ++m) {
      if (node.contains(m)) continue;
      ModelSet upper = node;
      upper.insert(m);
      out << "  n" << node.bits() << " -> n" << upper.bits() << ";\n";
    }
  }

  if (highlight) {
    for (const ModelSet& chosen : frsubs(*highlight, catalog))
      out << "  n" << highlight->bits() << " -> n" << chosen.bits()
          << " [penwidth=3, constraint=false];\n";
  }

  out << "}\n";
  return out.str();
}

}  // namespace bcm
