#pragma once

#include <optional>
#include <string>

#include "bcm/catalog.hpp"

namespace bcm {

/// Hasse diagram of the powerset of the universe in DOT syntax.
/// Representable sets are drawn as boxes, the rest as ellipses. When a
/// highlight set is given, thick arrows go from it to each of its maximal
/// representable subsets. Throws BoundError when the universe exceeds
/// `max_universe` (default 5 model classes, 32 nodes).
std::string lattice_dot(const Catalog& catalog,
                        const std::optional<ModelSet>& highlight,
                        const std::vector<std::string>& model_names,
                        std::size_t max_universe = 5);

}  // namespace bcm
