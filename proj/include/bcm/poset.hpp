#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcm/change.hpp"
#include "bcm/system.hpp"

namespace bcm {

struct RmbpWitness {
  std::size_t pair_index;
  std::size_t model_index;
  bool joint;  // model satisfies both bases separately
  bool merged; // model satisfies the concatenated base
};

struct RmbpResult {
  bool pass = true;
  std::size_t pairs = 0;
  std::optional<RmbpWitness> witness;
};

/// Checks the reverse monotonic bijection property on sample base pairs:
/// a model satisfies both bases exactly when it satisfies their union.
/// `models_of` is injectable so a deliberately broken satisfaction relation
/// can serve as a negative control.
RmbpResult rmbp_check(const std::function<ModelSet(const Base&)>& models_of,
                      std::size_t universe_size,
                      const std::vector<std::pair<Base, Base>>& sample);

/// All pairs of catalog witness bases of a finite system.
std::vector<std::pair<Base, Base>> all_base_pairs(const FiniteSystem& system);

struct UniquenessAudit {
  std::size_t targets = 0;
  std::size_t max_frsups_multiplicity = 0;
  std::size_t max_frsubs_multiplicity = 0;
  /// Targets whose maximal-subset family has two or more elements, with the
  /// family size. Reported as a diagnostic, not asserted.
  std::vector<std::pair<ModelSet, std::size_t>> frsubs_multiplicities;
  bool frsups_at_most_one() const { return max_frsups_multiplicity <= 1; }
};

/// Records |frsups| and |frsubs| for every target set over the universe.
/// Throws BoundError when the universe exceeds 16 model classes.
UniquenessAudit uniqueness_audit(const Catalog& catalog);

struct CompatVerdict {
  bool eviction;
  bool reception;
};

/// Finite-catalog compatibility: eviction needs the empty set representable,
/// reception needs the full universe representable.
CompatVerdict compat_finite(const Catalog& catalog);

struct Neighbors {
  std::vector<ModelSet> predecessors;
  std::vector<ModelSet> successors;
};

/// Immediate predecessors and successors of `target` in the strict poset
/// (catalog ∪ {target}, ⊂). A target that belongs to the catalog gets its
/// strict neighbors; one that does not coincides with frsubs/frsups.
Neighbors immediate_neighbors(const Catalog& catalog, const ModelSet& target);

}  // namespace bcm
