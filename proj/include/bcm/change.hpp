#pragma once

#include <vector>

#include "bcm/catalog.hpp"
#include "bcm/selection.hpp"
#include "bcm/system.hpp"

namespace bcm {

/// All inclusion-maximal finitely representable subsets of `target`.
/// The returned family is an antichain in canonical order; it is empty
/// exactly when no catalog set is contained in `target`.
std::vector<ModelSet> frsubs(const ModelSet& target, const Catalog& catalog);

/// Dual: all inclusion-minimal finitely representable supersets of `target`.
std::vector<ModelSet> frsups(const ModelSet& target, const Catalog& catalog);

/// Outcome of an eviction or reception: the new base, its models, the
/// candidate family that was offered to the selection policy, and the
/// candidate it picked.
struct ChangeReport {
  Base result_base;
  ModelSet result_models;
  std::vector<ModelSet> candidates;
  ModelSet chosen;
};

/// Maxichoice eviction: rebuilds the base so that no input model satisfies
/// it, keeping a maximal representable part of the remaining models.
/// Throws IncompatibleError when the candidate family is empty.
ChangeReport evict(const FiniteSystem& system, const Base& base, const ModelSet& input,
                   const SelectionPolicy& policy);

/// Maxichoice reception: rebuilds the base so that every input model
/// satisfies it, adding as few extra models as representability allows.
ChangeReport receive(const FiniteSystem& system, const Base& base, const ModelSet& input,
                     const SelectionPolicy& policy);

}  // namespace bcm
