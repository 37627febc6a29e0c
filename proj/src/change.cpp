#include "bcm/change.hpp"

#include <algorithm>

namespace bcm {

namespace {

void check_target(const ModelSet& target, const Catalog& catalog) {
  if (target.universe_size() != catalog.universe_size())
    throw UniverseMismatchError("target set and catalog range over different universes");
}

// Keeps the maximal (keep_max) or minimal elements of a family of sets.
std::vector<ModelSet> extremal(std::vector<ModelSet> family, bool keep_max) {
  std::vector<ModelSet> result;
  for (std::size_t i = 0; i < family.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < family.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = keep_max ? family[i].proper_subset_of(family[j])
                           : family[j].proper_subset_of(family[i]);
    }
    if (!dominated) result.push_back(family[i]);
  }
  std::sort(result.begin(), result.end());
  return result;
}

Base witness_base(const FiniteSystem& system, const ModelSet& chosen) {
  const CatalogEntry* entry = system.catalog().find(chosen);
  Base base;
  for (const std::string& formula : entry->witness) base.push_back(system.parse_formula(formula));
  return base;
}

}  // namespace

std::vector<ModelSet> frsubs(const ModelSet& target, const Catalog& catalog) {
  check_target(target, catalog);
  std::vector<ModelSet> inside;
  for (const CatalogEntry& entry : catalog.entries())
    if (entry.models.subset_of(target)) inside.push_back(entry.models);
  return extremal(std::move(inside), /*keep_max=*/true);
}

std::vector<ModelSet> frsups(const ModelSet& target, const Catalog& catalog) {
  check_target(target, catalog);
  std::vector<ModelSet> outside;
  for (const CatalogEntry& entry : catalog.entries())
    if (target.subset_of(entry.models)) outside.push_back(entry.models);
  return extremal(std::move(outside), /*keep_max=*/false);
}

ChangeReport evict(const FiniteSystem& system, const Base& base, const ModelSet& input,
                   const SelectionPolicy& policy) {
  ModelSet target = system.models_of(base).set_difference(input);
  std::vector<ModelSet> candidates = frsubs(target, system.catalog());
  if (candidates.empty())
    throw IncompatibleError("no maximal representable subset of " +
                            target.render(system.model_names()) +
                            " exists in " + std::string(system.id()));
  ModelSet chosen = policy.choose(candidates);
  return ChangeReport{witness_base(system, chosen), chosen, std::move(candidates), chosen};
}

ChangeReport receive(const FiniteSystem& system, const Base& base, const ModelSet& input,
                     const SelectionPolicy& policy) {
  ModelSet target = system.models_of(base).set_union(input);
  std::vector<ModelSet> candidates = frsups(target, system.catalog());
  if (candidates.empty())
    throw IncompatibleError("no minimal representable superset of " +
                            target.render(system.model_names()) +
                            " exists in " + std::string(system.id()));
  ModelSet chosen = policy.choose(candidates);
  return ChangeReport{witness_base(system, chosen), chosen, std::move(candidates), chosen};
}

}  // namespace bcm
