#include "bcm/poset.hpp"

#include <algorithm>

namespace bcm {

RmbpResult rmbp_check(const std::function<ModelSet(const Base&)>& models_of,
                      std::size_t universe_size,
                      const std::vector<std::pair<Base, Base>>& sample) {
  RmbpResult result;
  result.pairs = sample.size();
  for (std::size_t p = 0; p < sample.size(); ++p) {
    const auto& [first, second] = sample[p];
    ModelSet joint = models_of(first).set_intersection(models_of(second));
    Base merged = first;
    for (const BaseFormula& formula : second) {
      bool duplicate = false;
      for (const BaseFormula& have : merged)
        if (have.text == formula.text) { duplicate = true; break; }
      if (!duplicate) merged.push_back(formula);
    }
    ModelSet united = models_of(merged);
    if (joint == united) continue;
    for (std::size_t m = 0; m < universe_size; ++m) {
      if (joint.contains(m) != united.contains(m)) {
        result.pass = false;
        result.witness = RmbpWitness{p, m, joint.contains(m), united.contains(m)};
        return result;
      }
    }
  }
  return result;
}

std::vector<std::pair<Base, Base>> all_base_pairs(const FiniteSystem& system) {
  std::vector<Base> bases = system.witness_bases();
  std::vector<std::pair<Base, Base>> pairs;
  pairs.reserve(bases.size() * bases.size());
  for (const Base& a : bases)
    for (const Base& b : bases) pairs.emplace_back(a, b);
  return pairs;
}

UniquenessAudit uniqueness_audit(const Catalog& catalog) {
  UniquenessAudit audit;
  for (const ModelSet& target : all_subsets(catalog.universe_size())) {
    ++audit.targets;
    std::size_t sups = frsups(target, catalog).size();
    std::size_t subs = frsubs(target, catalog).size();
    audit.max_frsups_multiplicity = std::max(audit.max_frsups_multiplicity, sups);
    audit.max_frsubs_multiplicity = std::max(audit.max_frsubs_multiplicity, subs);
    if (subs >= 2) audit.frsubs_multiplicities.emplace_back(target, subs);
  }
  return audit;
}

CompatVerdict compat_finite(const Catalog& catalog) {
  return CompatVerdict{catalog.contains(ModelSet::empty(catalog.universe_size())),
                       catalog.contains(ModelSet::full(catalog.universe_size()))};
}

Neighbors immediate_neighbors(const Catalog& catalog, const ModelSet& target) {
  if (target.universe_size() != catalog.universe_size())
    throw UniverseMismatchError("neighbor query over a different universe");
  std::vector<ModelSet> below;
  std::vector<ModelSet> above;
  for (const CatalogEntry& entry : catalog.entries()) {
    if (entry.models.proper_subset_of(target)) below.push_back(entry.models);
    if (target.proper_subset_of(entry.models)) above.push_back(entry.models);
  }
  Neighbors result;
  for (const ModelSet& candidate : below) {
    bool immediate = true;
    for (const ModelSet& other : below)
      if (candidate.proper_subset_of(other)) { immediate = false; break; }
    if (immediate) result.predecessors.push_back(candidate);
  }
  for (const ModelSet& candidate : above) {
    bool immediate = true;
    for (const ModelSet& other : above)
      if (other.proper_subset_of(candidate)) { immediate = false; break; }
    if (immediate) result.successors.push_back(candidate);
  }
  std::sort(result.predecessors.begin(), result.predecessors.end());
  std::sort(result.successors.begin(), result.successors.end());
  return result;
}

}  // namespace bcm
