#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bcm/change.hpp"
#include "bcm/system.hpp"

namespace bcm {

/// A change operation under audit: takes a base and an input model set,
/// returns the new base. May throw IncompatibleError for undefined cases.
using ChangeFn = std::function<Base(const Base&, const ModelSet&)>;

struct PostulateCase {
  Base base;
  ModelSet input;
};

struct PostulateFailure {
  std::size_t case_index;  // into the case list handed to the checker
  std::string detail;      // reproducible description of the counterexample
};

struct PostulateCheck {
  std::string name;
  std::size_t checked = 0;
  std::vector<PostulateFailure> failures;
  bool pass() const { return failures.empty(); }
};

struct PostulateReport {
  std::string flavour;  // "eviction" or "reception"
  std::vector<PostulateCheck> checks;
  std::size_t cases = 0;
  std::size_t incompatible = 0;  // cases where the operation was undefined

  bool all_pass() const;
  const PostulateCheck* check(std::string_view name) const;
  std::string render() const;
};

/// Evaluates success, inclusion, vacuity, finite retainment and uniformity
/// of an eviction-like operation over the given cases. Cases where the
/// operation raises IncompatibleError are counted and skipped: the
/// postulates characterise the operation only where it is defined.
PostulateReport check_eviction_postulates(const FiniteSystem& system, const ChangeFn& op,
                                          const std::vector<PostulateCase>& cases);

/// Dual: success, persistence, vacuity, finite temperance, uniformity.
PostulateReport check_reception_postulates(const FiniteSystem& system, const ChangeFn& op,
                                           const std::vector<PostulateCase>& cases);

/// The exhaustive desk-scale grid for a finite system: every catalog witness
/// base crossed with every subset of the universe.
std::vector<PostulateCase> exhaustive_cases(const FiniteSystem& system);

/// A triple refuting monotony of reception: Mod(B) ⊆ Mod(B') yet the result
/// for B is not contained in the result for B'.
struct MonotonyWitness {
  Base smaller_base;
  Base larger_base;
  ModelSet input;
  ModelSet smaller_result;
  ModelSet larger_result;
};

/// Scans catalog witness bases (canonical order) x subsets for a monotony
/// violation of maxichoice reception; returns the first witness found.
std::optional<MonotonyWitness> monotony_probe(const FiniteSystem& system,
                                              const SelectionPolicy& policy);

/// Evidence that combining a multi-element candidate family does not stay
/// representable: the combined set and whether the catalog contains it.
struct CombinationEvidence {
  std::vector<ModelSet> family;
  ModelSet combined;
  bool representable;
};

/// Intersection of all maximal representable subsets of `target`.
/// Precondition: the family has at least two elements.
CombinationEvidence intersection_counterexample(const Catalog& catalog, const ModelSet& target);

/// Dual: union of all minimal representable supersets of `target`.
CombinationEvidence union_counterexample(const Catalog& catalog, const ModelSet& target);

}  // namespace bcm
