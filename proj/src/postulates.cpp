#include "bcm/postulates.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bcm {

namespace {

std::string describe_case(const FiniteSystem& system, const PostulateCase& c,
                          const ModelSet& observed) {
  std::ostringstream out;
  out << "base [";
  for (std::size_t i = 0; i < c.base.size(); ++i) {
    if (i) out << "; ";
    out << c.base[i].text;
  }
  out << "] input " << c.input.render(system.model_names()) << " -> result models "
      << observed.render(system.model_names());
  return out.str();
}

// Canonical key of a candidate family, used to group cases for uniformity.
std::string family_key(const std::vector<ModelSet>& family) {
  std::string key;
  for (const ModelSet& s : family) {
    key += std::to_string(s.bits());
    key += '|';
  }
  return key;
}

struct EvaluatedCase {
  std::size_t index;
  ModelSet result_models;
};

PostulateReport run_checks(const FiniteSystem& system, const ChangeFn& op,
                           const std::vector<PostulateCase>& cases, bool eviction) {
  PostulateReport report;
  report.flavour = eviction ? "eviction" : "reception";
  report.cases = cases.size();

  PostulateCheck success{eviction ? "success" : "success", 0, {}};
  PostulateCheck keep{eviction ? "inclusion" : "persistence", 0, {}};
  PostulateCheck vacuity{"vacuity", 0, {}};
  PostulateCheck minimal{eviction ? "finite retainment" : "finite temperance", 0, {}};
  PostulateCheck uniformity{"uniformity", 0, {}};

  const Catalog& catalog = system.catalog();
  std::map<std::string, EvaluatedCase> group_representative;

  for (std::size_t i = 0; i < cases.size(); ++i) {
    const PostulateCase& c = cases[i];
    ModelSet base_models = system.models_of(c.base);
    Base result;
    try {
      result = op(c.base, c.input);
    } catch (const IncompatibleError&) {
      ++report.incompatible;
      continue;
    }
    ModelSet result_models = system.models_of(result);
    std::string detail = describe_case(system, c, result_models);

    ++success.checked;
    if (eviction) {
      if (!c.input.set_intersection(result_models).is_empty())
        success.failures.push_back({i, detail + " (input models survive)"});
    } else {
      if (!c.input.subset_of(result_models))
        success.failures.push_back({i, detail + " (input models missing)"});
    }

    ++keep.checked;
    if (eviction) {
      if (!result_models.subset_of(base_models))
        keep.failures.push_back({i, detail + " (new models introduced)"});
    } else {
      if (!base_models.subset_of(result_models))
        keep.failures.push_back({i, detail + " (base models lost)"});
    }

    ++vacuity.checked;
    bool vacuous = eviction ? c.input.set_intersection(base_models).is_empty()
                            : c.input.subset_of(base_models);
    if (vacuous && result_models != base_models)
      vacuity.failures.push_back({i, detail + " (vacuous input changed the models)"});

    ++minimal.checked;
    ModelSet ideal = eviction ? base_models.set_difference(c.input)
                              : base_models.set_union(c.input);
    for (const CatalogEntry& entry : catalog.entries()) {
      bool between = eviction
                         ? result_models.proper_subset_of(entry.models) &&
                               entry.models.subset_of(ideal)
                         : ideal.subset_of(entry.models) &&
                               entry.models.proper_subset_of(result_models);
      if (between) {
        minimal.failures.push_back(
            {i, detail + " (representable set " + entry.models.render(system.model_names()) +
                    " lies strictly between)"});
        break;
      }
    }

    ++uniformity.checked;
    std::vector<ModelSet> family =
        eviction ? frsubs(ideal, catalog) : frsups(ideal, catalog);
    auto [it, inserted] =
        group_representative.try_emplace(family_key(family), EvaluatedCase{i, result_models});
    if (!inserted && it->second.result_models != result_models)
      uniformity.failures.push_back(
          {i, detail + " (case " + std::to_string(it->second.index) +
                  " has the same candidate family but models " +
                  it->second.result_models.render(system.model_names()) + ")"});
  }

  report.checks = {std::move(success), std::move(keep), std::move(vacuity), std::move(minimal),
                   std::move(uniformity)};
  return report;
}

}  // namespace

bool PostulateReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const PostulateCheck& c) { return c.pass(); });
}

const PostulateCheck* PostulateReport::check(std::string_view name) const {
  for (const PostulateCheck& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string PostulateReport::render() const {
  std::ostringstream out;
  out << flavour << ": " << cases << " cases";
  if (incompatible) out << " (" << incompatible << " incompatible, skipped)";
  out << "\n";
  for (const PostulateCheck& c : checks) {
    out << "  " << c.name << ": " << (c.pass() ? "pass" : "FAIL") << " [" << c.checked
        << " checked]";
    if (!c.pass()) out << "\n    counterexample: " << c.failures.front().detail;
    out << "\n";
  }
  return out.str();
}

PostulateReport check_eviction_postulates(const FiniteSystem& system, const ChangeFn& op,
                                          const std::vector<PostulateCase>& cases) {
  return run_checks(system, op, cases, /*eviction=*/true);
}

PostulateReport check_reception_postulates(const FiniteSystem& system, const ChangeFn& op,
                                           const std::vector<PostulateCase>& cases) {
  return run_checks(system, op, cases, /*eviction=*/false);
}

std::vector<PostulateCase> exhaustive_cases(const FiniteSystem& system) {
  std::vector<PostulateCase> cases;
  std::vector<Base> bases = system.witness_bases();
  std::vector<ModelSet> inputs = all_subsets(system.universe_size());
  cases.reserve(bases.size() * inputs.size());
  for (const Base& base : bases)
    for (const ModelSet& input : inputs) cases.push_back(PostulateCase{base, input});
  return cases;
}

std::optional<MonotonyWitness> monotony_probe(const FiniteSystem& system,
                                              const SelectionPolicy& policy) {
  std::vector<Base> bases = system.witness_bases();
  std::vector<ModelSet> inputs = all_subsets(system.universe_size());
  for (std::size_t i = 0; i < bases.size(); ++i) {
    ModelSet small_models = system.models_of(bases[i]);
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if (!small_models.subset_of(system.models_of(bases[j]))) continue;
      for (const ModelSet& input : inputs) {
        ModelSet r1, r2;
        try {
          r1 = receive(system, bases[i], input, policy).result_models;
          r2 = receive(system, bases[j], input, policy).result_models;
        } catch (const IncompatibleError&) {
          continue;
        }
        if (!r1.subset_of(r2))
          return MonotonyWitness{bases[i], bases[j], input, r1, r2};
      }
    }
  }
  return std::nullopt;
}

namespace {

CombinationEvidence combine(const Catalog& catalog, std::vector<ModelSet> family,
                            bool intersect) {
  if (family.size() < 2)
    throw PreconditionError("combination evidence needs a candidate family of at least two sets");
  ModelSet combined = family.front();
  for (std::size_t i = 1; i < family.size(); ++i)
    combined = intersect ? combined.set_intersection(family[i]) : combined.set_union(family[i]);
  bool representable = catalog.contains(combined);
  return CombinationEvidence{std::move(family), combined, representable};
}

}  // namespace

CombinationEvidence intersection_counterexample(const Catalog& catalog, const ModelSet& target) {
  return combine(catalog, frsubs(target, catalog), /*intersect=*/true);
}

CombinationEvidence union_counterexample(const Catalog& catalog, const ModelSet& target) {
  return combine(catalog, frsups(target, catalog), /*intersect=*/false);
}

}  // namespace bcm
