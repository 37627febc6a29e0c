#pragma once

#include <string>
#include <vector>

#include "bcm/prop.hpp"
#include "bcm/system.hpp"

namespace bcm {

/// Strong-Kleene truth values with the order f < u < t.
enum class Tri : int { F = 0, U = 1, T = 2 };

/// Strong-Kleene evaluation over negation, conjunction (min) and
/// disjunction (max). Implication evaluates as !lhs | rhs.
Tri eval3(const PropAst& formula, const std::vector<Tri>& valuation);

enum class ThreeValVariant { K3, P3 };

/// The Kleene and Priest three-valued systems. Both share the valuation
/// universe 3^n and the evaluation core; they differ in which truth values
/// satisfy a formula (K3: t, P3: t or u). Catalogs are built by a fixpoint
/// over (true-set, false-set) pairs seeded with the atoms and closed under
/// the connectives, projected per variant and closed under intersection.
class ThreeValSystem final : public FiniteSystem {
public:
  ThreeValSystem(Signature signature, ThreeValVariant variant);  // at most 2 atoms

  std::string_view id() const override {
    return variant_ == ThreeValVariant::K3 ? "k3" : "p3";
  }
  std::size_t universe_size() const override { return names_.size(); }
  const std::vector<std::string>& model_names() const override { return names_; }
  BaseFormula parse_formula(std::string_view text) const override;
  const Catalog& catalog() const override { return catalog_; }

  const Signature& signature() const { return signature_; }
  ThreeValVariant variant() const { return variant_; }

  /// Value of `atom_index` at the valuation with the given universe index.
  Tri valuation_value(std::size_t valuation, std::size_t atom_index) const;

  /// Number of fixpoint rounds the catalog construction took (diagnostic).
  std::size_t fixpoint_rounds() const { return fixpoint_rounds_; }

private:
  ModelSet formula_models(const PropAst& formula) const;

  Signature signature_;
  ThreeValVariant variant_;
  std::vector<std::string> names_;
  Catalog catalog_;
  std::size_t fixpoint_rounds_ = 0;
};

}  // namespace bcm
