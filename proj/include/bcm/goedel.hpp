#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcm/prop.hpp"
#include "bcm/system.hpp"

namespace bcm {

/// A model class of the Gödel system: a total preorder on the atoms plus the
/// threshold marker s, given as an ordered partition (blocks from lowest to
/// highest value), refined with a flag telling whether the lowest block sits
/// at value exactly 0. The flag is what makes negation well-defined on
/// classes: the atom order alone cannot separate value 0 from small positive
/// values.
struct PreorderClass {
  /// Member indices 0..n-1 are atoms, n is the threshold marker.
  std::vector<std::vector<int>> blocks;
  bool zero_lowest = false;

  int block_of(int member) const;
  int theta_block(int marker_index) const;

  /// "0=a<s" style: blocks low to high joined by '<', members joined by '=',
  /// the zero flag rendered as a leading "0=".
  std::string name(const Signature& signature) const;
};

/// Symbolic value codes within one class: 0 is ZERO, 1..k are the block
/// levels, k+1 is ONE (k = number of blocks).
using SymCode = int;

/// All preorder classes over the atoms plus the threshold marker, in a
/// deterministic order. A threshold of exactly 1 rules out classes with
/// atoms strictly above the marker (no value exceeds 1). Requires at least
/// one atom and at most 3.
std::vector<PreorderClass> enumerate_classes(std::size_t atom_count, bool theta_is_one);

/// Symbolic Gödel evaluation: atoms map to their block level (ZERO when the
/// flagged lowest block holds them), conjunction is min, disjunction max,
/// negation collapses to ONE/ZERO, implication is ONE when lhs <= rhs and
/// rhs otherwise.
SymCode eval_goedel(const PreorderClass& cls, const PropAst& formula, std::size_t atom_count);

/// ONE's code within a class.
SymCode one_code(const PreorderClass& cls);

/// Whether the class satisfies the base: the base conjunction evaluates to
/// at least the marker's level. The empty base is satisfied everywhere.
bool satisfies_goedel(const PreorderClass& cls, const std::vector<PropAst>& base,
                      std::size_t atom_count, bool excluded_middle_guard = false);

/// Propositional Gödel logic with threshold theta, over the finite universe
/// of preorder classes. theta is an exact rational in (0, 1]; its value only
/// matters through the marker position and the theta == 1 cutoff. The
/// excluded_middle_guard flag switches the satisfaction test to additionally
/// require (!a | a) at threshold, a stricter variant kept for comparison.
class GoedelSystem final : public FiniteSystem {
public:
  GoedelSystem(Signature signature, std::int64_t theta_num, std::int64_t theta_den,
               bool excluded_middle_guard = false);  // at most 2 atoms

  std::string_view id() const override { return "goedel"; }
  std::size_t universe_size() const override { return names_.size(); }
  const std::vector<std::string>& model_names() const override { return names_; }
  BaseFormula parse_formula(std::string_view text) const override;
  const Catalog& catalog() const override { return catalog_; }

  const Signature& signature() const { return signature_; }
  const std::vector<PreorderClass>& classes() const { return classes_; }
  bool theta_is_one() const { return theta_num_ == theta_den_; }
  std::int64_t theta_num() const { return theta_num_; }
  std::int64_t theta_den() const { return theta_den_; }

private:
  Signature signature_;
  std::int64_t theta_num_;
  std::int64_t theta_den_;
  bool excluded_middle_guard_;
  std::vector<PreorderClass> classes_;
  std::vector<std::string> names_;
  Catalog catalog_;
};

}  // namespace bcm
