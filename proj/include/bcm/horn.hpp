#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcm/prop.hpp"
#include "bcm/system.hpp"

namespace bcm {

/// One Horn clause: body atoms imply a head atom, or falsum. Bare facts are
/// clauses with an empty body; bare falsum is the empty-bodied clause with
/// head -1.
struct HornClause {
  std::vector<int> body;  // atom indices, sorted, duplicate-free
  int head = -1;          // atom index, or -1 for falsum

  friend bool operator==(const HornClause&, const HornClause&) = default;
  friend auto operator<=>(const HornClause&, const HornClause&) = default;
};

/// A Horn formula: a conjunction of clauses (nested conjunction in the
/// surface syntax normalizes away; duplicates are dropped).
struct HornFormula {
  std::vector<HornClause> clauses;  // sorted, duplicate-free
};

/// Parses `p`, `F`, `p & q -> r`, `p -> F`, and conjunctions of
/// (parenthesized) clauses. Rejects disjunction, negation and nested
/// implications. Throws ParseError with a 1-based column.
HornFormula parse_horn(std::string_view text, const Signature& signature);

std::string print_horn(const HornFormula& formula, const Signature& signature);

/// Classical truth of a clause at the valuation with the given index.
bool horn_sat(std::size_t valuation, const HornClause& clause, const Signature& signature);

/// Propositional Horn logic over the classical valuation universe. The
/// catalog comes out as the family of valuation sets closed under
/// component-wise meet, plus the empty set (falsum) and the full universe.
class HornSystem final : public FiniteSystem {
public:
  explicit HornSystem(Signature signature);  // at most 4 atoms

  std::string_view id() const override { return "horn"; }
  std::size_t universe_size() const override { return names_.size(); }
  const std::vector<std::string>& model_names() const override { return names_; }
  BaseFormula parse_formula(std::string_view text) const override;
  const Catalog& catalog() const override { return catalog_; }

  const Signature& signature() const { return signature_; }

private:
  Signature signature_;
  std::vector<std::string> names_;
  Catalog catalog_;
};

}  // namespace bcm
