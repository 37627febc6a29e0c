#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bcm/catalog.hpp"
#include "bcm/system.hpp"

namespace bcm {

/// A declared, ordered set of propositional atoms. The universe enumeration
/// of every valuation-based system is derived from the atom order: valuation
/// index k assigns atom i the (n-1-i)-th base-|values| digit of k, so the
/// enumeration is lexicographic on value tuples with the first atom most
/// significant.
struct Signature {
  std::vector<std::string> atoms;

  int index_of(std::string_view atom) const;
  std::size_t size() const { return atoms.size(); }
};

Signature parse_signature(std::string_view csv);  // "p,q" -> {p,q}; validates names

enum class PropConnective { Atom, Top, Bottom, Not, And, Or, Implies };

struct PropNode;
using PropAst = std::shared_ptr<const PropNode>;

struct PropNode {
  PropConnective kind;
  int atom = -1;  // when kind == Atom
  PropAst lhs;
  PropAst rhs;
};

PropAst make_atom(int index);
PropAst make_const(bool truth);
PropAst make_not(PropAst operand);
PropAst make_binary(PropConnective kind, PropAst lhs, PropAst rhs);

/// Recursive-descent parser for the shared ASCII grammar:
///   atoms [a-z][a-z0-9_]*, '!' not, '&' and, '|' or, '->' implies,
///   'T'/'F' constants, precedence ! > & > | > ->, parentheses.
/// Throws ParseError with a 1-based column.
PropAst parse_prop(std::string_view text, const Signature& signature);

/// Prints with minimal parentheses; reparses to the same tree.
std::string print_prop(const PropAst& formula, const Signature& signature);

/// Classical two-valued evaluation at the valuation with the given universe
/// index (see Signature for the enumeration).
bool eval_classical(const PropAst& formula, std::size_t valuation, const Signature& signature);

/// Exact model set of a formula by full enumeration of the 2^n valuations.
ModelSet classical_models(const PropAst& formula, const Signature& signature);

/// Names of the 2^n classical valuations, e.g. "ft" maps p->f, q->t.
std::vector<std::string> classical_model_names(const Signature& signature);

/// The canonical single-formula base denoting `target`: a disjunction of
/// full conjunctions of literals, one per member valuation. The empty target
/// yields the contradiction over the first atom.
Base dnf_base_for(const ModelSet& target, const Signature& signature);

/// Which formulas a system's language admits. The two restricted fragments
/// additionally admit at most one formula per base; their catalogs are the
/// handful of single-formula denotations used as counterexample systems.
enum class Fragment { Full, AtomsOnly, AtomsPlusFalsum };

/// Classical propositional logic over a finite signature, or one of the two
/// restricted fragments.
class PropSystem final : public FiniteSystem {
public:
  /// Signatures of up to 4 atoms (full catalog has 2^(2^n) entries).
  explicit PropSystem(Signature signature, Fragment fragment = Fragment::Full);

  std::string_view id() const override { return id_; }
  std::size_t universe_size() const override { return names_.size(); }
  const std::vector<std::string>& model_names() const override { return names_; }
  BaseFormula parse_formula(std::string_view text) const override;
  const Catalog& catalog() const override { return catalog_; }
  std::size_t max_base_size() const override;

  const Signature& signature() const { return signature_; }
  Fragment fragment() const { return fragment_; }

private:
  Signature signature_;
  Fragment fragment_;
  std::string id_;
  std::vector<std::string> names_;
  Catalog catalog_;
};

}  // namespace bcm
