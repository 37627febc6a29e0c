#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcm/catalog.hpp"
#include "bcm/model_set.hpp"

namespace bcm {

/// A formula of some logic, reduced to what the engine needs: its concrete
/// text (canonical form, reparseable) and the set of universe models that
/// satisfy it.
struct BaseFormula {
  std::string text;
  ModelSet models;
};

/// A finite base: the agent's epistemic state.
using Base = std::vector<BaseFormula>;

/// A satisfaction system with finitely many model classes. Supplies the
/// universe enumeration, a formula parser and the catalog of finitely
/// representable model sets. Instances are immutable once built; all
/// operations are pure.
class FiniteSystem {
public:
  virtual ~FiniteSystem() = default;

  virtual std::string_view id() const = 0;
  virtual std::size_t universe_size() const = 0;
  virtual const std::vector<std::string>& model_names() const = 0;

  /// Parses a single formula; throws ParseError with a 1-based column.
  virtual BaseFormula parse_formula(std::string_view text) const = 0;

  virtual const Catalog& catalog() const = 0;

  /// Largest base the system's language admits (fragment systems restrict
  /// this; unrestricted systems return SIZE_MAX).
  virtual std::size_t max_base_size() const { return static_cast<std::size_t>(-1); }

  /// Joint satisfaction: a model satisfies a base when it satisfies every
  /// formula in it. The empty base is satisfied everywhere.
  virtual ModelSet models_of(const Base& base) const;

  /// Parses a base file: one formula per line, '#' comments, blank lines
  /// ignored. ParseError carries the 1-based line.
  Base parse_base_text(std::string_view text) const;

  /// Index of a model name in the universe enumeration, or -1.
  int model_index(std::string_view name) const;

  /// The catalog's witness bases, in catalog order, as parsed bases. For a
  /// finite system these enumerate one base per representable model set.
  std::vector<Base> witness_bases() const;
};

std::vector<std::string> base_lines(const Base& base);

}  // namespace bcm
