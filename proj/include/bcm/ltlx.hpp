#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcm/errors.hpp"

namespace bcm {

/// A formula of the NeXt fragment: the atom must hold at exactly `depth`
/// steps from the initial state on every path. Depth 0 is the atom itself.
struct XFormula {
  int depth = 0;
  std::string atom;

  friend bool operator==(const XFormula&, const XFormula&) = default;
  friend auto operator<=>(const XFormula&, const XFormula&) = default;
};

/// Accepts "p", "X p", "XXXp" and "X^3 p". Throws ParseError.
XFormula parse_xformula(std::string_view text);
std::string print_xformula(const XFormula& formula);

using XBase = std::vector<XFormula>;

/// A finite Kripke structure with a distinguished initial state. The
/// transition relation must be total: the path semantics of X^m needs a
/// depth-m state on every path.
struct PointedKripke {
  std::vector<std::string> states;
  std::vector<std::vector<int>> successors;       // per state, sorted
  std::vector<std::vector<std::string>> labels;   // per state, sorted atoms
  int initial = 0;

  /// Line format: `state <name>`, `init <name>`, `edge <from> <to>`,
  /// `label <state> <atom>[,<atom>...]`, '#' comments. Validates totality.
  static PointedKripke parse(std::string_view text);
  std::string render() const;

  bool state_labeled(int state, std::string_view atom) const;
  friend bool operator==(const PointedKripke&, const PointedKripke&) = default;
};

/// Satisfaction: `formula.atom` is labeled at every state reachable from the
/// initial state in exactly `formula.depth` steps.
bool sat_x(const PointedKripke& model, const XFormula& formula);

bool sat_x_base(const PointedKripke& model, const XBase& base);

/// The concrete reception operator: keeps exactly the base formulas that
/// every input model satisfies. Its result is a minimal representable
/// superset of the base's models joined with the input.
XBase rcp_x(const XBase& base, const std::vector<PointedKripke>& input);

/// A chain with self-loop that satisfies every base formula and falsifies
/// `excluded`. Precondition: excluded is not in the base.
PointedKripke chain_model(const XBase& base, const XFormula& excluded);

/// Single looping state labeled with every atom: satisfies every formula,
/// hence every base. This is the witness that the empty model set is not
/// representable, which is what makes eviction unavailable here.
PointedKripke universal_model(const std::vector<std::string>& atoms);

}  // namespace bcm
