#pragma once

#include <string>
#include <vector>

#include "bcm/model_set.hpp"

namespace bcm {

/// A deterministic selection function over nonempty candidate families.
/// Determinism is what makes the induced change operators satisfy
/// uniformity: the choice depends on the candidate family alone.
class SelectionPolicy {
public:
  enum class Mode { lex_min, lex_max, ranked };

  static SelectionPolicy lex_min() { return SelectionPolicy(Mode::lex_min, {}); }
  static SelectionPolicy lex_max() { return SelectionPolicy(Mode::lex_max, {}); }

  /// Prefers candidates earlier in `preference`; candidates absent from the
  /// ranking lose to ranked ones and fall back to lex-min among themselves.
  static SelectionPolicy ranked(std::vector<ModelSet> preference) {
    return SelectionPolicy(Mode::ranked, std::move(preference));
  }

  /// Picks one element of a nonempty family. Throws PreconditionError on an
  /// empty family.
  ModelSet choose(const std::vector<ModelSet>& family) const;

  Mode mode() const { return mode_; }
  std::string describe() const;

private:
  SelectionPolicy(Mode mode, std::vector<ModelSet> preference)
      : mode_(mode), preference_(std::move(preference)) {}

  Mode mode_;
  std::vector<ModelSet> preference_;
};

}  // namespace bcm
