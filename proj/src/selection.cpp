#include "bcm/selection.hpp"

#include <algorithm>

namespace bcm {

ModelSet SelectionPolicy::choose(const std::vector<ModelSet>& family) const {
  if (family.empty())
    throw PreconditionError("selection over an empty candidate family");
  switch (mode_) {
    case Mode::lex_min:
      return *std::min_element(family.begin(), family.end());
    case Mode::lex_max:
      return *std::max_element(family.begin(), family.end());
    case Mode::ranked: {
      const ModelSet* best = nullptr;
      std::size_t best_rank = preference_.size();
      for (const ModelSet& candidate : family) {
        auto it = std::find(preference_.begin(), preference_.end(), candidate);
        std::size_t rank = static_cast<std::size_t>(it - preference_.begin());
        if (best == nullptr || rank < best_rank ||
            (rank == best_rank && candidate < *best)) {
          best = &candidate;
          best_rank = rank;
        }
      }
      return *best;
    }
  }
  throw PreconditionError("unknown selection mode");
}

std::string SelectionPolicy::describe() const {
  switch (mode_) {
    case Mode::lex_min: return "lex-min";
    case Mode::lex_max: return "lex-max";
    case Mode::ranked: return "ranked";
  }
  return "?";
}

}  // namespace bcm
