#pragma once

#include <string>
#include <vector>

#include "bcm/model_set.hpp"

namespace bcm {

/// One finitely representable model set together with a witness finite base
/// (formulas in the owning logic's concrete syntax, one per element).
struct CatalogEntry {
  ModelSet models;
  std::vector<std::string> witness;
};

/// The finite family of all finitely representable model sets of a
/// satisfaction system, each paired with one witness base. Entries are kept
/// sorted in the canonical model-set order; the first witness registered for
/// a set wins.
class Catalog {
public:
  explicit Catalog(std::size_t universe_size);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const { return entries_.size(); }

  /// Inserts an entry; keeps the existing witness if the set is known.
  /// Returns true when the set was new.
  bool add(const ModelSet& models, std::vector<std::string> witness);

  bool contains(const ModelSet& models) const;
  const CatalogEntry* find(const ModelSet& models) const;

  const std::vector<CatalogEntry>& entries() const { return entries_; }

  /// True when the family is closed under pairwise intersection.
  bool intersection_closed() const;

  /// Adds every pairwise intersection, transitively, composing witnesses by
  /// joining the parents' bases (joint satisfaction of conjunctive bases).
  void close_under_intersection();

private:
  std::size_t lower_bound_index(const ModelSet& models) const;

  std::size_t universe_size_;
  std::vector<CatalogEntry> entries_;
};

}  // namespace bcm
