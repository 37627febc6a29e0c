#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "bcm/errors.hpp"

namespace bcm {

/// Largest universe an extensional model set can range over.
inline constexpr std::size_t kMaxUniverse = 64;

/// An extensional set of model-class indices over a finite enumerated
/// universe. Indices refer to a satisfaction system's universe enumeration.
///
/// Sets over the same universe carry a canonical total order: lexicographic
/// on the membership vector (index 0 first, absent < present). The order is
/// what makes selection policies and reports deterministic across runs.
class ModelSet {
public:
  ModelSet() = default;

  static ModelSet empty(std::size_t universe_size);
  static ModelSet full(std::size_t universe_size);
  static ModelSet of(std::size_t universe_size, std::initializer_list<std::size_t> members);

  std::size_t universe_size() const { return universe_size_; }
  std::size_t size() const;
  bool is_empty() const { return bits_ == 0; }
  bool is_full() const;

  bool contains(std::size_t index) const;
  void insert(std::size_t index);
  void erase(std::size_t index);

  ModelSet set_union(const ModelSet& other) const;
  ModelSet set_intersection(const ModelSet& other) const;
  ModelSet set_difference(const ModelSet& other) const;
  ModelSet complement() const;

  bool subset_of(const ModelSet& other) const;
  bool proper_subset_of(const ModelSet& other) const;

  std::vector<std::size_t> members() const;
  std::uint64_t bits() const { return bits_; }

  /// Renders "{name,name,...}" using the universe's model names.
  std::string render(const std::vector<std::string>& names) const;

  friend bool operator==(const ModelSet& a, const ModelSet& b) {
    return a.universe_size_ == b.universe_size_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const ModelSet& a, const ModelSet& b) { return !(a == b); }

  /// Canonical order; both sets must range over the same universe.
  friend bool operator<(const ModelSet& a, const ModelSet& b);

private:
  ModelSet(std::uint64_t bits, std::size_t universe_size)
      : bits_(bits), universe_size_(static_cast<std::uint32_t>(universe_size)) {}

  void check_same_universe(const ModelSet& other) const;
  void check_index(std::size_t index) const;

  std::uint64_t bits_ = 0;
  std::uint32_t universe_size_ = 0;
};

/// Every subset of a universe of the given size, in canonical order.
/// Throws BoundError beyond 16 models (65536 subsets).
std::vector<ModelSet> all_subsets(std::size_t universe_size);

}  // namespace bcm
