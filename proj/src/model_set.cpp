#include "bcm/model_set.hpp"

#include <bit>

namespace bcm {

namespace {

std::uint64_t full_mask(std::size_t universe_size) {
  if (universe_size == kMaxUniverse) return ~std::uint64_t{0};
  return (std::uint64_t{1} << universe_size) - 1;
}

}  // namespace

ModelSet ModelSet::empty(std::size_t universe_size) {
  if (universe_size > kMaxUniverse)
    throw BoundError("universe of " + std::to_string(universe_size) +
                     " model classes exceeds the supported maximum of " +
                     std::to_string(kMaxUniverse));
  return ModelSet(0, universe_size);
}

ModelSet ModelSet::full(std::size_t universe_size) {
  ModelSet s = empty(universe_size);
  s.bits_ = full_mask(universe_size);
  return s;
}

ModelSet ModelSet::of(std::size_t universe_size, std::initializer_list<std::size_t> members) {
  ModelSet s = empty(universe_size);
  for (std::size_t m : members) s.insert(m);
  return s;
}

std::size_t ModelSet::size() const { return static_cast<std::size_t>(std::popcount(bits_)); }

bool ModelSet::is_full() const { return bits_ == full_mask(universe_size_); }

bool ModelSet::contains(std::size_t index) const {
  check_index(index);
  return (bits_ >> index) & 1;
}

void ModelSet::insert(std::size_t index) {
  check_index(index);
  bits_ |= std::uint64_t{1} << index;
}

void ModelSet::erase(std::size_t index) {
  check_index(index);
  bits_ &= ~(std::uint64_t{1} << index);
}

ModelSet ModelSet::set_union(const ModelSet& other) const {
  check_same_universe(other);
  return ModelSet(bits_ | other.bits_, universe_size_);
}

ModelSet ModelSet::set_intersection(const ModelSet& other) const {
  check_same_universe(other);
  return ModelSet(bits_ & other.bits_, universe_size_);
}

ModelSet ModelSet::set_difference(const ModelSet& other) const {
  check_same_universe(other);
  return ModelSet(bits_ & ~other.bits_, universe_size_);
}

ModelSet ModelSet::complement() const {
  return ModelSet(~bits_ & full_mask(universe_size_), universe_size_);
}

bool ModelSet::subset_of(const ModelSet& other) const {
  check_same_universe(other);
  return (bits_ & ~other.bits_) == 0;
}

bool ModelSet::proper_subset_of(const ModelSet& other) const {
  return subset_of(other) && bits_ != other.bits_;
}

std::vector<std::size_t> ModelSet::members() const {
  std::vector<std::size_t> result;
  for (std::size_t i = 0; i < universe_size_; ++i)
    if ((bits_ >> i) & 1) result.push_back(i);
  return result;
}

std::string ModelSet::render(const std::vector<std::string>& names) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i : members()) {
    if (!first) out += ",";
    first = false;
    out += i < names.size() ? names[i] : std::to_string(i);
  }
  out += "}";
  return out;
}

bool operator<(const ModelSet& a, const ModelSet& b) {
  a.check_same_universe(b);
  std::uint64_t diff = a.bits_ ^ b.bits_;
  if (diff == 0) return false;
  int first = std::countr_zero(diff);
  // Absent before present at the first differing index.
  return ((a.bits_ >> first) & 1) == 0;
}

void ModelSet::check_same_universe(const ModelSet& other) const {
  if (universe_size_ != other.universe_size_)
    throw UniverseMismatchError("model sets range over different universes (" +
                                std::to_string(universe_size_) + " vs " +
                                std::to_string(other.universe_size_) + ")");
}

void ModelSet::check_index(std::size_t index) const {
  if (index >= universe_size_)
    throw UniverseMismatchError("model index " + std::to_string(index) +
                                " out of range for universe of size " +
                                std::to_string(universe_size_));
}

std::vector<ModelSet> all_subsets(std::size_t universe_size) {
  if (universe_size > 16)
    throw BoundError("enumerating all subsets of a universe with " +
                     std::to_string(universe_size) + " models exceeds the bound of 16");
  std::vector<ModelSet> result;
  result.reserve(std::size_t{1} << universe_size);
  // Generated in canonical order: lexicographic on the membership vector.
  // Bit i of the counter drives membership of model (universe_size-1-i).
  const std::uint64_t count = std::uint64_t{1} << universe_size;
  for (std::uint64_t code = 0; code < count; ++code) {
    ModelSet s = ModelSet::empty(universe_size);
    for (std::size_t i = 0; i < universe_size; ++i)
      if ((code >> i) & 1) s.insert(universe_size - 1 - i);
    result.push_back(s);
  }
  return result;
}

}  // namespace bcm
