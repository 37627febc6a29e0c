#include "bcm/catalog.hpp"

#include <algorithm>
#include <map>

namespace bcm {

Catalog::Catalog(std::size_t universe_size) : universe_size_(universe_size) {
  if (universe_size > kMaxUniverse)
    throw BoundError("catalog universe too large: " + std::to_string(universe_size));
}

std::size_t Catalog::lower_bound_index(const ModelSet& models) const {
  std::size_t lo = 0, hi = entries_.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (entries_[mid].models < models)
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

bool Catalog::add(const ModelSet& models, std::vector<std::string> witness) {
  if (models.universe_size() != universe_size_)
    throw UniverseMismatchError("catalog entry over a different universe");
  std::size_t at = lower_bound_index(models);
  if (at < entries_.size() && entries_[at].models == models) return false;
  entries_.insert(entries_.begin() + static_cast<std::ptrdiff_t>(at),
                  CatalogEntry{models, std::move(witness)});
  return true;
}

bool Catalog::contains(const ModelSet& models) const { return find(models) != nullptr; }

const CatalogEntry* Catalog::find(const ModelSet& models) const {
  if (models.universe_size() != universe_size_)
    throw UniverseMismatchError("catalog lookup over a different universe");
  std::size_t at = lower_bound_index(models);
  if (at < entries_.size() && entries_[at].models == models) return &entries_[at];
  return nullptr;
}

bool Catalog::intersection_closed() const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    for (std::size_t j = i + 1; j < entries_.size(); ++j)
      if (!contains(entries_[i].models.set_intersection(entries_[j].models))) return false;
  return true;
}

void Catalog::close_under_intersection() {
  std::vector<CatalogEntry> list = entries_;
  std::map<std::uint64_t, std::size_t> seen;
  for (std::size_t i = 0; i < list.size(); ++i) seen.emplace(list[i].models.bits(), i);
  for (std::size_t i = 1; i < list.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ModelSet meet = list[i].models.set_intersection(list[j].models);
      if (seen.count(meet.bits())) continue;
      std::vector<std::string> witness = list[j].witness;
      for (const std::string& formula : list[i].witness)
        if (std::find(witness.begin(), witness.end(), formula) == witness.end())
          witness.push_back(formula);
      seen.emplace(meet.bits(), list.size());
      list.push_back(CatalogEntry{meet, std::move(witness)});
    }
  }
  for (std::size_t i = entries_.size(); i < list.size(); ++i)
    add(list[i].models, std::move(list[i].witness));
}

}  // namespace bcm
