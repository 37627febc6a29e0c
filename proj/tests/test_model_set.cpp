#include <doctest.h>

#include <algorithm>

#include "bcm/model_set.hpp"

using namespace bcm;

TEST_CASE("model set algebra") {
  ModelSet a = ModelSet::of(4, {0, 2});
  ModelSet b = ModelSet::of(4, {2, 3});
  CHECK(a.set_union(b) == ModelSet::of(4, {0, 2, 3}));
  CHECK(a.set_intersection(b) == ModelSet::of(4, {2}));
  CHECK(a.set_difference(b) == ModelSet::of(4, {0}));
  CHECK(a.complement() == ModelSet::of(4, {1, 3}));
  CHECK(ModelSet::of(4, {2}).subset_of(a));
  CHECK(ModelSet::of(4, {2}).proper_subset_of(a));
  CHECK_FALSE(a.proper_subset_of(a));
  CHECK(a.subset_of(a));
  CHECK(ModelSet::empty(4).is_empty());
  CHECK(ModelSet::full(4).is_full());
  CHECK(a.size() == 2);
  CHECK(a.members() == std::vector<std::size_t>{0, 2});
}

TEST_CASE("universe mismatch is rejected") {
  ModelSet a = ModelSet::of(4, {0});
  ModelSet b = ModelSet::of(3, {0});
  CHECK_THROWS_AS(a.set_union(b), UniverseMismatchError);
  CHECK_THROWS_AS((void)(a < b), UniverseMismatchError);
  CHECK_THROWS_AS(ModelSet::of(2, {5}), UniverseMismatchError);
  CHECK_THROWS_AS(ModelSet::empty(65), BoundError);
}

TEST_CASE("canonical order is lexicographic on the membership vector") {
  // Absent before present at the first differing index.
  CHECK(ModelSet::of(4, {1}) < ModelSet::of(4, {0}));
  CHECK(ModelSet::of(4, {3}) < ModelSet::of(4, {2}));
  CHECK(ModelSet::empty(4) < ModelSet::of(4, {3}));
  CHECK(ModelSet::of(4, {2, 3}) < ModelSet::of(4, {1, 3}));
  CHECK_FALSE(ModelSet::of(4, {1}) < ModelSet::of(4, {1}));

  std::vector<ModelSet> subsets = all_subsets(2);
  REQUIRE(subsets.size() == 4);
  CHECK(subsets[0] == ModelSet::empty(2));
  CHECK(subsets[1] == ModelSet::of(2, {1}));
  CHECK(subsets[2] == ModelSet::of(2, {0}));
  CHECK(subsets[3] == ModelSet::full(2));
  CHECK(std::is_sorted(subsets.begin(), subsets.end()));

  std::vector<ModelSet> larger = all_subsets(4);
  CHECK(larger.size() == 16);
  CHECK(std::is_sorted(larger.begin(), larger.end()));
}

TEST_CASE("rendering uses universe names") {
  std::vector<std::string> names{"ff", "ft", "tf", "tt"};
  CHECK(ModelSet::of(4, {1, 3}).render(names) == "{ft,tt}");
  CHECK(ModelSet::empty(4).render(names) == "{}");
}
