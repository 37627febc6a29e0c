#include <doctest.h>

#include <algorithm>
#include <random>

#include "bcm/goedel.hpp"
#include "bcm/poset.hpp"

using namespace bcm;

namespace {

// Ordered Bell numbers via Stirling partition counts: the count of weak
// orders on k elements, the independent bound for class enumeration.
std::size_t ordered_bell(std::size_t k) {
  // S(n, i) by recurrence, then sum i! * S(k, i).
  std::vector<std::vector<std::size_t>> stirling(k + 1, std::vector<std::size_t>(k + 1, 0));
  stirling[0][0] = 1;
  for (std::size_t n = 1; n <= k; ++n)
    for (std::size_t i = 1; i <= n; ++i)
      stirling[n][i] = i * stirling[n - 1][i] + stirling[n - 1][i - 1];
  std::size_t factorial = 1, total = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    factorial *= i;
    total += factorial * stirling[k][i];
  }
  return total;
}

// Numeric Gödel evaluation over values scaled to integers in [0, kScale].
constexpr long kScale = 3600;

long numeric_eval(const PropAst& formula, const std::vector<long>& atom_values) {
  switch (formula->kind) {
    case PropConnective::Atom: return atom_values[static_cast<std::size_t>(formula->atom)];
    case PropConnective::Top: return kScale;
    case PropConnective::Bottom: return 0;
    case PropConnective::Not:
      return numeric_eval(formula->lhs, atom_values) == 0 ? kScale : 0;
    case PropConnective::And:
      return std::min(numeric_eval(formula->lhs, atom_values),
                      numeric_eval(formula->rhs, atom_values));
    case PropConnective::Or:
      return std::max(numeric_eval(formula->lhs, atom_values),
                      numeric_eval(formula->rhs, atom_values));
    case PropConnective::Implies: {
      long lhs = numeric_eval(formula->lhs, atom_values);
      long rhs = numeric_eval(formula->rhs, atom_values);
      return lhs <= rhs ? kScale : rhs;
    }
  }
  return 0;
}

// The class induced by a numeric valuation: blocks of equal values from
// lowest to highest over atoms plus the threshold marker.
PreorderClass induced_class(const std::vector<long>& atom_values, long theta) {
  std::vector<long> values = atom_values;
  values.push_back(theta);
  std::vector<long> levels = values;
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  PreorderClass cls;
  cls.blocks.assign(levels.size(), {});
  for (std::size_t m = 0; m < values.size(); ++m) {
    std::size_t level = static_cast<std::size_t>(
        std::lower_bound(levels.begin(), levels.end(), values[m]) - levels.begin());
    cls.blocks[level].push_back(static_cast<int>(m));
  }
  cls.zero_lowest = levels.front() == 0;
  return cls;
}

std::size_t class_index(const GoedelSystem& system, const PreorderClass& cls) {
  for (std::size_t i = 0; i < system.classes().size(); ++i)
    if (system.classes()[i].blocks == cls.blocks &&
        system.classes()[i].zero_lowest == cls.zero_lowest)
      return i;
  return static_cast<std::size_t>(-1);
}

PropAst random_formula(std::mt19937& rng, std::size_t atoms, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 4);
  switch (pick(rng)) {
    case 1: return make_not(random_formula(rng, atoms, depth - 1));
    case 2:
      return make_binary(PropConnective::And, random_formula(rng, atoms, depth - 1),
                         random_formula(rng, atoms, depth - 1));
    case 3:
      return make_binary(PropConnective::Or, random_formula(rng, atoms, depth - 1),
                         random_formula(rng, atoms, depth - 1));
    case 4:
      return make_binary(PropConnective::Implies, random_formula(rng, atoms, depth - 1),
                         random_formula(rng, atoms, depth - 1));
    default: {
      std::uniform_int_distribution<int> atom(0, static_cast<int>(atoms) - 1);
      return make_atom(atom(rng));
    }
  }
}

}  // namespace

TEST_CASE("class enumeration matches the weak-order count") {
  std::vector<PreorderClass> one = enumerate_classes(1, false);
  std::size_t unflagged = static_cast<std::size_t>(
      std::count_if(one.begin(), one.end(), [](const PreorderClass& c) { return !c.zero_lowest; }));
  CHECK(unflagged == ordered_bell(2));  // 3 weak orders on {a, s}
  CHECK(one.size() == 4);               // one zero-flag split

  std::vector<PreorderClass> two = enumerate_classes(2, false);
  std::size_t two_unflagged = static_cast<std::size_t>(
      std::count_if(two.begin(), two.end(), [](const PreorderClass& c) { return !c.zero_lowest; }));
  CHECK(two_unflagged == ordered_bell(3));  // 13 weak orders on {a, b, s}

  for (const PreorderClass& cls : two) {
    if (!cls.zero_lowest) continue;
    // The marker never sits in a flagged lowest block: theta > 0.
    CHECK(std::find(cls.blocks[0].begin(), cls.blocks[0].end(), 2) == cls.blocks[0].end());
  }

  CHECK_THROWS_AS(enumerate_classes(0, false), PreconditionError);
}

TEST_CASE("a threshold of one removes classes above the marker") {
  std::vector<PreorderClass> strict = enumerate_classes(1, true);
  CHECK(strict.size() == 3);
  for (const PreorderClass& cls : strict) {
    int marker_block = cls.block_of(1);
    CHECK(marker_block == static_cast<int>(cls.blocks.size()) - 1);
  }
}

TEST_CASE("symbolic evaluation") {
  GoedelSystem system(parse_signature("a"), 1, 2);
  const Signature& sig = system.signature();
  PropAst nn = parse_prop("!(!a & a)", sig);
  PropAst na = parse_prop("!a", sig);
  for (const PreorderClass& cls : system.classes()) {
    CHECK(eval_goedel(cls, nn, 1) == one_code(cls));
    if (cls.zero_lowest && cls.block_of(0) == 0)
      CHECK(eval_goedel(cls, na, 1) == one_code(cls));
  }
}

TEST_CASE("satisfaction against the threshold") {
  GoedelSystem system(parse_signature("a"), 1, 2);
  PropAst contradiction = parse_prop("!a & a", system.signature());
  PropAst atom = parse_prop("a", system.signature());
  for (std::size_t c = 0; c < system.classes().size(); ++c) {
    const PreorderClass& cls = system.classes()[c];
    CHECK(satisfies_goedel(cls, {}, 1));
    CHECK_FALSE(satisfies_goedel(cls, {contradiction}, 1));
    if (cls.block_of(0) > cls.block_of(1))
      CHECK(satisfies_goedel(cls, {atom}, 1));
  }
}

TEST_CASE("catalog contains the empty set and the universe") {
  GoedelSystem system(parse_signature("a"), 1, 2);
  const std::size_t universe = system.universe_size();
  REQUIRE(system.catalog().contains(ModelSet::empty(universe)));
  REQUIRE(system.catalog().contains(ModelSet::full(universe)));
  CHECK(system.catalog().find(ModelSet::full(universe))->witness.empty());

  const CatalogEntry* bottom = system.catalog().find(ModelSet::empty(universe));
  Base witness;
  for (const std::string& line : bottom->witness) witness.push_back(system.parse_formula(line));
  CHECK(system.models_of(witness) == ModelSet::empty(universe));

  CompatVerdict verdict = compat_finite(system.catalog());
  CHECK(verdict.eviction);
  CHECK(verdict.reception);
  CHECK(system.catalog().intersection_closed());
}

TEST_CASE("class abstraction is sound against numeric evaluation") {
  std::mt19937 rng(424242);
  for (auto [num, den] : {std::pair<long, long>{3, 10}, std::pair<long, long>{1, 1}}) {
    GoedelSystem system(parse_signature("a,b"), num, den);
    const long theta_scaled = kScale * num / den;
    std::uniform_int_distribution<long> value(0, kScale);
    for (int trial = 0; trial < 300; ++trial) {
      std::vector<long> atoms{value(rng), value(rng)};
      PreorderClass cls = induced_class(atoms, theta_scaled);
      std::size_t index = class_index(system, cls);
      REQUIRE(index != static_cast<std::size_t>(-1));
      for (int f = 0; f < 30; ++f) {
        PropAst formula = random_formula(rng, 2, 4);
        bool numeric = numeric_eval(formula, atoms) >= theta_scaled;
        bool symbolic = satisfies_goedel(system.classes()[index], {formula}, 2);
        CHECK(numeric == symbolic);
      }
    }
  }
}

TEST_CASE("one-atom catalog agrees with numeric sampling") {
  GoedelSystem system(parse_signature("a"), 1, 2);
  const long theta = kScale / 2;
  std::mt19937 rng(31337);
  std::uniform_int_distribution<long> value(0, kScale);
  for (const CatalogEntry& entry : system.catalog().entries()) {
    std::vector<PropAst> witness;
    for (const std::string& line : entry.witness)
      witness.push_back(parse_prop(line, system.signature()));
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<long> atoms{value(rng)};
      PreorderClass cls = induced_class(atoms, theta);
      std::size_t index = class_index(system, cls);
      REQUIRE(index != static_cast<std::size_t>(-1));
      bool numeric = true;
      for (const PropAst& formula : witness)
        numeric = numeric && numeric_eval(formula, atoms) >= theta;
      CHECK(numeric == entry.models.contains(index));
    }
  }
}

TEST_CASE("double negation collapses to the extremes") {
  GoedelSystem system(parse_signature("a,b"), 1, 2);
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    PropAst formula = make_not(make_not(random_formula(rng, 2, 4)));
    for (const PreorderClass& cls : system.classes()) {
      SymCode value = eval_goedel(cls, formula, 2);
      CHECK((value == 0 || value == one_code(cls)));
    }
  }
}

TEST_CASE("the excluded-middle guard strengthens satisfaction") {
  GoedelSystem system(parse_signature("a"), 1, 2);
  // The class with 0 < a < theta: satisfied by the empty base in the plain
  // reading, rejected once the (!a | a) conjunct is required.
  for (const PreorderClass& cls : system.classes()) {
    bool small_positive = cls.block_of(0) == 0 && !cls.zero_lowest &&
                          cls.block_of(1) > cls.block_of(0);
    if (!small_positive) continue;
    CHECK(satisfies_goedel(cls, {}, 1, false));
    CHECK_FALSE(satisfies_goedel(cls, {}, 1, true));
  }
}

TEST_CASE("bounds and validation") {
  CHECK_THROWS_AS(GoedelSystem(parse_signature("a,b,c"), 1, 2), BoundError);
  CHECK_THROWS_AS(GoedelSystem(parse_signature("a"), 0, 1), PreconditionError);
  CHECK_THROWS_AS(GoedelSystem(parse_signature("a"), 3, 2), PreconditionError);
}
