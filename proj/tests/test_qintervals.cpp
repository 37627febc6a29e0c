#include <doctest.h>

#include <random>

#include "bcm/qintervals.hpp"

using namespace bcm;

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("2") == 2);
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational(" 6/8 ") == Rational(3, 4));
  CHECK(rational_text(Rational(3, 4)) == "3/4");
  CHECK(rational_text(Rational(2)) == "2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("target parsing and normalization") {
  IntervalTarget t = parse_interval_target("[0,1] u (2,3] \\ {5/2}");
  CHECK(t.render() == "[0,1] u (2,5/2) u (5/2,3]");

  CHECK(parse_interval_target("[0,1] u [1,2]").render() == "[0,2]");
  CHECK(parse_interval_target("(0,1) u (1,2)").render() == "(0,1) u (1,2)");
  CHECK(parse_interval_target("(0,1) u [1,2]").render() == "(0,2]");
  CHECK(parse_interval_target("{1}").render() == "{1}");
  CHECK(parse_interval_target("[0,1] \\ [0,1]").is_empty());
  CHECK(parse_interval_target("[0,1] \\ {0}").render() == "(0,1]");
  CHECK(parse_interval_target("[0,1] \\ {1/2}").render() == "[0,1/2) u (1/2,1]");
  CHECK_THROWS_AS(parse_interval_target("[2,1]"), ParseError);
  CHECK_THROWS_AS(parse_interval_target("[1,2) extra"), ParseError);
}

TEST_CASE("membership and subset") {
  IntervalTarget t = parse_interval_target("(0,1]");
  CHECK(t.contains(Rational(1, 2)));
  CHECK(t.contains(1));
  CHECK_FALSE(t.contains(0));
  CHECK(t.subset_of(parse_interval_target("[0,1]")));
  CHECK_FALSE(parse_interval_target("[0,1]").subset_of(t));
}

TEST_CASE("models of a base") {
  CHECK(models_of_q({{0, 1}, {Rational(1, 2), 2}}).render() == "[1/2,1]");
  CHECK(models_of_q({{0, 1}, {2, 3}}).is_empty());
  CHECK(models_of_q({}).is_whole_line());
}

TEST_CASE("representability") {
  CHECK(representable_q(parse_interval_target("[0,1]")) == QBase{{0, 1}});
  CHECK_FALSE(representable_q(parse_interval_target("[0,1] \\ {1}")).has_value());
  CHECK_FALSE(representable_q(parse_interval_target("[0,1] u [2,3]")).has_value());
  auto empty = representable_q(IntervalTarget{});
  REQUIRE(empty.has_value());
  CHECK(models_of_q(*empty).is_empty());
  CHECK(representable_q(IntervalTarget::whole_line()) == QBase{});
}

TEST_CASE("subset improvement marches toward the open end") {
  IntervalTarget target = parse_interval_target("[0,1] \\ {1}");  // [0,1)
  CHECK(improve_subset({0, Rational(1, 2)}, target) == RatInterval{0, Rational(3, 4)});

  RatInterval candidate{0, 0};
  Rational previous_hi = 0;
  for (int step = 1; step <= 10; ++step) {
    candidate = improve_subset(candidate, target);
    CHECK(candidate.lo == 0);
    CHECK(candidate.hi > previous_hi);
    CHECK(candidate.hi < 1);
    // Midpoint steps: hi after k steps is 1 - 1/2^k exactly.
    Rational expected = Rational(1) - Rational(1, 1 << step);
    CHECK(candidate.hi == expected);
    previous_hi = candidate.hi;
  }

  CHECK_THROWS_AS(improve_subset({0, 1}, parse_interval_target("[0,1]")), PreconditionError);
  CHECK_THROWS_AS(improve_subset({5, 6}, target), PreconditionError);
}

TEST_CASE("superset improvement shrinks toward the open end") {
  IntervalTarget target = parse_interval_target("(0,1]");
  CHECK(improve_superset({-1, 1}, target) == RatInterval{Rational(-1, 2), 1});

  RatInterval candidate{-1, 1};
  Rational previous_lo = -1;
  for (int step = 1; step <= 10; ++step) {
    candidate = improve_superset(candidate, target);
    CHECK(candidate.hi == 1);
    CHECK(candidate.lo > previous_lo);
    CHECK(candidate.lo < 0);
    Rational expected = Rational(-1, 1 << step);
    CHECK(candidate.lo == expected);
    previous_lo = candidate.lo;
  }

  CHECK_THROWS_AS(improve_superset({0, 1}, parse_interval_target("[0,1]")), PreconditionError);
}

TEST_CASE("randomized improvement invariants") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  std::uniform_int_distribution<int> coin(0, 1);
  int exercised = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    if (a > b) std::swap(a, b);
    if (a == b) b = a + 1;
    bool open_left = coin(rng) == 1;
    // Half-open target with one open side.
    IntervalTarget target = IntervalTarget::component(
        QEndpoint{false, a, !open_left ? true : false},
        QEndpoint{false, b, open_left ? true : false});
    REQUIRE_FALSE(representable_q(target).has_value());

    Rational mid = (a + b) / 2;
    RatInterval inside{open_left ? mid : a, open_left ? b : mid};
    RatInterval grown = improve_subset(inside, target);
    CHECK(IntervalTarget::closed(grown.lo, grown.hi).subset_of(target));
    CHECK((grown.hi - grown.lo) > (inside.hi - inside.lo));

    RatInterval outside{a - 1, b + 1};
    RatInterval shrunk = improve_superset(outside, target);
    CHECK(target.subset_of(IntervalTarget::closed(shrunk.lo, shrunk.hi)));
    CHECK((shrunk.hi - shrunk.lo) < (outside.hi - outside.lo));
    ++exercised;
  }
  CHECK(exercised == 1000);
}

TEST_CASE("eviction with exact and incompatible targets") {
  // Exact: the remainder is a closed interval.
  QChangeReport exact = evict_q({{0, 2}}, parse_interval_target("(1,3]"));
  CHECK(exact.result_base == QBase{{0, 1}});

  // Vacuous: the input does not meet the base's models.
  QChangeReport vacuous = evict_q({{0, 2}}, parse_interval_target("[5,6]"));
  CHECK(vacuous.result_base == QBase{{0, 2}});

  // The half-open remainder has no maximal closed subinterval.
  CHECK_THROWS_AS(evict_q({{0, 1}}, parse_interval_target("{1}")), IncompatibleError);
  try {
    evict_q({{0, 1}}, parse_interval_target("{1}"));
  } catch (const IncompatibleError& e) {
    CHECK(std::string(e.witness()).find(" c ") != std::string::npos);
  }

  // Multi-component remainders pick the first closed component.
  QChangeReport split = evict_q({{0, 10}}, parse_interval_target("(2,3)"));
  CHECK(split.result_base == QBase{{0, 2}});
}

TEST_CASE("reception with exact, hull and incompatible targets") {
  QChangeReport exact = receive_q({{0, 1}}, parse_interval_target("[1,2]"));
  CHECK(exact.result_base == QBase{{0, 2}});

  QChangeReport vacuous = receive_q({{0, 1}}, parse_interval_target("{1}"));
  CHECK(vacuous.result_base == QBase{{0, 1}});

  // Disjoint closed pieces: the closed hull is the unique minimal superset.
  QChangeReport hull = receive_q({{0, 1}}, parse_interval_target("[2,3]"));
  CHECK(hull.result_base == QBase{{0, 3}});

  // The half-open union never reaches a minimal closed superset.
  CHECK_THROWS_AS(receive_q({{Rational(1, 2), 1}}, parse_interval_target("(0,1]")),
                  IncompatibleError);

  // From the inconsistent base, reception of a representable set is exact.
  QChangeReport from_bottom = receive_q({{0, 0}, {1, 1}}, parse_interval_target("[2,3]"));
  CHECK(from_bottom.result_base == QBase{{2, 3}});
}
