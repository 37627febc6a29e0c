#include <doctest.h>

#include <random>
#include <set>

#include "bcm/ltlx.hpp"

using namespace bcm;

namespace {

PointedKripke single_loop(const std::vector<std::string>& labels) {
  PointedKripke model;
  model.states = {"s"};
  model.successors = {{0}};
  model.labels = {labels};
  model.initial = 0;
  return model;
}

XBase random_base(std::mt19937& rng) {
  static const std::vector<std::string> atoms{"p", "q", "r"};
  std::uniform_int_distribution<int> count(0, 5);
  std::uniform_int_distribution<int> depth(0, 6);
  std::uniform_int_distribution<std::size_t> atom(0, atoms.size() - 1);
  std::set<XFormula> chosen;
  int want = count(rng);
  for (int i = 0; i < want; ++i) chosen.insert(XFormula{depth(rng), atoms[atom(rng)]});
  return XBase(chosen.begin(), chosen.end());
}

XFormula fresh_formula(std::mt19937& rng, const XBase& base) {
  static const std::vector<std::string> atoms{"p", "q", "r"};
  std::uniform_int_distribution<int> depth(0, 6);
  std::uniform_int_distribution<std::size_t> atom(0, atoms.size() - 1);
  while (true) {
    XFormula candidate{depth(rng), atoms[atom(rng)]};
    if (std::find(base.begin(), base.end(), candidate) == base.end()) return candidate;
  }
}

PointedKripke random_model(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(1, 5);
  std::uniform_int_distribution<int> label_roll(0, 2);
  static const std::vector<std::string> atoms{"p", "q", "r"};
  PointedKripke model;
  int n = size(rng);
  for (int s = 0; s < n; ++s) model.states.push_back("s" + std::to_string(s));
  model.successors.assign(static_cast<std::size_t>(n), {});
  model.labels.assign(static_cast<std::size_t>(n), {});
  std::uniform_int_distribution<int> target(0, n - 1);
  for (int s = 0; s < n; ++s) {
    int edges = 1 + label_roll(rng) % 2;
    std::set<int> next;
    for (int e = 0; e < edges; ++e) next.insert(target(rng));
    model.successors[static_cast<std::size_t>(s)] =
        std::vector<int>(next.begin(), next.end());
    for (const std::string& atom : atoms)
      if (label_roll(rng) == 0) model.labels[static_cast<std::size_t>(s)].push_back(atom);
  }
  model.initial = target(rng);
  return model;
}

}  // namespace

TEST_CASE("formula parsing") {
  CHECK(parse_xformula("p") == XFormula{0, "p"});
  CHECK(parse_xformula("X p") == XFormula{1, "p"});
  CHECK(parse_xformula("XXXp") == XFormula{3, "p"});
  CHECK(parse_xformula("X^3 p") == XFormula{3, "p"});
  CHECK(parse_xformula("X^2 Xq") == XFormula{3, "q"});
  CHECK(print_xformula(XFormula{0, "p"}) == "p");
  CHECK(print_xformula(XFormula{1, "p"}) == "X p");
  CHECK(print_xformula(XFormula{4, "ab"}) == "X^4 ab");
  CHECK_THROWS_AS(parse_xformula("X^"), ParseError);
  CHECK_THROWS_AS(parse_xformula("X"), ParseError);
  CHECK_THROWS_AS(parse_xformula("p q"), ParseError);
}

TEST_CASE("model files") {
  const char* text =
      "# two states\n"
      "state s0\n"
      "state s1\n"
      "init s0\n"
      "edge s0 s1\n"
      "edge s1 s1\n"
      "label s0 p,q\n";
  PointedKripke model = PointedKripke::parse(text);
  CHECK(model.states.size() == 2);
  CHECK(model.initial == 0);
  CHECK(model.state_labeled(0, "p"));
  CHECK_FALSE(model.state_labeled(1, "p"));

  PointedKripke reparsed = PointedKripke::parse(model.render());
  CHECK(reparsed == model);

  CHECK_THROWS_AS(PointedKripke::parse("state s0\ninit s0\n"), ParseError);  // not total
  CHECK_THROWS_AS(PointedKripke::parse("state s0\nedge s0 s0\n"), ParseError);  // no init
  CHECK_THROWS_AS(PointedKripke::parse("state s0\ninit s1\nedge s0 s0\n"), ParseError);
}

TEST_CASE("satisfaction walks exact depths over all paths") {
  PointedKripke loop = single_loop({"p"});
  for (int k = 0; k <= 20; ++k) CHECK(sat_x(loop, XFormula{k, "p"}));
  CHECK_FALSE(sat_x(loop, XFormula{0, "q"}));

  PointedKripke chain = PointedKripke::parse(
      "state s0\nstate s1\ninit s0\nedge s0 s1\nedge s1 s1\nlabel s0 p\n");
  CHECK(sat_x(chain, XFormula{0, "p"}));
  CHECK_FALSE(sat_x(chain, XFormula{1, "p"}));

  PointedKripke branching = PointedKripke::parse(
      "state s0\nstate s1\nstate s2\ninit s0\n"
      "edge s0 s1\nedge s0 s2\nedge s1 s1\nedge s2 s2\nlabel s1 p\n");
  CHECK_FALSE(sat_x(branching, XFormula{1, "p"}));  // all paths must agree
}

TEST_CASE("reception keeps exactly the formulas the input satisfies") {
  XBase base{XFormula{0, "p"}, XFormula{1, "p"}};
  PointedKripke depth_zero_only = chain_model({XFormula{0, "p"}}, XFormula{1, "p"});
  XBase result = rcp_x(base, {depth_zero_only});
  CHECK(result == XBase{XFormula{0, "p"}});

  // Vacuity: input models that satisfy the base change nothing.
  XBase unchanged = rcp_x(base, {single_loop({"p"})});
  CHECK(unchanged == base);

  CHECK(rcp_x({}, {single_loop({})}).empty());
}

TEST_CASE("chain models separate a base from an outside formula") {
  XBase base{XFormula{0, "p"}, XFormula{2, "q"}};
  PointedKripke chain = chain_model(base, XFormula{1, "p"});
  CHECK(chain.states.size() == 3);
  CHECK(sat_x_base(chain, base));
  CHECK_FALSE(sat_x(chain, XFormula{1, "p"}));

  PointedKripke trivial = chain_model({}, XFormula{0, "p"});
  CHECK(trivial.states.size() == 1);
  CHECK_FALSE(sat_x(trivial, XFormula{0, "p"}));

  PointedKripke shifted = chain_model({XFormula{1, "q"}}, XFormula{2, "q"});
  CHECK(shifted.labels[1] == std::vector<std::string>{"q"});
  CHECK_FALSE(sat_x(shifted, XFormula{2, "q"}));

  CHECK_THROWS_AS(chain_model(base, XFormula{0, "p"}), PreconditionError);
}

TEST_CASE("the universal model satisfies everything") {
  PointedKripke universal = universal_model({"p", "q"});
  for (int k = 0; k <= 20; ++k) {
    CHECK(sat_x(universal, XFormula{k, "p"}));
    CHECK(sat_x(universal, XFormula{k, "q"}));
  }
  CHECK(sat_x_base(universal, {}));
}

TEST_CASE("randomized: chain separation, universal satisfaction, reception postulates") {
  std::mt19937 rng(20230301);
  PointedKripke universal = universal_model({"p", "q", "r"});
  for (int trial = 0; trial < 1000; ++trial) {
    XBase base = random_base(rng);
    XFormula outside = fresh_formula(rng, base);
    PointedKripke chain = chain_model(base, outside);
    CHECK(sat_x_base(chain, base));
    CHECK_FALSE(sat_x(chain, outside));

    CHECK(sat_x_base(universal, base));

    std::vector<PointedKripke> input;
    std::uniform_int_distribution<int> models(1, 3);
    int count = models(rng);
    for (int m = 0; m < count; ++m) input.push_back(random_model(rng));
    XBase result = rcp_x(base, input);

    // Success: every input model satisfies the result.
    for (const PointedKripke& model : input) CHECK(sat_x_base(model, result));
    // Persistence via theory inclusion: the result is part of the base.
    for (const XFormula& formula : result)
      CHECK(std::find(base.begin(), base.end(), formula) != base.end());
    // Vacuity: when every input model satisfies the base, nothing is lost.
    bool all_satisfy = true;
    for (const PointedKripke& model : input)
      if (!sat_x_base(model, base)) all_satisfy = false;
    if (all_satisfy) CHECK(result == base);
    // Dropped formulas are each refuted by some input model.
    for (const XFormula& formula : base) {
      if (std::find(result.begin(), result.end(), formula) != result.end()) continue;
      bool refuted = false;
      for (const PointedKripke& model : input)
        if (!sat_x(model, formula)) refuted = true;
      CHECK(refuted);
    }
  }
}
