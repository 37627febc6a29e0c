#include "bcm/ltlx.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bcm {

XFormula parse_xformula(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  XFormula formula;
  while (pos < text.size() && text[pos] == 'X') {
    ++pos;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected a depth after 'X^'", static_cast<int>(pos) + 1);
      int depth = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        depth = depth * 10 + (text[pos] - '0');
        if (depth > 1000) throw ParseError("depth too large", static_cast<int>(pos) + 1);
        ++pos;
      }
      formula.depth += depth;
    } else {
      formula.depth += 1;
    }
    skip_space();
  }
  if (pos >= text.size() || !std::islower(static_cast<unsigned char>(text[pos])))
    throw ParseError("expected an atom", static_cast<int>(pos) + 1);
  while (pos < text.size() &&
         (std::islower(static_cast<unsigned char>(text[pos])) ||
          std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
    formula.atom += text[pos];
    ++pos;
  }
  skip_space();
  if (pos < text.size()) throw ParseError("unexpected input", static_cast<int>(pos) + 1);
  return formula;
}

std::string print_xformula(const XFormula& formula) {
  if (formula.depth == 0) return formula.atom;
  if (formula.depth == 1) return "X " + formula.atom;
  return "X^" + std::to_string(formula.depth) + " " + formula.atom;
}

PointedKripke PointedKripke::parse(std::string_view text) {
  PointedKripke model;
  model.initial = -1;
  std::vector<std::pair<std::string, std::string>> pending_edges;
  std::vector<std::pair<std::string, std::vector<std::string>>> pending_labels;
  std::string pending_init;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto state_index = [&](const std::string& name) {
    for (std::size_t i = 0; i < model.states.size(); ++i)
      if (model.states[i] == name) return static_cast<int>(i);
    return -1;
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword) || keyword[0] == '#') continue;
    if (keyword == "state") {
      std::string name;
      if (!(words >> name)) throw ParseError("state needs a name", 1, line_no);
      if (state_index(name) >= 0)
        throw ParseError("duplicate state '" + name + "'", 1, line_no);
      model.states.push_back(name);
    } else if (keyword == "init") {
      if (!(words >> pending_init)) throw ParseError("init needs a state", 1, line_no);
    } else if (keyword == "edge") {
      std::string from, to;
      if (!(words >> from >> to)) throw ParseError("edge needs two states", 1, line_no);
      pending_edges.emplace_back(from, to);
    } else if (keyword == "label") {
      std::string state, atoms;
      if (!(words >> state >> atoms)) throw ParseError("label needs a state and atoms", 1, line_no);
      std::vector<std::string> list;
      std::string current;
      for (char c : atoms) {
        if (c == ',') {
          list.push_back(current);
          current.clear();
        } else {
          current += c;
        }
      }
      if (!current.empty()) list.push_back(current);
      pending_labels.emplace_back(state, std::move(list));
    } else {
      throw ParseError("unknown directive '" + keyword + "'", 1, line_no);
    }
  }

  if (model.states.empty()) throw ParseError("model declares no states", 1);
  model.successors.assign(model.states.size(), {});
  model.labels.assign(model.states.size(), {});
  for (const auto& [from, to] : pending_edges) {
    int f = state_index(from), t = state_index(to);
    if (f < 0) throw ParseError("edge from unknown state '" + from + "'", 1);
    if (t < 0) throw ParseError("edge to unknown state '" + to + "'", 1);
    model.successors[static_cast<std::size_t>(f)].push_back(t);
  }
  for (auto& succ : model.successors) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  for (const auto& [state, atoms] : pending_labels) {
    int s = state_index(state);
    if (s < 0) throw ParseError("label on unknown state '" + state + "'", 1);
    auto& slot = model.labels[static_cast<std::size_t>(s)];
    slot.insert(slot.end(), atoms.begin(), atoms.end());
  }
  for (auto& slot : model.labels) {
    std::sort(slot.begin(), slot.end());
    slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
  }
  if (pending_init.empty()) throw ParseError("model declares no initial state", 1);
  model.initial = state_index(pending_init);
  if (model.initial < 0)
    throw ParseError("initial state '" + pending_init + "' is not declared", 1);
  for (std::size_t s = 0; s < model.states.size(); ++s)
    if (model.successors[s].empty())
      throw ParseError("state '" + model.states[s] +
                           "' has no successor; the transition relation must be total",
                       1);
  return model;
}

std::string PointedKripke::render() const {
  std::ostringstream out;
  for (const std::string& state : states) out << "state " << state << "\n";
  out << "init " << states[static_cast<std::size_t>(initial)] << "\n";
  for (std::size_t s = 0; s < states.size(); ++s)
    for (int t : successors[s]) out << "edge " << states[s] << " " << states[static_cast<std::size_t>(t)] << "\n";
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (labels[s].empty()) continue;
    out << "label " << states[s] << " ";
    for (std::size_t i = 0; i < labels[s].size(); ++i) {
      if (i) out << ",";
      out << labels[s][i];
    }
    out << "\n";
  }
  return out.str();
}

bool PointedKripke::state_labeled(int state, std::string_view atom) const {
  const auto& slot = labels[static_cast<std::size_t>(state)];
  return std::find(slot.begin(), slot.end(), atom) != slot.end();
}

bool sat_x(const PointedKripke& model, const XFormula& formula) {
  std::vector<char> frontier(model.states.size(), 0);
  frontier[static_cast<std::size_t>(model.initial)] = 1;
  for (int step = 0; step < formula.depth; ++step) {
    std::vector<char> next(model.states.size(), 0);
    for (std::size_t s = 0; s < model.states.size(); ++s)
      if (frontier[s])
        for (int t : model.successors[s]) next[static_cast<std::size_t>(t)] = 1;
    frontier = std::move(next);
  }
  for (std::size_t s = 0; s < model.states.size(); ++s)
    if (frontier[s] && !model.state_labeled(static_cast<int>(s), formula.atom)) return false;
  return true;
}

bool sat_x_base(const PointedKripke& model, const XBase& base) {
  return std::all_of(base.begin(), base.end(),
                     [&](const XFormula& f) { return sat_x(model, f); });
}

XBase rcp_x(const XBase& base, const std::vector<PointedKripke>& input) {
  XBase result;
  for (const XFormula& formula : base) {
    bool everywhere = std::all_of(input.begin(), input.end(),
                                  [&](const PointedKripke& m) { return sat_x(m, formula); });
    if (everywhere) result.push_back(formula);
  }
  return result;
}

PointedKripke chain_model(const XBase& base, const XFormula& excluded) {
  if (std::find(base.begin(), base.end(), excluded) != base.end())
    throw PreconditionError("the excluded formula belongs to the base");
  int max_depth = excluded.depth;
  for (const XFormula& formula : base) max_depth = std::max(max_depth, formula.depth);

  PointedKripke model;
  for (int i = 0; i <= max_depth; ++i) model.states.push_back("s" + std::to_string(i));
  model.successors.assign(model.states.size(), {});
  model.labels.assign(model.states.size(), {});
  for (int i = 0; i < max_depth; ++i) model.successors[static_cast<std::size_t>(i)] = {i + 1};
  model.successors[static_cast<std::size_t>(max_depth)] = {max_depth};
  for (const XFormula& formula : base)
    model.labels[static_cast<std::size_t>(formula.depth)].push_back(formula.atom);
  for (auto& slot : model.labels) {
    std::sort(slot.begin(), slot.end());
    slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
  }
  model.initial = 0;
  return model;
}

PointedKripke universal_model(const std::vector<std::string>& atoms) {
  PointedKripke model;
  model.states = {"s0"};
  model.successors = {{0}};
  model.labels = {atoms};
  std::sort(model.labels[0].begin(), model.labels[0].end());
  model.initial = 0;
  return model;
}

}  // namespace bcm
