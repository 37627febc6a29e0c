#include "bcm/horn.hpp"

#include <algorithm>
#include <cctype>

namespace bcm {

namespace {

// Surface items feeding clause normalization.
struct HornItem {
  enum class Kind { Atom, Falsum, Clause } kind;
  int atom = -1;
  HornClause clause;
};

class HornParser {
public:
  HornParser(std::string_view text, const Signature& signature)
      : text_(text), signature_(signature) {}

  HornFormula parse() {
    HornFormula formula;
    collect(formula, parse_expr(/*top_level=*/true));
    skip_space();
    if (pos_ < text_.size()) throw ParseError("unexpected input", column());
    normalize(formula);
    return formula;
  }

private:
  struct Node {
    enum class Kind { Atom, Falsum, Conj, Impl } kind;
    int atom = -1;
    std::vector<Node> children;
  };

  Node parse_expr(bool) {
    Node lhs = parse_conj();
    skip_space();
    if (match("->")) {
      Node rhs = parse_conj();
      skip_space();
      if (text_.substr(pos_, 2) == "->")
        throw ParseError("nested implication is not a Horn formula", column());
      Node impl{Node::Kind::Impl, -1, {}};
      impl.children.push_back(std::move(lhs));
      impl.children.push_back(std::move(rhs));
      return impl;
    }
    return lhs;
  }

  Node parse_conj() {
    Node conj{Node::Kind::Conj, -1, {}};
    conj.children.push_back(parse_unit());
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        conj.children.push_back(parse_unit());
      } else {
        break;
      }
    }
    if (conj.children.size() == 1) return std::move(conj.children.front());
    return conj;
  }

  Node parse_unit() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected formula", column());
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Node inner = parse_expr(false);
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("expected ')'", column());
      ++pos_;
      return inner;
    }
    if (c == 'F') {
      ++pos_;
      return Node{Node::Kind::Falsum, -1, {}};
    }
    if (c == '|' || c == '!')
      throw ParseError(std::string("'") + c + "' is not part of the Horn language", column());
    if (std::islower(static_cast<unsigned char>(c))) {
      int start = column();
      std::string name;
      while (pos_ < text_.size() &&
             (std::islower(static_cast<unsigned char>(text_[pos_])) ||
              std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        name += text_[pos_];
        ++pos_;
      }
      int index = signature_.index_of(name);
      if (index < 0) throw ParseError("undeclared atom '" + name + "'", start);
      return Node{Node::Kind::Atom, index, {}};
    }
    throw ParseError(std::string("unexpected character '") + c + "'", column());
  }

  // Flattens a node into clauses of the formula.
  void collect(HornFormula& formula, const Node& node) {
    switch (node.kind) {
      case Node::Kind::Atom:
        formula.clauses.push_back(HornClause{{}, node.atom});
        break;
      case Node::Kind::Falsum:
        formula.clauses.push_back(HornClause{{}, -1});
        break;
      case Node::Kind::Conj:
        for (const Node& child : node.children) collect(formula, child);
        break;
      case Node::Kind::Impl: {
        HornClause clause;
        gather_body(node.children[0], clause.body);
        const Node& head = node.children[1];
        if (head.kind == Node::Kind::Atom)
          clause.head = head.atom;
        else if (head.kind == Node::Kind::Falsum)
          clause.head = -1;
        else
          throw ParseError("clause head must be a single atom or F", column());
        if (clause.body.empty())
          throw ParseError("clause body must name at least one atom", column());
        formula.clauses.push_back(std::move(clause));
        break;
      }
    }
  }

  void gather_body(const Node& node, std::vector<int>& body) {
    switch (node.kind) {
      case Node::Kind::Atom:
        body.push_back(node.atom);
        break;
      case Node::Kind::Conj:
        for (const Node& child : node.children) gather_body(child, body);
        break;
      case Node::Kind::Falsum:
        throw ParseError("falsum cannot appear in a clause body", column());
      case Node::Kind::Impl:
        throw ParseError("nested implication is not a Horn formula", column());
    }
  }

  static void normalize(HornFormula& formula) {
    for (HornClause& clause : formula.clauses) {
      std::sort(clause.body.begin(), clause.body.end());
      clause.body.erase(std::unique(clause.body.begin(), clause.body.end()), clause.body.end());
    }
    std::sort(formula.clauses.begin(), formula.clauses.end());
    formula.clauses.erase(std::unique(formula.clauses.begin(), formula.clauses.end()),
                          formula.clauses.end());
  }

  bool match(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int column() const { return static_cast<int>(pos_) + 1; }

  std::string_view text_;
  const Signature& signature_;
  std::size_t pos_ = 0;
};

std::string print_clause(const HornClause& clause, const Signature& signature) {
  std::string out;
  for (std::size_t i = 0; i < clause.body.size(); ++i) {
    if (i) out += " & ";
    out += signature.atoms[static_cast<std::size_t>(clause.body[i])];
  }
  if (!clause.body.empty()) out += " -> ";
  out += clause.head < 0 ? "F" : signature.atoms[static_cast<std::size_t>(clause.head)];
  return out;
}

}  // namespace

HornFormula parse_horn(std::string_view text, const Signature& signature) {
  return HornParser(text, signature).parse();
}

std::string print_horn(const HornFormula& formula, const Signature& signature) {
  std::string out;
  for (std::size_t i = 0; i < formula.clauses.size(); ++i) {
    if (i) out += " & ";
    bool wrap = formula.clauses.size() > 1 && !formula.clauses[i].body.empty();
    if (wrap) out += '(';
    out += print_clause(formula.clauses[i], signature);
    if (wrap) out += ')';
  }
  return out;
}

bool horn_sat(std::size_t valuation, const HornClause& clause, const Signature& signature) {
  const std::size_t n = signature.size();
  for (int atom : clause.body)
    if (((valuation >> (n - 1 - static_cast<std::size_t>(atom))) & 1) == 0) return true;
  if (clause.head < 0) return false;
  return (valuation >> (n - 1 - static_cast<std::size_t>(clause.head))) & 1;
}

HornSystem::HornSystem(Signature signature)
    : signature_(std::move(signature)), catalog_(std::size_t{1} << signature_.size()) {
  if (signature_.size() == 0) throw BoundError("signature must declare at least one atom");
  if (signature_.size() > 4) throw BoundError("horn supports at most 4 atoms");
  names_ = classical_model_names(signature_);
  const std::size_t n = signature_.size();
  const std::size_t universe = names_.size();

  // All clauses with body of atoms, head an atom outside the body or falsum.
  // Implications come before facts and the bare falsum last, so that greedy
  // witness reduction keeps the strongest, most readable clauses.
  std::vector<HornClause> clauses;
  for (int head = 0; head < static_cast<int>(n); ++head)
    for (std::size_t body_bits = 1; body_bits < (std::size_t{1} << n); ++body_bits) {
      HornClause clause;
      for (std::size_t a = 0; a < n; ++a)
        if ((body_bits >> a) & 1) clause.body.push_back(static_cast<int>(a));
      if (std::find(clause.body.begin(), clause.body.end(), head) != clause.body.end()) continue;
      clause.head = head;
      clauses.push_back(std::move(clause));
    }
  for (std::size_t body_bits = 1; body_bits < (std::size_t{1} << n); ++body_bits) {
    HornClause clause;
    for (std::size_t a = 0; a < n; ++a)
      if ((body_bits >> a) & 1) clause.body.push_back(static_cast<int>(a));
    clause.head = -1;
    clauses.push_back(std::move(clause));
  }
  for (int head = 0; head < static_cast<int>(n); ++head)
    clauses.push_back(HornClause{{}, head});
  clauses.push_back(HornClause{{}, -1});

  std::vector<ModelSet> clause_models;
  clause_models.reserve(clauses.size());
  for (const HornClause& clause : clauses) {
    ModelSet models = ModelSet::empty(universe);
    for (std::size_t v = 0; v < universe; ++v)
      if (horn_sat(v, clause, signature_)) models.insert(v);
    clause_models.push_back(models);
  }

  for (const ModelSet& candidate : all_subsets(universe)) {
    // Witness: every clause true on all of the candidate's valuations.
    std::vector<std::size_t> witness;
    ModelSet denoted = ModelSet::full(universe);
    for (std::size_t c = 0; c < clauses.size(); ++c)
      if (candidate.subset_of(clause_models[c])) {
        witness.push_back(c);
        denoted = denoted.set_intersection(clause_models[c]);
      }
    if (denoted != candidate) continue;

    // Greedy reduction; scan order drops implications before facts.
    for (std::size_t i = 0; i < witness.size();) {
      ModelSet rest = ModelSet::full(universe);
      for (std::size_t j = 0; j < witness.size(); ++j)
        if (j != i) rest = rest.set_intersection(clause_models[witness[j]]);
      if (rest == candidate)
        witness.erase(witness.begin() + static_cast<std::ptrdiff_t>(i));
      else
        ++i;
    }

    std::vector<std::string> lines;
    if (witness.empty()) {
      // The universe is denoted by the empty base; a tautological clause
      // keeps the witness non-trivial.
      lines.push_back(signature_.atoms[0] + " -> " + signature_.atoms[0]);
    } else {
      for (std::size_t c : witness)
        lines.push_back(print_clause(clauses[c], signature_));
      std::sort(lines.begin(), lines.end());
    }
    catalog_.add(candidate, std::move(lines));
  }
}

BaseFormula HornSystem::parse_formula(std::string_view text) const {
  HornFormula formula = parse_horn(text, signature_);
  ModelSet models = ModelSet::full(universe_size());
  for (const HornClause& clause : formula.clauses) {
    ModelSet clause_set = ModelSet::empty(universe_size());
    for (std::size_t v = 0; v < universe_size(); ++v)
      if (horn_sat(v, clause, signature_)) clause_set.insert(v);
    models = models.set_intersection(clause_set);
  }
  return BaseFormula{print_horn(formula, signature_), models};
}

}  // namespace bcm
