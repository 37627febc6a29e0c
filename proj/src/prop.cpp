#include "bcm/prop.hpp"

#include <cctype>

namespace bcm {

int Signature::index_of(std::string_view atom) const {
  for (std::size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] == atom) return static_cast<int>(i);
  return -1;
}

Signature parse_signature(std::string_view csv) {
  Signature signature;
  std::string current;
  auto flush = [&](int column) {
    if (current.empty()) throw ParseError("empty atom name in signature", column);
    if (!std::islower(static_cast<unsigned char>(current[0])))
      throw ParseError("atom '" + current + "' must start with a lowercase letter", column);
    for (char c : current)
      if (!std::islower(static_cast<unsigned char>(c)) &&
          !std::isdigit(static_cast<unsigned char>(c)) && c != '_')
        throw ParseError("atom '" + current + "' contains an invalid character", column);
    if (signature.index_of(current) >= 0)
      throw ParseError("duplicate atom '" + current + "'", column);
    signature.atoms.push_back(current);
    current.clear();
  };
  for (std::size_t i = 0; i < csv.size(); ++i) {
    char c = csv[i];
    if (c == ',') {
      flush(static_cast<int>(i) + 1);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  flush(static_cast<int>(csv.size()) + 1);
  return signature;
}

PropAst make_atom(int index) {
  auto node = std::make_shared<PropNode>();
  node->kind = PropConnective::Atom;
  node->atom = index;
  return node;
}

PropAst make_const(bool truth) {
  auto node = std::make_shared<PropNode>();
  node->kind = truth ? PropConnective::Top : PropConnective::Bottom;
  return node;
}

PropAst make_not(PropAst operand) {
  auto node = std::make_shared<PropNode>();
  node->kind = PropConnective::Not;
  node->lhs = std::move(operand);
  return node;
}

PropAst make_binary(PropConnective kind, PropAst lhs, PropAst rhs) {
  auto node = std::make_shared<PropNode>();
  node->kind = kind;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return node;
}

namespace {

// Hand-rolled scanner/parser; positions are 1-based columns into the line.
class PropParser {
public:
  PropParser(std::string_view text, const Signature& signature)
      : text_(text), signature_(signature) {}

  PropAst parse() {
    PropAst result = implication();
    skip_space();
    if (pos_ < text_.size())
      throw ParseError("unexpected input", column());
    return result;
  }

private:
  // implication := disjunction ('->' implication)?   (right associative)
  PropAst implication() {
    PropAst lhs = disjunction();
    skip_space();
    if (match("->")) return make_binary(PropConnective::Implies, lhs, implication());
    return lhs;
  }

  PropAst disjunction() {
    PropAst lhs = conjunction();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '|') {
        ++pos_;
        lhs = make_binary(PropConnective::Or, lhs, conjunction());
      } else {
        return lhs;
      }
    }
  }

  PropAst conjunction() {
    PropAst lhs = unary();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '&') {
        ++pos_;
        lhs = make_binary(PropConnective::And, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  PropAst unary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected formula", column());
    char c = text_[pos_];
    if (c == '!') {
      ++pos_;
      return make_not(unary());
    }
    if (c == '(') {
      ++pos_;
      PropAst inner = implication();
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("expected ')'", column());
      ++pos_;
      return inner;
    }
    if (c == 'T' || c == 'F') {
      ++pos_;
      return make_const(c == 'T');
    }
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
      if (index < 0)
        throw ParseError("undeclared atom '" + name + "'", start);
      return make_atom(index);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", column());
  }

  bool match(std::string_view token) {
    skip_space();
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

int precedence(PropConnective kind) {
  switch (kind) {
    case PropConnective::Implies: return 0;
    case PropConnective::Or: return 1;
    case PropConnective::And: return 2;
    case PropConnective::Not: return 3;
    default: return 4;
  }
}

void print_tree(const PropAst& node, const Signature& signature, std::string& out,
                int parent_precedence) {
  int self = precedence(node->kind);
  bool parens = self < parent_precedence;
  if (parens) out += '(';
  switch (node->kind) {
    case PropConnective::Atom: out += signature.atoms[static_cast<std::size_t>(node->atom)]; break;
    case PropConnective::Top: out += 'T'; break;
    case PropConnective::Bottom: out += 'F'; break;
    case PropConnective::Not:
      out += '!';
      print_tree(node->lhs, signature, out, self + 1);
      break;
    case PropConnective::And:
      print_tree(node->lhs, signature, out, self);
      out += " & ";
      print_tree(node->rhs, signature, out, self + 1);
      break;
    case PropConnective::Or:
      print_tree(node->lhs, signature, out, self);
      out += " | ";
      print_tree(node->rhs, signature, out, self + 1);
      break;
    case PropConnective::Implies:
      print_tree(node->lhs, signature, out, self + 1);
      out += " -> ";
      print_tree(node->rhs, signature, out, self);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

PropAst parse_prop(std::string_view text, const Signature& signature) {
  return PropParser(text, signature).parse();
}

std::string print_prop(const PropAst& formula, const Signature& signature) {
  std::string out;
  print_tree(formula, signature, out, 0);
  return out;
}

bool eval_classical(const PropAst& formula, std::size_t valuation, const Signature& signature) {
  const std::size_t n = signature.size();
  switch (formula->kind) {
    case PropConnective::Atom: {
      std::size_t shift = n - 1 - static_cast<std::size_t>(formula->atom);
      return (valuation >> shift) & 1;
    }
    case PropConnective::Top: return true;
    case PropConnective::Bottom: return false;
    case PropConnective::Not: return !eval_classical(formula->lhs, valuation, signature);
    case PropConnective::And:
      return eval_classical(formula->lhs, valuation, signature) &&
             eval_classical(formula->rhs, valuation, signature);
    case PropConnective::Or:
      return eval_classical(formula->lhs, valuation, signature) ||
             eval_classical(formula->rhs, valuation, signature);
    case PropConnective::Implies:
      return !eval_classical(formula->lhs, valuation, signature) ||
             eval_classical(formula->rhs, valuation, signature);
  }
  return false;
}

ModelSet classical_models(const PropAst& formula, const Signature& signature) {
  const std::size_t count = std::size_t{1} << signature.size();
  ModelSet result = ModelSet::empty(count);
  for (std::size_t v = 0; v < count; ++v)
    if (eval_classical(formula, v, signature)) result.insert(v);
  return result;
}

std::vector<std::string> classical_model_names(const Signature& signature) {
  const std::size_t n = signature.size();
  const std::size_t count = std::size_t{1} << n;
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t v = 0; v < count; ++v) {
    std::string name;
    for (std::size_t i = 0; i < n; ++i) name += ((v >> (n - 1 - i)) & 1) ? 't' : 'f';
    names.push_back(name);
  }
  return names;
}

Base dnf_base_for(const ModelSet& target, const Signature& signature) {
  const std::size_t n = signature.size();
  std::string text;
  if (target.is_empty()) {
    text = signature.atoms[0] + " & !" + signature.atoms[0];
  } else {
    bool first_term = true;
    for (std::size_t v : target.members()) {
      if (!first_term) text += " | ";
      first_term = false;
      text += '(';
      for (std::size_t i = 0; i < n; ++i) {
        if (i) text += " & ";
        bool positive = (v >> (n - 1 - i)) & 1;
        if (!positive) text += '!';
        text += signature.atoms[i];
      }
      text += ')';
    }
  }
  PropAst ast = parse_prop(text, signature);
  return Base{BaseFormula{text, classical_models(ast, signature)}};
}

std::size_t PropSystem::max_base_size() const {
  return fragment_ == Fragment::Full ? static_cast<std::size_t>(-1) : 1;
}

PropSystem::PropSystem(Signature signature, Fragment fragment)
    : signature_(std::move(signature)),
      fragment_(fragment),
      catalog_(std::size_t{1} << signature_.size()) {
  if (signature_.size() == 0) throw BoundError("signature must declare at least one atom");
  if (signature_.size() > 4)
    throw BoundError("propositional systems support at most 4 atoms");
  switch (fragment_) {
    case Fragment::Full: id_ = "prop"; break;
    case Fragment::AtomsOnly: id_ = "prop-t"; break;
    case Fragment::AtomsPlusFalsum: id_ = "prop-p"; break;
  }
  names_ = classical_model_names(signature_);

  if (fragment_ == Fragment::Full) {
    for (const ModelSet& subset : all_subsets(universe_size())) {
      Base witness = dnf_base_for(subset, signature_);
      catalog_.add(subset, base_lines(witness));
    }
  } else {
    // The fragment languages admit single-formula bases only; the catalog
    // lists each formula's denotation plus the empty base's.
    catalog_.add(ModelSet::full(universe_size()), {});
    for (const std::string& atom : signature_.atoms) {
      PropAst ast = parse_prop(atom, signature_);
      catalog_.add(classical_models(ast, signature_), {atom});
    }
    if (fragment_ == Fragment::AtomsPlusFalsum)
      catalog_.add(ModelSet::empty(universe_size()), {"F"});
  }
}

namespace {

bool fragment_allows(Fragment fragment, const PropAst& ast) {
  switch (fragment) {
    case Fragment::Full: return true;
    case Fragment::AtomsOnly: return ast->kind == PropConnective::Atom;
    case Fragment::AtomsPlusFalsum:
      return ast->kind == PropConnective::Atom || ast->kind == PropConnective::Bottom;
  }
  return false;
}

}  // namespace

BaseFormula PropSystem::parse_formula(std::string_view text) const {
  PropAst ast = parse_prop(text, signature_);
  if (!fragment_allows(fragment_, ast))
    throw ParseError("formula not in the " + id_ + " language", 1);
  return BaseFormula{print_prop(ast, signature_), classical_models(ast, signature_)};
}

}  // namespace bcm
