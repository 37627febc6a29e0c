#include "bcm/threeval.hpp"

#include <algorithm>
#include <map>

namespace bcm {

Tri eval3(const PropAst& formula, const std::vector<Tri>& valuation) {
  switch (formula->kind) {
    case PropConnective::Atom:
      return valuation[static_cast<std::size_t>(formula->atom)];
    case PropConnective::Top: return Tri::T;
    case PropConnective::Bottom: return Tri::F;
    case PropConnective::Not: {
      Tri v = eval3(formula->lhs, valuation);
      return static_cast<Tri>(2 - static_cast<int>(v));
    }
    case PropConnective::And:
      return std::min(eval3(formula->lhs, valuation), eval3(formula->rhs, valuation));
    case PropConnective::Or:
      return std::max(eval3(formula->lhs, valuation), eval3(formula->rhs, valuation));
    case PropConnective::Implies: {
      Tri lhs = eval3(formula->lhs, valuation);
      Tri negated = static_cast<Tri>(2 - static_cast<int>(lhs));
      return std::max(negated, eval3(formula->rhs, valuation));
    }
  }
  return Tri::F;
}

Tri ThreeValSystem::valuation_value(std::size_t valuation, std::size_t atom_index) const {
  const std::size_t n = signature_.size();
  std::size_t digit = valuation;
  for (std::size_t i = n - 1; i > atom_index; --i) digit /= 3;
  return static_cast<Tri>(digit % 3);
}

namespace {

char tri_char(Tri v) {
  switch (v) {
    case Tri::F: return 'f';
    case Tri::U: return 'u';
    case Tri::T: return 't';
  }
  return '?';
}

// (true-set, false-set) of a formula, the derivation device for catalogs.
struct TFPair {
  ModelSet t;
  ModelSet f;
  friend bool operator==(const TFPair&, const TFPair&) = default;
  friend bool operator<(const TFPair& a, const TFPair& b) {
    if (a.t != b.t) return a.t < b.t;
    return a.f < b.f;
  }
};

}  // namespace

ThreeValSystem::ThreeValSystem(Signature signature, ThreeValVariant variant)
    : signature_(std::move(signature)), variant_(variant), catalog_(1) {
  if (signature_.size() == 0) throw BoundError("signature must declare at least one atom");
  if (signature_.size() > 2)
    throw BoundError("three-valued systems support at most 2 atoms (universe 3^n)");
  const std::size_t n = signature_.size();
  std::size_t universe = 1;
  for (std::size_t i = 0; i < n; ++i) universe *= 3;

  names_.reserve(universe);
  for (std::size_t v = 0; v < universe; ++v) {
    std::string name;
    std::size_t rest = v;
    for (std::size_t i = 0; i < n; ++i) name += '?';
    for (std::size_t i = n; i-- > 0;) {
      name[i] = tri_char(static_cast<Tri>(rest % 3));
      rest /= 3;
    }
    names_.push_back(name);
  }

  catalog_ = Catalog(universe);

  // Fixpoint over distinct (T, F) pairs, witnesses in discovery order.
  std::vector<std::pair<TFPair, PropAst>> reached;
  std::map<TFPair, std::size_t> seen;
  auto offer = [&](TFPair pair, PropAst formula) {
    if (seen.count(pair)) return false;
    seen.emplace(pair, reached.size());
    reached.emplace_back(pair, std::move(formula));
    return true;
  };

  for (std::size_t a = 0; a < n; ++a) {
    ModelSet t = ModelSet::empty(universe);
    ModelSet f = ModelSet::empty(universe);
    for (std::size_t v = 0; v < universe; ++v) {
      Tri value = valuation_value(v, a);
      if (value == Tri::T) t.insert(v);
      if (value == Tri::F) f.insert(v);
    }
    offer(TFPair{t, f}, make_atom(static_cast<int>(a)));
  }

  bool grew = true;
  while (grew) {
    grew = false;
    ++fixpoint_rounds_;
    const std::size_t frozen = reached.size();
    for (std::size_t i = 0; i < frozen; ++i) {
      const auto [pair, formula] = reached[i];
      if (offer(TFPair{pair.f, pair.t}, make_not(formula))) grew = true;
    }
    for (std::size_t i = 0; i < frozen; ++i)
      for (std::size_t j = 0; j < frozen; ++j) {
        const auto [left, left_ast] = reached[i];
        const auto [right, right_ast] = reached[j];
        if (offer(TFPair{left.t.set_intersection(right.t), left.f.set_union(right.f)},
                  make_binary(PropConnective::And, left_ast, right_ast)))
          grew = true;
        if (offer(TFPair{left.t.set_union(right.t), left.f.set_intersection(right.f)},
                  make_binary(PropConnective::Or, left_ast, right_ast)))
          grew = true;
      }
  }

  // Single-formula denotations per variant, then intersection closure for
  // multi-formula bases (joint satisfaction).
  catalog_.add(ModelSet::full(universe), {});
  for (const auto& [pair, formula] : reached) {
    ModelSet denoted = variant_ == ThreeValVariant::K3 ? pair.t : pair.f.complement();
    catalog_.add(denoted, {print_prop(formula, signature_)});
  }
  catalog_.close_under_intersection();
}

ModelSet ThreeValSystem::formula_models(const PropAst& formula) const {
  const std::size_t n = signature_.size();
  ModelSet models = ModelSet::empty(universe_size());
  std::vector<Tri> valuation(n);
  for (std::size_t v = 0; v < universe_size(); ++v) {
    for (std::size_t a = 0; a < n; ++a) valuation[a] = valuation_value(v, a);
    Tri value = eval3(formula, valuation);
    bool satisfied = variant_ == ThreeValVariant::K3 ? value == Tri::T : value != Tri::F;
    if (satisfied) models.insert(v);
  }
  return models;
}

BaseFormula ThreeValSystem::parse_formula(std::string_view text) const {
  PropAst ast = parse_prop(text, signature_);
  return BaseFormula{print_prop(ast, signature_), formula_models(ast)};
}

}  // namespace bcm
