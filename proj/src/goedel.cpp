#include "bcm/goedel.hpp"

#include <algorithm>
#include <map>

namespace bcm {

int PreorderClass::block_of(int member) const {
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int m : blocks[b])
      if (m == member) return static_cast<int>(b);
  return -1;
}

int PreorderClass::theta_block(int marker_index) const { return block_of(marker_index); }

std::string PreorderClass::name(const Signature& signature) const {
  const int marker = static_cast<int>(signature.size());
  std::string out;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (b) out += '<';
    if (b == 0 && zero_lowest) out += "0=";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) out += '=';
      out += blocks[b][i] == marker ? "s" : signature.atoms[static_cast<std::size_t>(blocks[b][i])];
    }
  }
  return out;
}

std::vector<PreorderClass> enumerate_classes(std::size_t atom_count, bool theta_is_one) {
  if (atom_count == 0) throw PreconditionError("the Goedel system needs a nonempty signature");
  if (atom_count > 3) throw BoundError("class enumeration supports at most 3 atoms");
  const std::size_t members = atom_count + 1;  // atoms plus the marker
  const int marker = static_cast<int>(atom_count);
  std::vector<PreorderClass> classes;

  // Weak orders as surjections onto {0..levels-1}, lexicographic per level
  // count; each is split on the zero flag where the invariants allow.
  for (std::size_t levels = 1; levels <= members; ++levels) {
    std::vector<std::size_t> assignment(members, 0);
    bool exhausted = false;
    while (!exhausted) {
      bool surjective = true;
      for (std::size_t l = 0; l < levels && surjective; ++l)
        surjective = std::find(assignment.begin(), assignment.end(), l) != assignment.end();
      if (surjective) {
        PreorderClass cls;
        cls.blocks.assign(levels, {});
        for (std::size_t m = 0; m < members; ++m)
          cls.blocks[assignment[m]].push_back(static_cast<int>(m));
        bool marker_on_top = assignment[members - 1] == levels - 1;
        if (!theta_is_one || marker_on_top) {
          classes.push_back(cls);
          if (cls.block_of(marker) != 0) {
            cls.zero_lowest = true;
            classes.push_back(cls);
          }
        }
      }
      std::size_t at = members;
      while (true) {
        if (at == 0) {
          exhausted = true;
          break;
        }
        --at;
        if (++assignment[at] < levels) break;
        assignment[at] = 0;
      }
    }
  }
  return classes;
}

SymCode one_code(const PreorderClass& cls) { return static_cast<SymCode>(cls.blocks.size()) + 1; }

namespace {

SymCode atom_code(const PreorderClass& cls, int atom) {
  int block = cls.block_of(atom);
  if (block == 0 && cls.zero_lowest) return 0;
  return block + 1;
}

}  // namespace

SymCode eval_goedel(const PreorderClass& cls, const PropAst& formula, std::size_t atom_count) {
  const SymCode one = one_code(cls);
  switch (formula->kind) {
    case PropConnective::Atom: return atom_code(cls, formula->atom);
    case PropConnective::Top: return one;
    case PropConnective::Bottom: return 0;
    case PropConnective::Not:
      return eval_goedel(cls, formula->lhs, atom_count) == 0 ? one : 0;
    case PropConnective::And:
      return std::min(eval_goedel(cls, formula->lhs, atom_count),
                      eval_goedel(cls, formula->rhs, atom_count));
    case PropConnective::Or:
      return std::max(eval_goedel(cls, formula->lhs, atom_count),
                      eval_goedel(cls, formula->rhs, atom_count));
    case PropConnective::Implies: {
      SymCode lhs = eval_goedel(cls, formula->lhs, atom_count);
      SymCode rhs = eval_goedel(cls, formula->rhs, atom_count);
      return lhs <= rhs ? one : rhs;
    }
  }
  return 0;
}

bool satisfies_goedel(const PreorderClass& cls, const std::vector<PropAst>& base,
                      std::size_t atom_count, bool excluded_middle_guard) {
  const SymCode theta = cls.theta_block(static_cast<int>(atom_count)) + 1;
  SymCode value = one_code(cls);
  for (const PropAst& formula : base)
    value = std::min(value, eval_goedel(cls, formula, atom_count));
  if (excluded_middle_guard) {
    // (!a | a) for the first atom; in Goedel semantics this is not a
    // tautology, so the guard genuinely strengthens satisfaction.
    PropAst a = make_atom(0);
    PropAst guard = make_binary(PropConnective::Or, make_not(a), a);
    value = std::min(value, eval_goedel(cls, guard, atom_count));
  }
  return value >= theta;
}

GoedelSystem::GoedelSystem(Signature signature, std::int64_t theta_num, std::int64_t theta_den,
                           bool excluded_middle_guard)
    : signature_(std::move(signature)),
      theta_num_(theta_num),
      theta_den_(theta_den),
      excluded_middle_guard_(excluded_middle_guard),
      catalog_(1) {
  if (theta_den_ <= 0 || theta_num_ <= 0 || theta_num_ > theta_den_)
    throw PreconditionError("theta must be a rational in (0, 1]");
  if (signature_.size() > 2) throw BoundError("goedel supports at most 2 atoms");
  classes_ = enumerate_classes(signature_.size(), theta_is_one());
  names_.reserve(classes_.size());
  for (const PreorderClass& cls : classes_) names_.push_back(cls.name(signature_));
  catalog_ = Catalog(classes_.size());

  const std::size_t n = signature_.size();
  const std::size_t universe = classes_.size();

  // Fixpoint over distinct class -> value vectors, seeded with the atoms and
  // closed under the connectives; witnesses in discovery order. Vectors are
  // combined componentwise so the cost stays linear in the universe.
  using Vector = std::vector<SymCode>;
  std::vector<SymCode> ones(universe);
  for (std::size_t c = 0; c < universe; ++c) ones[c] = one_code(classes_[c]);

  std::vector<std::pair<Vector, PropAst>> reached;
  std::map<Vector, std::size_t> seen;
  auto offer = [&](Vector vec, PropAst ast) {
    if (seen.count(vec)) return false;
    seen.emplace(vec, reached.size());
    reached.emplace_back(std::move(vec), std::move(ast));
    return true;
  };

  for (std::size_t a = 0; a < n; ++a) {
    PropAst atom = make_atom(static_cast<int>(a));
    Vector vec(universe);
    for (std::size_t c = 0; c < universe; ++c) vec[c] = eval_goedel(classes_[c], atom, n);
    offer(std::move(vec), atom);
  }

  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t frozen = reached.size();
    for (std::size_t i = 0; i < frozen; ++i) {
      Vector vec(universe);
      for (std::size_t c = 0; c < universe; ++c)
        vec[c] = reached[i].first[c] == 0 ? ones[c] : 0;
      if (offer(std::move(vec), make_not(reached[i].second))) grew = true;
    }
    for (std::size_t i = 0; i < frozen; ++i)
      for (std::size_t j = 0; j < frozen; ++j) {
        const Vector& lhs = reached[i].first;
        const Vector& rhs = reached[j].first;
        Vector conj(universe), disj(universe), impl(universe);
        for (std::size_t c = 0; c < universe; ++c) {
          conj[c] = std::min(lhs[c], rhs[c]);
          disj[c] = std::max(lhs[c], rhs[c]);
          impl[c] = lhs[c] <= rhs[c] ? ones[c] : rhs[c];
        }
        if (offer(std::move(conj), make_binary(PropConnective::And, reached[i].second,
                                               reached[j].second)))
          grew = true;
        if (offer(std::move(disj),
                  make_binary(PropConnective::Or, reached[i].second, reached[j].second)))
          grew = true;
        if (offer(std::move(impl), make_binary(PropConnective::Implies, reached[i].second,
                                               reached[j].second)))
          grew = true;
      }
  }

  catalog_.add(ModelSet::full(universe), {});
  for (const auto& [vec, ast] : reached) {
    ModelSet denoted = ModelSet::empty(universe);
    for (std::size_t c = 0; c < universe; ++c)
      if (satisfies_goedel(classes_[c], {ast}, n, excluded_middle_guard_)) denoted.insert(c);
    catalog_.add(denoted, {print_prop(ast, signature_)});
  }

  catalog_.close_under_intersection();
}

BaseFormula GoedelSystem::parse_formula(std::string_view text) const {
  PropAst ast = parse_prop(text, signature_);
  ModelSet models = ModelSet::empty(universe_size());
  for (std::size_t c = 0; c < universe_size(); ++c)
    if (satisfies_goedel(classes_[c], {ast}, signature_.size(), excluded_middle_guard_))
      models.insert(c);
  return BaseFormula{print_prop(ast, signature_), models};
}

}  // namespace bcm
