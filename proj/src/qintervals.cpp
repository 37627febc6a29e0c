#include "bcm/qintervals.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bcm {

Rational parse_rational(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw ParseError("expected a rational number", 1);

  std::string digits = compact;
  bool negative = false;
  if (digits[0] == '-' || digits[0] == '+') {
    negative = digits[0] == '-';
    digits.erase(digits.begin());
  }
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };

  Rational value;
  std::size_t slash = digits.find('/');
  std::size_t dot = digits.find('.');
  if (slash != std::string::npos) {
    std::string num = digits.substr(0, slash);
    std::string den = digits.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("malformed rational '" + compact + "'", 1);
    mpz_class denominator(den);
    if (denominator == 0) throw ParseError("zero denominator in '" + compact + "'", 1);
    value = Rational(mpz_class(num), denominator);
  } else if (dot != std::string::npos) {
    std::string whole = digits.substr(0, dot);
    std::string frac = digits.substr(dot + 1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || !all_digits(frac))
      throw ParseError("malformed decimal '" + compact + "'", 1);
    mpz_class scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(mpz_class(whole) * scale + mpz_class(frac.empty() ? "0" : frac), scale);
  } else {
    if (!all_digits(digits)) throw ParseError("malformed number '" + compact + "'", 1);
    value = Rational(mpz_class(digits));
  }
  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string rational_text(const Rational& value) { return value.get_str(); }

bool QComponent::contains(const Rational& z) const {
  if (!lo.infinite) {
    if (z < lo.value) return false;
    if (z == lo.value && !lo.closed) return false;
  }
  if (!hi.infinite) {
    if (z > hi.value) return false;
    if (z == hi.value && !hi.closed) return false;
  }
  return true;
}

namespace {

// lo endpoints ordered by where the component starts.
bool lo_before(const QEndpoint& a, const QEndpoint& b) {
  if (a.infinite != b.infinite) return a.infinite;
  if (a.infinite) return false;
  if (a.value != b.value) return a.value < b.value;
  return a.closed && !b.closed;
}

bool component_empty(const QEndpoint& lo, const QEndpoint& hi) {
  if (lo.infinite || hi.infinite) return false;
  if (lo.value > hi.value) return true;
  if (lo.value == hi.value) return !(lo.closed && hi.closed);
  return false;
}

// True when two sorted components overlap or share a touching endpoint.
bool merges(const QComponent& a, const QComponent& b) {
  if (a.hi.infinite || b.lo.infinite) return true;
  if (b.lo.value < a.hi.value) return true;
  if (b.lo.value > a.hi.value) return false;
  return a.hi.closed || b.lo.closed;
}

}  // namespace

IntervalTarget IntervalTarget::whole_line() {
  IntervalTarget t;
  t.components_.push_back(QComponent{QEndpoint{true, 0, false}, QEndpoint{true, 0, false}});
  return t;
}

IntervalTarget IntervalTarget::component(QEndpoint lo, QEndpoint hi) {
  IntervalTarget t;
  if (!component_empty(lo, hi)) t.components_.push_back(QComponent{lo, hi});
  return t;
}

IntervalTarget IntervalTarget::closed(const Rational& lo, const Rational& hi) {
  return component(QEndpoint{false, lo, true}, QEndpoint{false, hi, true});
}

IntervalTarget IntervalTarget::point(const Rational& value) { return closed(value, value); }

bool IntervalTarget::is_whole_line() const {
  return components_.size() == 1 && components_[0].lo.infinite && components_[0].hi.infinite;
}

bool IntervalTarget::contains(const Rational& z) const {
  return std::any_of(components_.begin(), components_.end(),
                     [&](const QComponent& c) { return c.contains(z); });
}

bool IntervalTarget::subset_of(const IntervalTarget& other) const {
  return subtract(other).is_empty();
}

void IntervalTarget::normalize() {
  std::sort(components_.begin(), components_.end(),
            [](const QComponent& a, const QComponent& b) { return lo_before(a.lo, b.lo); });
  std::vector<QComponent> merged;
  for (const QComponent& c : components_) {
    if (merged.empty() || !merges(merged.back(), c)) {
      merged.push_back(c);
      continue;
    }
    QComponent& last = merged.back();
    // Extend the upper end when c reaches further.
    if (last.hi.infinite) continue;
    if (c.hi.infinite || c.hi.value > last.hi.value ||
        (c.hi.value == last.hi.value && c.hi.closed && !last.hi.closed))
      last.hi = c.hi;
  }
  components_ = std::move(merged);
}

IntervalTarget IntervalTarget::unite(const IntervalTarget& other) const {
  IntervalTarget result = *this;
  result.components_.insert(result.components_.end(), other.components_.begin(),
                            other.components_.end());
  result.normalize();
  return result;
}

IntervalTarget IntervalTarget::intersect(const IntervalTarget& other) const {
  IntervalTarget result;
  for (const QComponent& a : components_)
    for (const QComponent& b : other.components_) {
      QEndpoint lo = lo_before(a.lo, b.lo) ? b.lo : a.lo;
      QEndpoint hi = [&] {
        // hi endpoints ordered by where the component stops.
        const QEndpoint &x = a.hi, &y = b.hi;
        if (x.infinite) return y;
        if (y.infinite) return x;
        if (x.value != y.value) return x.value < y.value ? x : y;
        return x.closed ? y : x;
      }();
      if (!component_empty(lo, hi)) result.components_.push_back(QComponent{lo, hi});
    }
  result.normalize();
  return result;
}

IntervalTarget IntervalTarget::subtract(const IntervalTarget& other) const {
  // Complement of `other`, then intersect.
  IntervalTarget complement;
  QEndpoint cursor{true, 0, false};  // lower end of the next complement piece
  for (const QComponent& c : other.components_) {
    if (!c.lo.infinite) {
      QEndpoint hi{false, c.lo.value, !c.lo.closed};
      if (cursor.infinite || !component_empty(cursor, hi))
        complement.components_.push_back(QComponent{cursor, hi});
    }
    if (c.hi.infinite) {
      // Nothing beyond an unbounded component.
      complement.normalize();
      return intersect(complement);
    }
    cursor = QEndpoint{false, c.hi.value, !c.hi.closed};
  }
  complement.components_.push_back(QComponent{cursor, QEndpoint{true, 0, false}});
  complement.normalize();
  return intersect(complement);
}

std::string IntervalTarget::render() const {
  if (components_.empty()) return "{}";
  std::ostringstream out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out << " u ";
    const QComponent& c = components_[i];
    if (!c.lo.infinite && !c.hi.infinite && c.lo.value == c.hi.value) {
      out << "{" << rational_text(c.lo.value) << "}";
      continue;
    }
    out << (c.lo.infinite ? "(-inf" : (c.lo.closed ? "[" : "(") + rational_text(c.lo.value));
    out << ",";
    out << (c.hi.infinite ? "inf)" : rational_text(c.hi.value) + (c.hi.closed ? "]" : ")"));
  }
  return out.str();
}

namespace {

class TargetParser {
public:
  explicit TargetParser(std::string_view text) : text_(text) {}

  IntervalTarget parse() {
    IntervalTarget result = primary();
    while (true) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == 'u') {
        ++pos_;
        result = result.unite(primary());
      } else if (pos_ < text_.size() && text_[pos_] == '\\') {
        ++pos_;
        result = result.subtract(primary());
      } else {
        break;
      }
    }
    skip_space();
    if (pos_ < text_.size()) throw ParseError("unexpected input", column());
    return result;
  }

private:
  IntervalTarget primary() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("expected an interval", column());
    char c = text_[pos_];
    if (c == '{') {
      ++pos_;
      Rational value = rational_until("},");
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != '}')
        throw ParseError("expected '}'", column());
      ++pos_;
      return IntervalTarget::point(value);
    }
    if (c == '[' || c == '(') {
      bool lo_closed = c == '[';
      ++pos_;
      Rational lo = rational_until(",");
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != ',')
        throw ParseError("expected ','", column());
      ++pos_;
      Rational hi = rational_until("])");
      skip_space();
      if (pos_ >= text_.size() || (text_[pos_] != ']' && text_[pos_] != ')'))
        throw ParseError("expected ']' or ')'", column());
      bool hi_closed = text_[pos_] == ']';
      ++pos_;
      if (lo > hi) throw ParseError("interval ends out of order", column());
      return IntervalTarget::component(QEndpoint{false, lo, lo_closed},
                                       QEndpoint{false, hi, hi_closed});
    }
    throw ParseError(std::string("unexpected character '") + c + "'", column());
  }

  Rational rational_until(std::string_view stoppers) {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && stoppers.find(text_[pos_]) == std::string_view::npos) ++pos_;
    std::string_view chunk = text_.substr(start, pos_ - start);
    try {
      return parse_rational(chunk);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), static_cast<int>(start) + 1);
    }
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  int column() const { return static_cast<int>(pos_) + 1; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IntervalTarget parse_interval_target(std::string_view text) { return TargetParser(text).parse(); }

std::string RatInterval::render() const {
  return "[" + rational_text(lo) + "," + rational_text(hi) + "]";
}

RatInterval parse_qinterval(std::string_view text) {
  IntervalTarget target = parse_interval_target(text);
  if (target.components().size() != 1 || !target.components()[0].bounded_closed())
    throw ParseError("bases admit closed intervals only", 1);
  const QComponent& c = target.components()[0];
  return RatInterval{c.lo.value, c.hi.value};
}

IntervalTarget models_of_q(const QBase& base) {
  IntervalTarget result = IntervalTarget::whole_line();
  for (const RatInterval& interval : base)
    result = result.intersect(IntervalTarget::closed(interval.lo, interval.hi));
  return result;
}

std::optional<QBase> representable_q(const IntervalTarget& target) {
  if (target.is_empty()) return QBase{RatInterval{0, 0}, RatInterval{1, 1}};
  if (target.is_whole_line()) return QBase{};
  if (target.components().size() != 1) return std::nullopt;
  const QComponent& c = target.components()[0];
  if (!c.bounded_closed()) return std::nullopt;
  return QBase{RatInterval{c.lo.value, c.hi.value}};
}

RatInterval improve_subset(const RatInterval& candidate, const IntervalTarget& target) {
  if (candidate.lo > candidate.hi) throw PreconditionError("malformed candidate interval");
  if (!IntervalTarget::closed(candidate.lo, candidate.hi).subset_of(target))
    throw PreconditionError("the candidate is not contained in the target");
  if (representable_q(target))
    throw PreconditionError("the target is representable; no improvement is needed");

  for (const QComponent& c : target.components()) {
    if (!c.contains(candidate.lo)) continue;
    // The candidate lives in this component; push toward an open end.
    if (c.hi.infinite) return RatInterval{candidate.lo, candidate.hi + 1};
    if (!c.hi.closed && candidate.hi < c.hi.value)
      return RatInterval{candidate.lo, (candidate.hi + c.hi.value) / 2};
    if (c.lo.infinite) return RatInterval{candidate.lo - 1, candidate.hi};
    if (!c.lo.closed && candidate.lo > c.lo.value)
      return RatInterval{(candidate.lo + c.lo.value) / 2, candidate.hi};
    throw PreconditionError("the candidate already spans a closed component");
  }
  throw PreconditionError("the candidate is not contained in the target");
}

RatInterval improve_superset(const RatInterval& candidate, const IntervalTarget& target) {
  if (candidate.lo > candidate.hi) throw PreconditionError("malformed candidate interval");
  if (target.is_empty()) throw PreconditionError("the empty target is representable");
  if (!target.subset_of(IntervalTarget::closed(candidate.lo, candidate.hi)))
    throw PreconditionError("the candidate does not contain the target");
  if (representable_q(target))
    throw PreconditionError("the target is representable; no improvement is needed");

  const QComponent& first = target.components().front();
  const QComponent& last = target.components().back();
  if (first.lo.infinite || last.hi.infinite)
    throw PreconditionError("no closed interval contains an unbounded target");
  if (candidate.lo < first.lo.value) {
    Rational next = first.lo.closed ? first.lo.value : (candidate.lo + first.lo.value) / 2;
    return RatInterval{next, candidate.hi};
  }
  if (candidate.hi > last.hi.value) {
    Rational next = last.hi.closed ? last.hi.value : (candidate.hi + last.hi.value) / 2;
    return RatInterval{candidate.lo, next};
  }
  throw PreconditionError("the candidate already is the closed hull of the target");
}

namespace {

std::string improvement_chain_subset(const IntervalTarget& target) {
  // A strictly growing chain of closed intervals inside the target.
  const QComponent& c = target.components().front();
  Rational seed;
  if (!c.lo.infinite && !c.hi.infinite)
    seed = (c.lo.value + c.hi.value) / 2;
  else if (!c.lo.infinite)
    seed = c.lo.value + 1;
  else if (!c.hi.infinite)
    seed = c.hi.value - 1;
  else
    seed = 0;
  RatInterval candidate{seed, seed};
  std::string chain = candidate.render();
  for (int i = 0; i < 3; ++i) {
    candidate = improve_subset(candidate, target);
    chain += " c " + candidate.render();
  }
  chain += " c ...";
  return chain;
}

std::string improvement_chain_superset(const IntervalTarget& target) {
  const QComponent& first = target.components().front();
  const QComponent& last = target.components().back();
  RatInterval candidate{first.lo.value - 1, last.hi.value + 1};
  std::string chain = candidate.render();
  for (int i = 0; i < 3; ++i) {
    candidate = improve_superset(candidate, target);
    chain += " ) " + candidate.render();
  }
  chain += " ) ...";
  return chain;
}

}  // namespace

QChangeReport evict_q(const QBase& base, const IntervalTarget& input) {
  IntervalTarget target = models_of_q(base).subtract(input);
  if (auto exact = representable_q(target)) return QChangeReport{*exact, target};

  // Maximal representable subsets are the bounded closed components.
  for (const QComponent& c : target.components())
    if (c.bounded_closed()) {
      RatInterval chosen{c.lo.value, c.hi.value};
      return QChangeReport{{chosen}, IntervalTarget::closed(chosen.lo, chosen.hi)};
    }
  throw IncompatibleError(
      "no maximal representable subset of " + target.render() +
          " exists; every closed interval inside it extends strictly",
      improvement_chain_subset(target));
}

QChangeReport receive_q(const QBase& base, const IntervalTarget& input) {
  IntervalTarget target = models_of_q(base).unite(input);
  if (auto exact = representable_q(target)) return QChangeReport{*exact, target};

  const QComponent& first = target.components().front();
  const QComponent& last = target.components().back();
  if (!first.lo.infinite && !last.hi.infinite && first.lo.closed && last.hi.closed) {
    // Both extreme ends attained: the closed hull is the unique minimal
    // representable superset.
    RatInterval hull{first.lo.value, last.hi.value};
    return QChangeReport{{hull}, IntervalTarget::closed(hull.lo, hull.hi)};
  }
  throw IncompatibleError(
      "no minimal representable superset of " + target.render() +
          " exists; every closed interval around it shrinks strictly",
      improvement_chain_superset(target));
}

}  // namespace bcm
