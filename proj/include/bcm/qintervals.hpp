#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcm/errors.hpp"

namespace bcm {

using Rational = mpq_class;

/// Exact rational parsing: "a/b", integers and finite decimals ("0.25").
Rational parse_rational(std::string_view text);
std::string rational_text(const Rational& value);

/// One connected piece of a model set over the rationals. Endpoints may be
/// infinite (no bound on that side); a finite endpoint is closed or open.
struct QEndpoint {
  bool infinite = false;
  Rational value = 0;
  bool closed = true;

  friend bool operator==(const QEndpoint&, const QEndpoint&) = default;
};

struct QComponent {
  QEndpoint lo, hi;

  bool bounded_closed() const {
    return !lo.infinite && !hi.infinite && lo.closed && hi.closed;
  }
  bool contains(const Rational& z) const;
  friend bool operator==(const QComponent&, const QComponent&) = default;
};

/// A set of rational models given as finitely many disjoint, sorted,
/// non-touching components. Encodes the targets of change operations, e.g.
/// a base's models minus some points, or a union with another interval.
class IntervalTarget {
public:
  IntervalTarget() = default;  // the empty set
  static IntervalTarget whole_line();
  static IntervalTarget component(QEndpoint lo, QEndpoint hi);
  static IntervalTarget closed(const Rational& lo, const Rational& hi);
  static IntervalTarget point(const Rational& value);

  bool is_empty() const { return components_.empty(); }
  bool is_whole_line() const;
  const std::vector<QComponent>& components() const { return components_; }

  bool contains(const Rational& z) const;
  bool subset_of(const IntervalTarget& other) const;

  IntervalTarget unite(const IntervalTarget& other) const;
  IntervalTarget intersect(const IntervalTarget& other) const;
  IntervalTarget subtract(const IntervalTarget& other) const;

  std::string render() const;

  friend bool operator==(const IntervalTarget&, const IntervalTarget&) = default;

private:
  void normalize();
  std::vector<QComponent> components_;
};

/// Target syntax: `[0,1]`, `(0,1]`, `{1}` point sets, `u` for union and
/// `\` for difference, left associative; rationals as `a/b` or decimals.
IntervalTarget parse_interval_target(std::string_view text);

/// A base formula of this system: a closed interval with rational ends.
struct RatInterval {
  Rational lo, hi;  // lo <= hi

  friend bool operator==(const RatInterval&, const RatInterval&) = default;
  std::string render() const;
};

using QBase = std::vector<RatInterval>;

/// Parses one closed interval per call, e.g. "[0, 3/2]".
RatInterval parse_qinterval(std::string_view text);

/// Models of a base: the intersection of its closed intervals (the whole
/// line for the empty base; possibly empty).
IntervalTarget models_of_q(const QBase& base);

/// A base denoting the target exactly, when one exists: the target must be
/// empty, the whole line, or a single bounded closed component.
std::optional<QBase> representable_q(const IntervalTarget& target);

/// Strictly grows a closed interval inside a non-representable target
/// toward an open component end (midpoint step). Witnesses that no maximal
/// representable subset exists on that side. Throws PreconditionError if
/// the candidate is not inside the target or no open end is reachable.
RatInterval improve_subset(const RatInterval& candidate, const IntervalTarget& target);

/// Dual: strictly shrinks a closed interval enclosing the target toward an
/// open extreme end.
RatInterval improve_superset(const RatInterval& candidate, const IntervalTarget& target);

struct QChangeReport {
  QBase result_base;
  IntervalTarget result_models;
};

/// Eviction: models_of(base) minus the input. Exact when some maximal
/// closed piece exists (the bounded closed components); otherwise throws
/// IncompatibleError carrying an improvement chain as witness.
QChangeReport evict_q(const QBase& base, const IntervalTarget& input);

/// Reception: models_of(base) united with the input. Exact when the target
/// is representable; the closed hull when both extreme ends are attained;
/// otherwise IncompatibleError with an improvement chain.
QChangeReport receive_q(const QBase& base, const IntervalTarget& input);

}  // namespace bcm
