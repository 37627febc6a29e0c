#pragma once

#include <stdexcept>
#include <string>

namespace bcm {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed formula, base file, model spec or Kripke model.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int column, int line = -1)
      : Error(what), column_(column), line_(line) {}
  int column() const { return column_; }  // 1-based, -1 if unknown
  int line() const { return line_; }      // 1-based, -1 if unknown
  ParseError at_line(int line) const { return ParseError(what(), column_, line); }

private:
  int column_;
  int line_;
};

/// Enumeration limit exceeded (signature too large, lattice too big, ...).
class BoundError : public Error {
public:
  using Error::Error;
};

/// A change operation has no representable candidate. The witness, when
/// present, is a printable object explaining why (e.g. a Kripke model that
/// satisfies every base, or an interval that can be improved forever).
class IncompatibleError : public Error {
public:
  IncompatibleError(const std::string& what, std::string witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

private:
  std::string witness_;
};

/// Two model sets (or a set and a catalog) over different universes.
class UniverseMismatchError : public Error {
public:
  using Error::Error;
};

/// An operation was called outside its stated precondition.
class PreconditionError : public Error {
public:
  using Error::Error;
};

}  // namespace bcm
