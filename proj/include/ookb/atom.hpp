#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ookb/term.hpp"

namespace ookb {

enum class Predicate {
  class_,
  individual,
  relation,
  subclass_of,
  disjoint,
  instance_of,
  range,
  domain,
  subrelation_of,
  compose,
  inverse,
  value,
  value_e,
  eq,
  neq,
  substitute,
  is_substituted,
  term,
  constraint,
};

std::string_view predicate_name(Predicate p) noexcept;
std::optional<Predicate> predicate_from_name(std::string_view name) noexcept;
std::size_t predicate_arity(Predicate p) noexcept;

/// Symbols (class and relation names, constraint kinds) are carried as
/// depth-0 terms; only the constraint bound is an integer.
using Arg = std::variant<Term, std::int64_t>;

std::string arg_str(const Arg& a);

struct Atom {
  Predicate pred = Predicate::term;
  std::vector<Arg> args;
  bool neg = false;

  Atom() = default;
  Atom(Predicate p, std::vector<Arg> a, bool negated = false)
      : pred(p), args(std::move(a)), neg(negated) {}

  const Term& term_at(std::size_t i) const { return std::get<Term>(args.at(i)); }
  const std::string& symbol_at(std::size_t i) const { return term_at(i).root; }

  /// Surface form without the trailing period, e.g. `value(r, i, f1(i))`.
  std::string str() const;

  friend auto operator<=>(const Atom&, const Atom&) = default;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Builds an atom whose arguments are all symbols or terms given in surface
/// form without nesting (`sym("cell")`).
Atom make_atom(Predicate p, std::initializer_list<Arg> args, bool neg = false);
inline Arg sym(std::string s) { return Term(std::move(s)); }

/// An ordered set of ground literals.
class AtomSet {
 public:
  using const_iterator = std::set<Atom>::const_iterator;

  bool insert(Atom a) { return atoms_.insert(std::move(a)).second; }
  bool contains(const Atom& a) const { return atoms_.count(a) != 0; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  const_iterator begin() const { return atoms_.begin(); }
  const_iterator end() const { return atoms_.end(); }

  std::vector<Atom> with_predicate(Predicate p) const;

  friend bool operator==(const AtomSet&, const AtomSet&) = default;

 private:
  std::set<Atom> atoms_;
};

}  // namespace ookb
