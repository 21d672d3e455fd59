#include "ookb/atom.hpp"

#include <array>

namespace ookb {
namespace {

struct PredicateInfo {
  Predicate pred;
  std::string_view name;
  std::size_t arity;
};

constexpr std::array<PredicateInfo, 19> kPredicates{{
    {Predicate::class_, "class", 1},
    {Predicate::individual, "individual", 1},
    {Predicate::relation, "relation", 1},
    {Predicate::subclass_of, "subclass_of", 2},
    {Predicate::disjoint, "disjoint", 2},
    {Predicate::instance_of, "instance_of", 2},
    {Predicate::range, "range", 2},
    {Predicate::domain, "domain", 2},
    {Predicate::subrelation_of, "subrelation_of", 2},
    {Predicate::compose, "compose", 3},
    {Predicate::inverse, "inverse", 2},
    {Predicate::value, "value", 3},
    {Predicate::value_e, "value_e", 3},
    {Predicate::eq, "eq", 2},
    {Predicate::neq, "neq", 2},
    {Predicate::substitute, "substitute", 2},
    {Predicate::is_substituted, "is_substituted", 1},
    {Predicate::term, "term", 1},
    {Predicate::constraint, "constraint", 5},
}};

}  // namespace

std::string_view predicate_name(Predicate p) noexcept {
  return kPredicates[static_cast<std::size_t>(p)].name;
}

std::optional<Predicate> predicate_from_name(std::string_view name) noexcept {
  for (const auto& info : kPredicates)
    if (info.name == name) return info.pred;
  return std::nullopt;
}

std::size_t predicate_arity(Predicate p) noexcept {
  return kPredicates[static_cast<std::size_t>(p)].arity;
}

std::string arg_str(const Arg& a) {
  if (const auto* t = std::get_if<Term>(&a)) return t->str();
  return std::to_string(std::get<std::int64_t>(a));
}

std::string Atom::str() const {
  std::string out;
  if (neg) out += '-';
  out += predicate_name(pred);
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += arg_str(args[i]);
  }
  out += ')';
  return out;
}

Atom make_atom(Predicate p, std::initializer_list<Arg> args, bool neg) {
  return Atom(p, std::vector<Arg>(args), neg);
}

std::vector<Atom> AtomSet::with_predicate(Predicate p) const {
  std::vector<Atom> out;
  for (const auto& a : atoms_)
    if (a.pred == p) out.push_back(a);
  return out;
}

}  // namespace ookb
