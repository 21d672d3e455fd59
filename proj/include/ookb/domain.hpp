#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ookb/atom.hpp"

namespace ookb {

enum class Bound { min, max, exact };

std::string_view bound_name(Bound b) noexcept;
std::optional<Bound> bound_from_name(std::string_view s) noexcept;

/// Skolem functions applied to the single rule variable, innermost first.
/// The empty chain is the variable itself.
using SkolemChain = std::vector<std::string>;

struct ValueHead {
  std::string relation;
  SkolemChain subject;
  SkolemChain object;
  friend auto operator<=>(const ValueHead&, const ValueHead&) = default;
};

struct MemberHead {
  SkolemChain term;
  std::string class_name;
  friend auto operator<=>(const MemberHead&, const MemberHead&) = default;
};

struct EqualityHead {
  bool negated = false;  // neq
  SkolemChain lhs;
  SkolemChain rhs;
  friend auto operator<=>(const EqualityHead&, const EqualityHead&) = default;
};

struct ConstraintHead {
  Bound bound = Bound::min;
  SkolemChain term;
  std::string relation;
  std::string filler;
  std::int64_t count = 0;
  friend auto operator<=>(const ConstraintHead&, const ConstraintHead&) = default;
};

using TemplateHead = std::variant<ValueHead, MemberHead, EqualityHead, ConstraintHead>;

/// `head :- instance_of(X, owner_class).`
struct DescriptiveRule {
  std::string owner_class;
  TemplateHead head;

  bool is_value() const { return std::holds_alternative<ValueHead>(head); }
  bool is_member() const { return std::holds_alternative<MemberHead>(head); }
  bool is_equality() const { return std::holds_alternative<EqualityHead>(head); }
  bool is_constraint() const { return std::holds_alternative<ConstraintHead>(head); }

  /// Every chain mentioned by the head.
  std::vector<const SkolemChain*> chains() const;

  friend auto operator<=>(const DescriptiveRule&, const DescriptiveRule&) = default;
};

struct Variable {
  std::string name;
  friend auto operator<=>(const Variable&, const Variable&) = default;
};

using PatternArg = std::variant<Variable, Term, std::int64_t>;

/// A body literal of a sufficient condition. Term positions hold variables
/// or individual constants; symbol positions hold constants.
struct PatternAtom {
  Predicate pred = Predicate::value;
  std::vector<PatternArg> args;
  friend auto operator<=>(const PatternAtom&, const PatternAtom&) = default;
};

/// `instance_of(V, target_class) :- body.`
struct SufficientCondition {
  std::string target_class;
  std::string head_var;
  std::vector<PatternAtom> body;

  std::set<std::string> variables() const;

  friend auto operator<=>(const SufficientCondition&, const SufficientCondition&) = default;
};

/// A parsed OO-domain: declarations, ground facts, rule templates and
/// sufficient conditions. Ground facts keep their input polarity and are
/// never closed under the domain-independent axioms here.
struct OOKBDomain {
  std::set<std::string> classes;
  std::set<std::string> individuals;
  std::set<std::string> relations;
  /// subclass_of, disjoint, instance_of, domain, range, subrelation_of,
  /// compose, inverse, plus ground value/eq/neq/constraint facts.
  AtomSet facts;
  std::set<DescriptiveRule> rules;
  std::set<SufficientCondition> sufficient_conditions;

  std::vector<const DescriptiveRule*> rules_of(std::string_view owner) const;
  std::vector<Atom> facts_of(Predicate p) const { return facts.with_predicate(p); }
  bool empty() const;

  friend bool operator==(const OOKBDomain&, const OOKBDomain&) = default;
};

/// Resolves the Skolem names used in templates to the function symbols the
/// grounder emits. A name declared (by an `instance_of(f(X), c)` head) in
/// exactly one class keeps its name; a name declared in several classes is
/// qualified as `f_owner`. Inside a chain each name is looked up from the
/// classes of the term it is applied to, walking up the taxonomy.
class SkolemTable {
 public:
  struct Problem {
    DescriptiveRule rule;
    std::string message;
  };

  explicit SkolemTable(const OOKBDomain& domain);

  const std::vector<Problem>& problems() const noexcept { return problems_; }

  /// Grounded function names for `chain` as written in a rule of `owner`.
  /// Throws Error(load) for chains that did not resolve.
  const std::vector<std::string>& resolve(const std::string& owner,
                                          const SkolemChain& chain) const;

 private:
  std::map<std::pair<std::string, SkolemChain>, std::vector<std::string>> resolved_;
  std::vector<Problem> problems_;
};

}  // namespace ookb
