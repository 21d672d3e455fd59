#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ookb/atom.hpp"
#include "ookb/domain.hpp"
#include "ookb/grounder.hpp"

namespace ookb {

enum class Policy { min_depth, random };

std::string_view policy_name(Policy p) noexcept;

struct SolveOptions {
  int max_depth = 1;
  std::size_t universe_cap = 1'000'000;
  Policy policy = Policy::min_depth;
  std::uint64_t seed = 0;

  GroundOptions grounding() const { return {max_depth, universe_cap}; }
};

/// Maps every `term` atom and every member of an equality class to the
/// representative of its class (itself when unconstrained).
using Substitution = std::map<Term, Term>;

enum class ViolationKind { min, max, exact_low, exact_high, domain, range };

std::string_view violation_kind_name(ViolationKind k) noexcept;

struct ConstraintViolation {
  /// The violated constraint atom, or the value atom for domain/range.
  Atom constraint;
  ViolationKind kind = ViolationKind::min;
  std::int64_t count = 0;
  AtomSet witnesses;
  /// Lower-bound failures may disappear at a larger depth.
  bool depth_sensitive = false;
};

/// A pair of literals that cannot both hold: instance_of and its classical
/// negation, or eq and neq on the same pair.
struct Conflict {
  Atom first;
  Atom second;
};

struct EqClasses {
  /// Classes of two or more terms, each sorted by min_depth_less.
  std::vector<std::vector<Term>> classes;
  std::vector<Conflict> conflicts;

  /// Index into `classes`, or -1 for a term in no class.
  int class_of(const Term& t) const;

  std::map<Term, int> index;
};

struct AnswerSet {
  AtomSet atoms;
  Substitution substitution;
  std::vector<ConstraintViolation> violations;
  std::vector<Conflict> conflicts;
  int depth = 0;
  std::size_t universe_size = 0;

  bool contains(const Atom& a) const { return atoms.contains(a); }
  /// No conflicting literals and no violation that holds at every depth.
  bool consistent() const;
  /// The bounded program literally has this answer set: no conflicts and no
  /// violated constraint of any kind.
  bool has_answer_set() const { return conflicts.empty() && violations.empty(); }
};

/// Least fixpoint of the ground program together with taxonomy closure,
/// inheritance, disjointness, relation algebra and term extraction. The
/// result includes the program's facts.
AtomSet base_fixpoint(const GroundProgram& program);

std::vector<Conflict> literal_conflicts(const AtomSet& atoms);

EqClasses congruence_closure(const AtomSet& atoms);

/// One representative per class; `term` atoms outside every class map to
/// themselves.
Substitution select_representatives(const EqClasses& classes, const AtomSet& atoms, Policy policy,
                                    std::uint64_t seed);

AtomSet project_value_e(const AtomSet& atoms, const Substitution& subst);

/// Domain/range checks over value atoms and cardinality checks over value_e.
std::vector<ConstraintViolation> check_constraints(const AtomSet& atoms);

AnswerSet solve(const GroundProgram& program, const SolveOptions& opts);
AnswerSet answer_set(const OOKBDomain& domain, const std::vector<Seed>& seeds,
                     const SolveOptions& opts = {});

enum class EntailmentMode { cautious, credulous };

/// Membership of `atom` in the computed answer set. Cautious mode accepts
/// only predicates whose truth is shared by all answer sets. Throws
/// Error(inconsistent) when the KB is inconsistent.
bool entails(const OOKBDomain& domain, const std::vector<Seed>& seeds, const Atom& atom,
             const SolveOptions& opts = {}, EntailmentMode mode = EntailmentMode::cautious);

bool invariant_predicate(Predicate p) noexcept;

}  // namespace ookb
