#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "ookb/atom.hpp"
#include "ookb/domain.hpp"

namespace ookb {

/// An initial membership, e.g. the fresh individual of a query.
struct Seed {
  Term term;
  std::string class_name;
};

struct GroundOptions {
  int max_depth = 1;
  std::size_t universe_cap = 1'000'000;
};

struct TermUniverse {
  int max_depth = 0;
  std::set<Term> terms;

  bool contains(const Term& t) const { return terms.count(t) != 0; }
  std::size_t size() const noexcept { return terms.size(); }
};

struct GroundRule {
  Atom head;
  std::vector<Atom> body;
  std::vector<Atom> naf;  // always empty for OOKB domain rules
  std::string origin;     // the template or sufficient condition, rendered

  friend bool operator==(const GroundRule&, const GroundRule&) = default;
};

/// Ground instances of the domain part of KB(D). Domain-independent axioms
/// are not included; consumers evaluate them natively.
struct GroundProgram {
  /// Declarations, domain facts and seed memberships.
  AtomSet facts;
  std::vector<GroundRule> rules;
  TermUniverse universe;
};

/// Terms reachable from the seeds and the domain's individuals by firing
/// templates, with no term deeper than max_depth. Throws Error(resource_cap)
/// when the universe grows past the cap.
TermUniverse build_universe(const OOKBDomain& domain, const std::vector<Seed>& seeds,
                            const GroundOptions& opts = {});

/// Template and sufficient-condition instances whose bodies become true in
/// the positive closure, interleaving instantiation with derivation. Rules
/// with a term deeper than max_depth are not emitted.
GroundProgram ground_program(const OOKBDomain& domain, const std::vector<Seed>& seeds,
                             const GroundOptions& opts = {});

/// Facts then rules, one per line, in surface syntax.
std::string render_program(const GroundProgram& program);

}  // namespace ookb
