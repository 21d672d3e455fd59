#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "ookb/engine.hpp"

namespace ookb {

using ValueTriple = std::tuple<std::string, Term, Term>;

struct Description {
  std::set<std::string> member_of;
  std::set<ValueTriple> values;

  friend bool operator==(const Description&, const Description&) = default;
};

/// (relation, domain class, range class)
using RelationTriple = std::tuple<std::string, std::string, std::string>;

/// A relation distinguishing the two compared classes. Domain-only and
/// range-only differences leave the other side empty.
struct DistRelation {
  std::string relation;
  std::optional<std::string> domain;
  std::optional<std::string> range;
  std::string owner;

  friend auto operator<=>(const DistRelation&, const DistRelation&) = default;
};

struct Comparison {
  std::set<std::string> shared_classes;
  std::set<std::pair<std::string, std::string>> dist_classes;  // (class, owner)
  std::set<std::string> shared_relations;
  std::set<DistRelation> dist_relations;
  std::set<RelationTriple> t1;
  std::set<RelationTriple> t2;
};

struct PathQuery {
  std::string from;
  std::string to;
  std::set<std::string> relations;
  int max_len = 3;
  std::size_t max_paths = std::numeric_limits<std::size_t>::max();
  /// Start from every instance of `from`, not only the fresh individual.
  bool any_start = false;
};

struct Path {
  /// c1, s1, c2, ..., s(n-1), cn
  std::vector<std::string> steps;
  /// The term labelled by each class in `steps`.
  std::vector<Term> witness;

  std::size_t length() const noexcept { return steps.size() / 2; }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Fresh query individuals; the parser rejects the `__` prefix in KBs.
inline const Term kSubsumeIndividual{"__q1_i"};
inline const Term kDescribeIndividual{"__q2_i"};
inline const Term kCompareFirst{"__q3_i1"};
inline const Term kCompareSecond{"__q3_i2"};
inline const Term kPathIndividual{"__q4_i1"};

bool subsumes(const OOKBDomain& domain, const std::string& c1, const std::string& c2,
              const SolveOptions& opts = {});

Description describe(const OOKBDomain& domain, const std::string& c, const SolveOptions& opts = {},
                     bool msc_only = false);

/// Description of `i` in an already computed answer set.
Description describe_in(const AtomSet& atoms, const Term& i, bool msc_only = false);

std::set<std::string> msc_of(const AtomSet& atoms, const Term& x);

Comparison compare(const OOKBDomain& domain, const std::string& c1, const std::string& c2,
                   const SolveOptions& opts = {});

std::vector<Path> find_paths(const OOKBDomain& domain, const PathQuery& query,
                             const SolveOptions& opts = {});

/// Paths over the value and instance_of atoms of `atoms`, starting at the
/// given terms. Shortest first, then by class/relation sequence; one result
/// per sequence.
std::vector<Path> enumerate_paths(const AtomSet& atoms, const std::vector<Term>& starts,
                                  const PathQuery& query);

}  // namespace ookb
