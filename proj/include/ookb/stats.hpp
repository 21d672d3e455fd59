#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ookb/domain.hpp"

namespace ookb {

struct StatsTable {
  std::size_t classes = 0;
  std::size_t individuals = 0;
  std::size_t relations = 0;
  std::size_t subclass_of = 0;
  std::size_t subrelation_of = 0;
  std::size_t instance_of = 0;
  std::size_t disjoint = 0;
  std::size_t domain_range = 0;
  std::size_t inverse = 0;
  std::size_t compose = 0;
  std::size_t number_constraints = 0;
  std::size_t sufficient_conditions = 0;
  std::size_t descriptive_rules = 0;
  std::size_t equality_statements = 0;
  std::size_t skolem_occurrences = 0;

  /// Skolem occurrences per descriptive rule, 0 without rules.
  double avg_skolems_per_rule() const;

  /// (label, value) rows in display order; the average is rendered with two
  /// decimals.
  std::vector<std::pair<std::string, std::string>> rows() const;

  friend bool operator==(const StatsTable&, const StatsTable&) = default;
};

StatsTable kb_stats(const OOKBDomain& domain);

}  // namespace ookb
