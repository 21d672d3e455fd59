#include "ookb/stats.hpp"

#include <cstdio>

namespace ookb {

double StatsTable::avg_skolems_per_rule() const {
  if (descriptive_rules == 0) return 0.0;
  return static_cast<double>(skolem_occurrences) / static_cast<double>(descriptive_rules);
}

std::vector<std::pair<std::string, std::string>> StatsTable::rows() const {
  char avg[32];
  std::snprintf(avg, sizeof avg, "%.2f", avg_skolems_per_rule());
  auto n = [](std::size_t v) { return std::to_string(v); };
  return {
      {"classes", n(classes)},
      {"individuals", n(individuals)},
      {"relations", n(relations)},
      {"subclass_of", n(subclass_of)},
      {"subrelation_of", n(subrelation_of)},
      {"instance_of", n(instance_of)},
      {"disjoint", n(disjoint)},
      {"domain_range", n(domain_range)},
      {"inverse", n(inverse)},
      {"compose", n(compose)},
      {"number_constraints", n(number_constraints)},
      {"sufficient_conditions", n(sufficient_conditions)},
      {"descriptive_rules", n(descriptive_rules)},
      {"equality_statements", n(equality_statements)},
      {"avg_skolems_per_rule", avg},
  };
}

StatsTable kb_stats(const OOKBDomain& domain) {
  StatsTable s;
  s.classes = domain.classes.size();
  s.individuals = domain.individuals.size();
  s.relations = domain.relations.size();
  for (const auto& a : domain.facts) {
    switch (a.pred) {
      case Predicate::subclass_of: ++s.subclass_of; break;
      case Predicate::subrelation_of: ++s.subrelation_of; break;
      case Predicate::instance_of: ++s.instance_of; break;
      case Predicate::disjoint: ++s.disjoint; break;
      case Predicate::domain:
      case Predicate::range: ++s.domain_range; break;
      case Predicate::inverse: ++s.inverse; break;
      case Predicate::compose: ++s.compose; break;
      case Predicate::constraint: ++s.number_constraints; break;
      case Predicate::eq:
      case Predicate::neq: ++s.equality_statements; break;
      default: break;
    }
  }
  s.sufficient_conditions = domain.sufficient_conditions.size();
  s.descriptive_rules = domain.rules.size();
  for (const auto& r : domain.rules) {
    if (r.is_constraint()) ++s.number_constraints;
    if (r.is_equality()) ++s.equality_statements;
    for (const auto* chain : r.chains()) s.skolem_occurrences += chain->size();
  }
  return s;
}

}  // namespace ookb
