#pragma once

#include <cstdint>

#include "ookb/domain.hpp"

namespace ookb {

struct GenProfile {
  int n_classes = 5;
  int n_relations = 2;
  /// Skolem functions introduced by each class description.
  int skolems_per_rule = 2;
  /// Probability that two Skolem terms of one description are stated equal.
  double eq_density = 0.1;
  /// Probability that a Skolem term is typed by its own class, making the
  /// description recursive.
  double cycle_prob = 0.0;
  std::uint64_t seed = 1;
};

/// Deterministic in the profile. Throws Error(invalid_argument) for
/// infeasible profiles.
OOKBDomain generate_synthetic(const GenProfile& profile);

}  // namespace ookb
