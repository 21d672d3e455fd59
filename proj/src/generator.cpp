#include "ookb/generator.hpp"

#include <random>

#include "ookb/error.hpp"

namespace ookb {
namespace {

class Generator {
 public:
  explicit Generator(const GenProfile& p) : p_(p), rng_(p.seed) {}

  OOKBDomain run() {
    for (int k = 0; k < p_.n_classes; ++k) d_.classes.insert(cls(k));
    for (int k = 0; k < p_.n_relations; ++k) d_.relations.insert(rel(k));
    taxonomy();
    relation_axioms();
    for (int k = 0; k < p_.n_classes; ++k) describe(k);
    individuals();
    sufficient_conditions();
    return std::move(d_);
  }

 private:
  static std::string cls(int k) { return "c" + std::to_string(k); }
  static std::string rel(int k) { return "r" + std::to_string(k); }

  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  void fact(Predicate p, std::initializer_list<Arg> args) { d_.facts.insert(make_atom(p, args)); }

  // Superclasses always have a higher index, so acyclic descriptions only
  // ever type Skolem terms by classes above their owner.
  void taxonomy() {
    for (int k = 0; k + 1 < p_.n_classes; ++k) {
      if (chance(0.5)) fact(Predicate::subclass_of, {sym(cls(k)), sym(cls(pick(k + 1, p_.n_classes - 1)))});
    }
    if (p_.n_classes >= 2 && chance(0.3)) {
      int a = pick(0, p_.n_classes - 1);
      int b = pick(0, p_.n_classes - 1);
      if (a != b) fact(Predicate::disjoint, {sym(cls(a)), sym(cls(b))});
    }
  }

  void relation_axioms() {
    if (p_.n_relations < 2) return;
    if (chance(0.3)) fact(Predicate::subrelation_of, {sym(rel(0)), sym(rel(1))});
    if (chance(0.3)) fact(Predicate::inverse, {sym(rel(p_.n_relations - 1)), sym(rel(p_.n_relations - 2))});
    if (p_.n_relations >= 3 && chance(0.2)) fact(Predicate::compose, {sym(rel(0)), sym(rel(1)), sym(rel(2))});
  }

  void add(int owner, TemplateHead head) { d_.rules.insert({cls(owner), std::move(head)}); }

  void describe(int k) {
    std::vector<std::pair<SkolemChain, int>> made;
    for (int j = 0; j < p_.skolems_per_rule; ++j) {
      int target;
      if (chance(p_.cycle_prob))
        target = k;
      else if (k + 1 < p_.n_classes)
        target = pick(k + 1, p_.n_classes - 1);
      else
        break;
      SkolemChain f{"g" + std::to_string(k) + "_" + std::to_string(j)};
      add(k, MemberHead{f, cls(target)});
      if (p_.n_relations > 0) {
        if (!made.empty() && chance(0.3))
          add(k, ValueHead{rel(pick(0, p_.n_relations - 1)), made[pick(0, made.size() - 1)].first, f});
        else
          add(k, ValueHead{rel(pick(0, p_.n_relations - 1)), {}, f});
      }
      made.emplace_back(f, target);
    }
    for (std::size_t a = 0; a < made.size(); ++a)
      for (std::size_t b = a + 1; b < made.size(); ++b)
        if (chance(p_.eq_density)) add(k, EqualityHead{false, made[a].first, made[b].first});
    if (made.size() >= 2 && chance(0.2)) add(k, EqualityHead{true, made[0].first, made[1].first});
    if (p_.n_relations > 0 && !made.empty() && chance(0.3)) {
      static constexpr Bound bounds[] = {Bound::min, Bound::max, Bound::exact};
      const auto& [f, target] = made[pick(0, made.size() - 1)];
      add(k, ConstraintHead{bounds[pick(0, 2)], {}, rel(pick(0, p_.n_relations - 1)), cls(target), pick(0, 2)});
    }
  }

  void individuals() {
    const int n = 1 + p_.n_classes / 5;
    for (int k = 0; k < n; ++k) {
      const std::string name = "i" + std::to_string(k);
      d_.individuals.insert(name);
      fact(Predicate::instance_of, {sym(name), sym(cls(pick(0, p_.n_classes - 1)))});
    }
    if (p_.n_relations > 0 && chance(0.3))
      fact(Predicate::value, {sym(rel(pick(0, p_.n_relations - 1))), sym("i0"), sym("i0")});
  }

  void sufficient_conditions() {
    if (p_.n_relations == 0 || p_.n_classes < 2 || !chance(0.4)) return;
    SufficientCondition sc;
    sc.target_class = cls(pick(0, p_.n_classes - 1));
    sc.head_var = "X";
    sc.body.push_back({Predicate::value, {Term(rel(pick(0, p_.n_relations - 1))), Variable{"X"}, Variable{"Y1"}}});
    sc.body.push_back({Predicate::instance_of, {Variable{"Y1"}, Term(cls(pick(0, p_.n_classes - 1)))}});
    d_.sufficient_conditions.insert(std::move(sc));
  }

  const GenProfile& p_;
  std::mt19937_64 rng_;
  OOKBDomain d_;
};

}  // namespace

OOKBDomain generate_synthetic(const GenProfile& p) {
  auto bad = [](const std::string& m) { return Error(ErrorCode::invalid_argument, m); };
  if (p.n_classes < 1) throw bad("n_classes must be positive");
  if (p.n_relations < 0) throw bad("n_relations must be non-negative");
  if (p.skolems_per_rule < 0) throw bad("skolems_per_rule must be non-negative");
  if (!(p.eq_density >= 0.0 && p.eq_density <= 1.0)) throw bad("eq_density must lie in [0, 1]");
  if (!(p.cycle_prob >= 0.0 && p.cycle_prob <= 1.0)) throw bad("cycle_prob must lie in [0, 1]");
  if (p.eq_density > 0.0 && p.skolems_per_rule < 2)
    throw bad("eq_density > 0 needs at least two Skolem functions per description");
  return Generator(p).run();
}

}  // namespace ookb
