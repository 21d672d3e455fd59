#include "ookb/domain.hpp"

#include <deque>

#include "ookb/error.hpp"

namespace ookb {

std::string_view bound_name(Bound b) noexcept {
  switch (b) {
    case Bound::min: return "min";
    case Bound::max: return "max";
    case Bound::exact: return "exact";
  }
  return "min";
}

std::optional<Bound> bound_from_name(std::string_view s) noexcept {
  if (s == "min") return Bound::min;
  if (s == "max") return Bound::max;
  if (s == "exact") return Bound::exact;
  return std::nullopt;
}

std::vector<const SkolemChain*> DescriptiveRule::chains() const {
  struct Visitor {
    std::vector<const SkolemChain*> operator()(const ValueHead& h) const {
      return {&h.subject, &h.object};
    }
    std::vector<const SkolemChain*> operator()(const MemberHead& h) const { return {&h.term}; }
    std::vector<const SkolemChain*> operator()(const EqualityHead& h) const {
      return {&h.lhs, &h.rhs};
    }
    std::vector<const SkolemChain*> operator()(const ConstraintHead& h) const {
      return {&h.term};
    }
  };
  return std::visit(Visitor{}, head);
}

std::set<std::string> SufficientCondition::variables() const {
  std::set<std::string> vars;
  for (const auto& lit : body)
    for (const auto& a : lit.args)
      if (const auto* v = std::get_if<Variable>(&a)) vars.insert(v->name);
  return vars;
}

std::vector<const DescriptiveRule*> OOKBDomain::rules_of(std::string_view owner) const {
  std::vector<const DescriptiveRule*> out;
  for (const auto& r : rules)
    if (r.owner_class == owner) out.push_back(&r);
  return out;
}

bool OOKBDomain::empty() const {
  return classes.empty() && individuals.empty() && relations.empty() && facts.empty() &&
         rules.empty() && sufficient_conditions.empty();
}

namespace {

using ClassSet = std::set<std::string>;

struct Taxonomy {
  std::map<std::string, ClassSet> parents;
  // declarers[f] = classes with a head instance_of(f(X), _)
  std::map<std::string, ClassSet> declarers;
  // typing[{c, f}] = classes assigned to f(X) by c's templates
  std::map<std::pair<std::string, std::string>, ClassSet> typing;
};

Taxonomy index(const OOKBDomain& d) {
  Taxonomy t;
  for (const auto& a : d.facts)
    if (a.pred == Predicate::subclass_of) t.parents[a.symbol_at(0)].insert(a.symbol_at(1));
  for (const auto& r : d.rules) {
    const auto* m = std::get_if<MemberHead>(&r.head);
    if (!m || m->term.size() != 1) continue;
    t.declarers[m->term[0]].insert(r.owner_class);
    t.typing[{r.owner_class, m->term[0]}].insert(m->class_name);
  }
  return t;
}

// Nearest declarer of `fn` reachable upwards from `start`; nullopt with a
// message on failure.
std::optional<std::string> nearest_declarer(const Taxonomy& t, const ClassSet& start,
                                            const std::string& fn, std::string& why) {
  auto decl = t.declarers.find(fn);
  if (decl == t.declarers.end()) {
    why = "Skolem function '" + fn + "' has no instance_of declaration";
    return std::nullopt;
  }
  ClassSet seen(start.begin(), start.end());
  ClassSet level = start;
  while (!level.empty()) {
    ClassSet hits;
    for (const auto& c : level)
      if (decl->second.count(c)) hits.insert(c);
    if (hits.size() == 1) return *hits.begin();
    if (hits.size() > 1) {
      why = "Skolem function '" + fn + "' is ambiguous between";
      for (const auto& h : hits) why += " " + h;
      return std::nullopt;
    }
    ClassSet next;
    for (const auto& c : level) {
      auto p = t.parents.find(c);
      if (p == t.parents.end()) continue;
      for (const auto& s : p->second)
        if (seen.insert(s).second) next.insert(s);
    }
    level = std::move(next);
  }
  why = "Skolem function '" + fn + "' is not declared for this class or its superclasses";
  return std::nullopt;
}

}  // namespace

SkolemTable::SkolemTable(const OOKBDomain& domain) {
  const Taxonomy t = index(domain);
  for (const auto& rule : domain.rules) {
    for (const SkolemChain* chain : rule.chains()) {
      auto key = std::make_pair(rule.owner_class, *chain);
      if (resolved_.count(key)) continue;
      std::vector<std::string> names;
      ClassSet context{rule.owner_class};
      std::string why;
      bool ok = true;
      for (const auto& fn : *chain) {
        auto owner = nearest_declarer(t, context, fn, why);
        if (!owner) {
          ok = false;
          break;
        }
        names.push_back(t.declarers.at(fn).size() == 1 ? fn : fn + "_" + *owner);
        context = t.typing.at({*owner, fn});
      }
      if (!ok) {
        problems_.push_back({rule, why});
        continue;
      }
      resolved_.emplace(std::move(key), std::move(names));
    }
  }
}

const std::vector<std::string>& SkolemTable::resolve(const std::string& owner,
                                                     const SkolemChain& chain) const {
  auto it = resolved_.find({owner, chain});
  if (it == resolved_.end())
    throw Error(ErrorCode::load, "unresolved Skolem chain in a rule of class " + owner);
  return it->second;
}

}  // namespace ookb
