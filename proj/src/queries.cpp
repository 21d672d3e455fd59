#include "ookb/queries.hpp"

#include <algorithm>
#include <map>

#include "ookb/error.hpp"

namespace ookb {
namespace {

void require_class(const OOKBDomain& d, const std::string& c) {
  if (!d.classes.count(c)) throw Error(ErrorCode::invalid_argument, "unknown class '" + c + "'");
}

AnswerSet consistent_answer_set(const OOKBDomain& d, const std::vector<Seed>& seeds,
                                const SolveOptions& opts) {
  AnswerSet as = answer_set(d, seeds, opts);
  if (!as.consistent()) throw Error(ErrorCode::inconsistent, "the knowledge base is inconsistent");
  return as;
}

std::set<std::string> classes_of(const AtomSet& atoms, const Term& x) {
  std::set<std::string> out;
  for (const auto& a : atoms)
    if (a.pred == Predicate::instance_of && !a.neg && a.term_at(0) == x) out.insert(a.symbol_at(1));
  return out;
}

std::set<std::string> superclasses(const AtomSet& atoms, const std::string& c) {
  std::set<std::string> out;
  for (const auto& a : atoms)
    if (a.pred == Predicate::subclass_of && a.symbol_at(0) == c) out.insert(a.symbol_at(1));
  return out;
}

std::set<RelationTriple> triples(const AtomSet& atoms, const Term& i) {
  std::map<Term, std::set<std::string>> msc;
  const auto msc_cached = [&](const Term& t) -> const std::set<std::string>& {
    auto it = msc.find(t);
    if (it == msc.end()) it = msc.emplace(t, msc_of(atoms, t)).first;
    return it->second;
  };
  std::set<RelationTriple> out;
  for (const auto& a : atoms) {
    if (a.pred != Predicate::value) continue;
    const Term& x = a.term_at(1);
    const Term& y = a.term_at(2);
    if (!rooted_at(x, i.root) || !rooted_at(y, i.root)) continue;
    for (const auto& p : msc_cached(x))
      for (const auto& q : msc_cached(y)) out.emplace(a.symbol_at(0), p, q);
  }
  return out;
}

}  // namespace

bool subsumes(const OOKBDomain& domain, const std::string& c1, const std::string& c2,
              const SolveOptions& opts) {
  require_class(domain, c1);
  require_class(domain, c2);
  AnswerSet as = consistent_answer_set(domain, {{kSubsumeIndividual, c1}}, opts);
  return as.contains(make_atom(Predicate::instance_of, {kSubsumeIndividual, sym(c2)}));
}

std::set<std::string> msc_of(const AtomSet& atoms, const Term& x) {
  const auto member = classes_of(atoms, x);
  std::set<std::string> out;
  for (const auto& p : member) {
    bool specific = true;
    for (const auto& q : member) {
      if (q != p && atoms.contains(make_atom(Predicate::subclass_of, {sym(q), sym(p)}))) {
        specific = false;
        break;
      }
    }
    if (specific) out.insert(p);
  }
  return out;
}

Description describe_in(const AtomSet& atoms, const Term& i, bool msc_only) {
  Description d;
  d.member_of = msc_only ? msc_of(atoms, i) : classes_of(atoms, i);
  for (const auto& a : atoms) {
    if (a.pred != Predicate::value) continue;
    if (rooted_at(a.term_at(1), i.root) && rooted_at(a.term_at(2), i.root))
      d.values.emplace(a.symbol_at(0), a.term_at(1), a.term_at(2));
  }
  return d;
}

Description describe(const OOKBDomain& domain, const std::string& c, const SolveOptions& opts,
                     bool msc_only) {
  require_class(domain, c);
  AnswerSet as = consistent_answer_set(domain, {{kDescribeIndividual, c}}, opts);
  return describe_in(as.atoms, kDescribeIndividual, msc_only);
}

Comparison compare(const OOKBDomain& domain, const std::string& c1, const std::string& c2,
                   const SolveOptions& opts) {
  require_class(domain, c1);
  require_class(domain, c2);
  AnswerSet as = consistent_answer_set(domain, {{kCompareFirst, c1}, {kCompareSecond, c2}}, opts);
  Comparison out;
  const auto up1 = superclasses(as.atoms, c1);
  const auto up2 = superclasses(as.atoms, c2);
  for (const auto& c : up1) {
    if (up2.count(c))
      out.shared_classes.insert(c);
    else
      out.dist_classes.emplace(c, c1);
  }
  for (const auto& c : up2)
    if (!up1.count(c)) out.dist_classes.emplace(c, c2);

  out.t1 = triples(as.atoms, kCompareFirst);
  out.t2 = triples(as.atoms, kCompareSecond);
  std::set<std::string> dom1, dom2, ran1, ran2;
  for (const auto& [r, p, q] : out.t1) {
    if (p == c1) dom1.insert(r);
    if (q == c1) ran1.insert(r);
  }
  for (const auto& [r, p, q] : out.t2) {
    if (p == c2) dom2.insert(r);
    if (q == c2) ran2.insert(r);
  }
  for (const auto& r : dom1) {
    if (dom2.count(r))
      out.shared_relations.insert(r);
    else
      out.dist_relations.insert({r, c1, std::nullopt, c1});
  }
  for (const auto& r : dom2)
    if (!dom1.count(r)) out.dist_relations.insert({r, c2, std::nullopt, c2});
  for (const auto& r : ran1) {
    if (ran2.count(r))
      out.shared_relations.insert(r);
    else
      out.dist_relations.insert({r, std::nullopt, c1, c1});
  }
  for (const auto& r : ran2)
    if (!ran1.count(r)) out.dist_relations.insert({r, std::nullopt, c2, c2});
  for (const auto& t : out.t1) {
    const auto& [r, p, q] = t;
    if (out.t2.count(t))
      out.shared_relations.insert(r);
    else
      out.dist_relations.insert({r, p, q, c1});
  }
  for (const auto& t : out.t2) {
    const auto& [r, p, q] = t;
    if (!out.t1.count(t)) out.dist_relations.insert({r, p, q, c2});
  }
  return out;
}

namespace {

struct Node {
  Term term;
  std::string label;
  friend auto operator<=>(const Node&, const Node&) = default;
};

class PathSearch {
 public:
  PathSearch(const AtomSet& atoms, const PathQuery& q) : q_(q) {
    for (const auto& a : atoms) {
      if (a.neg) continue;
      if (a.pred == Predicate::instance_of) labels_[a.term_at(0)].push_back(a.symbol_at(1));
      if (a.pred == Predicate::value && q.relations.count(a.symbol_at(0)))
        edges_[a.term_at(1)].emplace_back(a.symbol_at(0), a.term_at(2));
    }
  }

  std::vector<Path> run(const std::vector<Term>& starts) {
    for (int len = 1; len <= q_.max_len; ++len) {
      for (const auto& t : starts) {
        if (!has_label(t, q_.from)) continue;
        Node start{t, q_.from};
        path_ = {start};
        rels_.clear();
        extend(len);
      }
      if (found_.size() >= q_.max_paths) break;
    }
    std::vector<Path> out;
    for (auto& [key, path] : found_) out.push_back(std::move(path));
    std::stable_sort(out.begin(), out.end(), [](const Path& a, const Path& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.steps < b.steps;
    });
    if (out.size() > q_.max_paths) out.resize(q_.max_paths);
    return out;
  }

 private:
  bool has_label(const Term& t, const std::string& c) const {
    auto it = labels_.find(t);
    return it != labels_.end() && std::find(it->second.begin(), it->second.end(), c) != it->second.end();
  }

  void extend(int remaining) {
    const Node& here = path_.back();
    auto it = edges_.find(here.term);
    if (it == edges_.end()) return;
    const auto next_edges = it->second;
    for (const auto& [rel, y] : next_edges) {
      auto lit = labels_.find(y);
      if (lit == labels_.end()) continue;
      for (const auto& d : lit->second) {
        Node next{y, d};
        if (remaining == 1) {
          if (d == q_.to) record(rel, next);
          continue;
        }
        if (d == q_.to || d == q_.from) continue;
        if (std::find(path_.begin(), path_.end(), next) != path_.end()) continue;
        path_.push_back(next);
        rels_.push_back(rel);
        extend(remaining - 1);
        path_.pop_back();
        rels_.pop_back();
      }
    }
  }

  void record(const std::string& rel, const Node& last) {
    Path p;
    for (std::size_t k = 0; k < path_.size(); ++k) {
      p.steps.push_back(path_[k].label);
      p.witness.push_back(path_[k].term);
      p.steps.push_back(k < rels_.size() ? rels_[k] : rel);
    }
    p.steps.push_back(last.label);
    p.witness.push_back(last.term);
    auto [it, fresh] = found_.try_emplace(p.steps, p);
    if (!fresh && p.witness < it->second.witness) it->second = std::move(p);
  }

  const PathQuery& q_;
  std::map<Term, std::vector<std::string>> labels_;
  std::map<Term, std::vector<std::pair<std::string, Term>>> edges_;
  std::vector<Node> path_;
  std::vector<std::string> rels_;
  std::map<std::vector<std::string>, Path> found_;
};

}  // namespace

std::vector<Path> enumerate_paths(const AtomSet& atoms, const std::vector<Term>& starts,
                                  const PathQuery& query) {
  if (query.max_len <= 0) throw Error(ErrorCode::invalid_argument, "max_len must be positive");
  if (query.max_paths == 0) throw Error(ErrorCode::invalid_argument, "max_paths must be positive");
  return PathSearch(atoms, query).run(starts);
}

std::vector<Path> find_paths(const OOKBDomain& domain, const PathQuery& query,
                             const SolveOptions& opts) {
  require_class(domain, query.from);
  require_class(domain, query.to);
  for (const auto& r : query.relations)
    if (!domain.relations.count(r)) throw Error(ErrorCode::invalid_argument, "unknown relation '" + r + "'");
  if (query.max_len <= 0) throw Error(ErrorCode::invalid_argument, "max_len must be positive");
  if (query.max_paths == 0) throw Error(ErrorCode::invalid_argument, "max_paths must be positive");
  AnswerSet as = consistent_answer_set(domain, {{kPathIndividual, query.from}}, opts);
  std::vector<Term> starts;
  if (query.any_start) {
    for (const auto& a : as.atoms)
      if (a.pred == Predicate::instance_of && !a.neg && a.symbol_at(1) == query.from)
        starts.push_back(a.term_at(0));
  } else {
    starts.push_back(kPathIndividual);
  }
  return enumerate_paths(as.atoms, starts, query);
}

}  // namespace ookb
