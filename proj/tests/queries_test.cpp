#include <gtest/gtest.h>

#include <random>

#include "ookb/error.hpp"
#include "ookb/parser.hpp"
#include "ookb/queries.hpp"
#include "support/oracle.hpp"
#include "support/path_oracle.hpp"

using namespace ookb;

namespace {

OOKBDomain load(const std::string& text) {
  ParseOptions opts;
  opts.implicit_declarations = true;
  auto r = parse_kb(text, opts);
  if (!r.ok()) throw std::runtime_error(r.errors.front().str());
  return r.domain;
}

OOKBDomain load_file(const std::string& name) {
  auto r = load_kb_files({std::string(OOKB_TEST_DATA) + "/" + name});
  if (!r.ok()) throw std::runtime_error(r.errors.front().str());
  return r.domain;
}

Atom A(const std::string& s) { return parse_atom(s); }
Term T(const std::string& s) { return parse_atom("term(" + s + ")").term_at(0); }

const char* kOrganelles =
    "class(organelle). class(mitochondrion). class(chloroplast). class(membrane).\n"
    "class(thylakoid). class(chromosome). class(ribosome). class(protein). class(rna).\n"
    "relation(has_part).\n"
    "subclass_of(mitochondrion, organelle). subclass_of(chloroplast, organelle).\n"
    "value(has_part, X, f1(X)) :- instance_of(X, mitochondrion).\n"
    "instance_of(f1(X), membrane) :- instance_of(X, mitochondrion).\n"
    "value(has_part, X, f2(X)) :- instance_of(X, chloroplast).\n"
    "instance_of(f2(X), membrane) :- instance_of(X, chloroplast).\n"
    "value(has_part, X, f3(X)) :- instance_of(X, chloroplast).\n"
    "instance_of(f3(X), thylakoid) :- instance_of(X, chloroplast).\n"
    "value(has_part, X, f4(X)) :- instance_of(X, chromosome).\n"
    "instance_of(f4(X), protein) :- instance_of(X, chromosome).\n"
    "value(has_part, X, f5(X)) :- instance_of(X, ribosome).\n"
    "instance_of(f5(X), rna) :- instance_of(X, ribosome).\n";

}  // namespace

TEST(Subsumes, Reflexive) {
  auto d = load_file("cell.ookb");
  for (const auto& c : d.classes) EXPECT_TRUE(subsumes(d, c, c)) << c;
}

TEST(Subsumes, Taxonomy) {
  auto d = load_file("cell.ookb");
  EXPECT_TRUE(subsumes(d, "eukaryotic_cell", "cell"));
  EXPECT_FALSE(subsumes(d, "cell", "eukaryotic_cell"));
  EXPECT_FALSE(subsumes(d, "cell", "nucleus"));
}

TEST(Subsumes, ThroughSufficientCondition) {
  auto d = load(
      "class(enzyme_host). class(protein). class(catalyst). relation(has_part).\n"
      "value(has_part, X, f(X)) :- instance_of(X, enzyme_host).\n"
      "instance_of(f(X), protein) :- instance_of(X, enzyme_host).\n"
      "instance_of(X, catalyst) :- value(has_part, X, Y), instance_of(Y, protein).\n");
  EXPECT_TRUE(subsumes(d, "enzyme_host", "catalyst"));
  EXPECT_FALSE(subsumes(d, "enzyme_host", "catalyst", SolveOptions{0}));
  auto program = ground_program(d, {{kSubsumeIndividual, "enzyme_host"}});
  auto all = oracle::enumerate_answer_sets(program);
  ASSERT_FALSE(all.empty());
  for (const auto& m : all) EXPECT_TRUE(m.contains(A("instance_of(__q1_i, catalyst)")));
  for (const auto& a : d.facts) EXPECT_NE(a.pred, Predicate::subclass_of);
}

TEST(Subsumes, Errors) {
  auto d = load_file("cell.ookb");
  EXPECT_THROW(subsumes(d, "cell", "unicorn"), Error);
  auto bad = load("class(a). class(b). class(c). disjoint(b, c). subclass_of(a, b). subclass_of(a, c).");
  try {
    subsumes(bad, "a", "b");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::inconsistent);
  }
}

TEST(Describe, EmptyDescription) {
  auto d = load("class(lonely).");
  auto desc = describe(d, "lonely");
  EXPECT_EQ(desc.member_of, (std::set<std::string>{"lonely"}));
  EXPECT_TRUE(desc.values.empty());
}

TEST(Describe, EukaryoticCell) {
  auto d = load_file("cell.ookb");
  auto desc = describe(d, "eukaryotic_cell");
  EXPECT_TRUE(desc.member_of.count("eukaryotic_cell"));
  EXPECT_TRUE(desc.member_of.count("cell"));
  const Term i = kDescribeIndividual;
  EXPECT_TRUE(desc.values.count({"has_part", i, apply_skolem("f1_eukaryotic_cell", i)}));
  EXPECT_TRUE(desc.values.count({"has_part", i, apply_skolem("f1_cell", i)}));
  EXPECT_TRUE(desc.values.count({"is_inside", apply_skolem("f2", i), apply_skolem("f1_eukaryotic_cell", i)}));
  EXPECT_EQ(desc.values.size(), 5u);

  auto program = ground_program(d, {{i, "eukaryotic_cell"}});
  auto all = oracle::enumerate_answer_sets(program);
  ASSERT_EQ(all.size(), 1u);
  std::set<ValueTriple> expected;
  for (const auto& a : all[0])
    if (a.pred == Predicate::value) expected.emplace(a.symbol_at(0), a.term_at(1), a.term_at(2));
  EXPECT_EQ(desc.values, expected);
}

TEST(Describe, MscFilter) {
  auto desc = describe(load_file("cell.ookb"), "eukaryotic_cell", {}, true);
  EXPECT_EQ(desc.member_of, (std::set<std::string>{"eukaryotic_cell"}));
}

TEST(Describe, MonotoneInDepth) {
  auto d = load(
      "class(person). relation(has_parent).\n"
      "value(has_parent, X, f(X)) :- instance_of(X, person).\n"
      "instance_of(f(X), person) :- instance_of(X, person).\n");
  Description prev;
  for (int k = 0; k < 5; ++k) {
    auto desc = describe(d, "person", SolveOptions{k});
    for (const auto& c : prev.member_of) EXPECT_TRUE(desc.member_of.count(c));
    for (const auto& v : prev.values) EXPECT_TRUE(desc.values.count(v));
    EXPECT_EQ(desc.values.size(), static_cast<std::size_t>(k));
    prev = desc;
  }
}

TEST(MscOf, Cases) {
  AtomSet s;
  s.insert(A("subclass_of(eukaryotic_cell, cell)"));
  s.insert(A("instance_of(i, cell)"));
  s.insert(A("instance_of(i, eukaryotic_cell)"));
  s.insert(A("instance_of(j, red)"));
  s.insert(A("instance_of(j, round)"));
  EXPECT_EQ(msc_of(s, T("i")), (std::set<std::string>{"eukaryotic_cell"}));
  EXPECT_EQ(msc_of(s, T("j")), (std::set<std::string>{"red", "round"}));
  EXPECT_TRUE(msc_of(s, T("k")).empty());
}

TEST(Compare, SameClass) {
  auto d = load(kOrganelles);
  auto cmp = compare(d, "chloroplast", "chloroplast");
  EXPECT_TRUE(cmp.dist_classes.empty());
  EXPECT_TRUE(cmp.dist_relations.empty());
  EXPECT_EQ(cmp.shared_classes, (std::set<std::string>{"organelle"}));
  EXPECT_EQ(cmp.shared_relations, (std::set<std::string>{"has_part"}));
}

TEST(Compare, ChromosomeRibosome) {
  auto cmp = compare(load(kOrganelles), "chromosome", "ribosome");
  EXPECT_TRUE(cmp.dist_relations.count({"has_part", "chromosome", "protein", "chromosome"}));
  EXPECT_TRUE(cmp.dist_relations.count({"has_part", "ribosome", "rna", "ribosome"}));
  EXPECT_TRUE(cmp.shared_classes.empty());
}

TEST(Compare, SharedSuperclassAgainstOracle) {
  auto d = load(kOrganelles);
  auto cmp = compare(d, "mitochondrion", "chloroplast");
  EXPECT_TRUE(cmp.shared_classes.count("organelle"));

  auto program = ground_program(d, {{kCompareFirst, "mitochondrion"}, {kCompareSecond, "chloroplast"}});
  auto all = oracle::enumerate_answer_sets(program);
  ASSERT_EQ(all.size(), 1u);
  const AtomSet& m = all[0];
  auto supers = [&](const std::string& c) {
    std::set<std::string> out;
    for (const auto& a : m)
      if (a.pred == Predicate::subclass_of && a.symbol_at(0) == c) out.insert(a.symbol_at(1));
    return out;
  };
  auto classes = [&](const Term& t) {
    std::set<std::string> out;
    for (const auto& a : m)
      if (a.pred == Predicate::instance_of && !a.neg && a.term_at(0) == t) out.insert(a.symbol_at(1));
    std::set<std::string> specific;
    for (const auto& p : out) {
      bool keep = true;
      for (const auto& q : out)
        if (q != p && m.contains(make_atom(Predicate::subclass_of, {sym(q), sym(p)}))) keep = false;
      if (keep) specific.insert(p);
    }
    return specific;
  };
  auto T_of = [&](const Term& i) {
    std::set<RelationTriple> out;
    for (const auto& a : m) {
      if (a.pred != Predicate::value || a.term_at(1).root != i.root || a.term_at(2).root != i.root) continue;
      for (const auto& p : classes(a.term_at(1)))
        for (const auto& q : classes(a.term_at(2))) out.emplace(a.symbol_at(0), p, q);
    }
    return out;
  };
  std::set<std::string> shared;
  for (const auto& c : supers("mitochondrion"))
    if (supers("chloroplast").count(c)) shared.insert(c);
  EXPECT_EQ(cmp.shared_classes, shared);
  EXPECT_EQ(cmp.t1, T_of(kCompareFirst));
  EXPECT_EQ(cmp.t2, T_of(kCompareSecond));
  EXPECT_TRUE(cmp.dist_relations.count({"has_part", "chloroplast", "thylakoid", "chloroplast"}));
  EXPECT_TRUE(cmp.dist_relations.count({"has_part", "chloroplast", "membrane", "chloroplast"}));
  EXPECT_FALSE(cmp.dist_relations.count({"has_part", "chloroplast", std::nullopt, "chloroplast"}));
  EXPECT_TRUE(cmp.shared_relations.count("has_part"));
}

TEST(Compare, Symmetric) {
  auto d = load(kOrganelles);
  const std::vector<std::string> names{"organelle", "mitochondrion", "chloroplast", "chromosome", "ribosome"};
  for (const auto& a : names) {
    for (const auto& b : names) {
      auto ab = compare(d, a, b);
      auto ba = compare(d, b, a);
      EXPECT_EQ(ab.shared_classes, ba.shared_classes);
      EXPECT_EQ(ab.dist_classes, ba.dist_classes);
      EXPECT_EQ(ab.shared_relations, ba.shared_relations);
      EXPECT_EQ(ab.dist_relations, ba.dist_relations);
      EXPECT_EQ(ab.t1, ba.t2);
      for (const auto& [c, owner] : ab.dist_classes) EXPECT_FALSE(ab.shared_classes.count(c));
    }
  }
}

TEST(FindPaths, NoSelfLoop) {
  auto d = load("class(a). relation(r). instance_of(f(X), b) :- instance_of(X, a). value(r, X, f(X)) :- instance_of(X, a).");
  PathQuery q{"a", "a", {"r"}, 3};
  EXPECT_TRUE(find_paths(d, q).empty());
}

TEST(FindPaths, EukaryoticCellToNucleus) {
  PathQuery q{"eukaryotic_cell", "nucleus", {"has_part"}, 3};
  auto paths = find_paths(load_file("cell.ookb"), q);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].steps, (std::vector<std::string>{"eukaryotic_cell", "has_part", "nucleus"}));
  EXPECT_EQ(paths[0].witness, (std::vector<Term>{kPathIndividual, apply_skolem("f1_eukaryotic_cell", kPathIndividual)}));
}

TEST(FindPaths, Chain) {
  auto d = load(
      "class(a). class(b). class(c). relation(r).\n"
      "value(r, X, f(X)) :- instance_of(X, a).\n"
      "instance_of(f(X), b) :- instance_of(X, a).\n"
      "value(r, f(X), g(X)) :- instance_of(X, a).\n"
      "instance_of(g(X), c) :- instance_of(X, a).\n");
  PathQuery q{"a", "c", {"r"}, 4};
  auto paths = find_paths(d, q);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].steps, (std::vector<std::string>{"a", "r", "b", "r", "c"}));
  auto as = answer_set(d, {{kPathIndividual, "a"}});
  EXPECT_EQ(oracle::segment_paths(as.atoms, {kPathIndividual}, q),
            (std::set<std::vector<std::string>>{paths[0].steps}));
  q.max_len = 1;
  EXPECT_TRUE(find_paths(d, q).empty());
}

TEST(FindPaths, Errors) {
  auto d = load_file("cell.ookb");
  EXPECT_THROW(find_paths(d, {"cell", "nope", {"has_part"}, 3}), Error);
  EXPECT_THROW(find_paths(d, {"cell", "nucleus", {"eats"}, 3}), Error);
  EXPECT_THROW(find_paths(d, {"cell", "nucleus", {"has_part"}, 0}), Error);
  PathQuery q{"cell", "nucleus", {"has_part"}, 3};
  q.max_paths = 0;
  EXPECT_THROW(find_paths(d, q), Error);
}

TEST(FindPaths, ShortestFirstAndTruncated) {
  auto d = load(
      "class(a). class(b). class(c). relation(r). relation(s).\n"
      "value(r, X, f(X)) :- instance_of(X, a).\n"
      "instance_of(f(X), b) :- instance_of(X, a).\n"
      "value(s, f(X), g(X)) :- instance_of(X, a).\n"
      "instance_of(g(X), c) :- instance_of(X, a).\n"
      "value(s, X, g(X)) :- instance_of(X, a).\n"
      "value(r, X, g(X)) :- instance_of(X, a).\n");
  PathQuery q{"a", "c", {"r", "s"}, 3};
  auto paths = find_paths(d, q);
  ASSERT_EQ(paths.size(), 3u);
  EXPECT_EQ(paths[0].steps, (std::vector<std::string>{"a", "r", "c"}));
  EXPECT_EQ(paths[1].steps, (std::vector<std::string>{"a", "s", "c"}));
  EXPECT_EQ(paths[2].length(), 2u);
  q.max_paths = 2;
  EXPECT_EQ(find_paths(d, q).size(), 2u);
}

TEST(FindPaths, RandomGraphsMatchSegmentOracle) {
  std::mt19937_64 rng(2024);
  const std::vector<std::string> classes{"a", "b", "c", "d"};
  int checked = 0;
  for (int round = 0; round < 120; ++round) {
    oracle::ValueGraph g = oracle::random_value_graph(rng);
    PathQuery q;
    q.from = classes[rng() % 4];
    q.to = classes[rng() % 4];
    q.relations = {"r0", "r1", "r2", "r3"};
    if (rng() % 2) q.relations.erase("r" + std::to_string(rng() % 4));
    q.max_len = 1 + static_cast<int>(rng() % 5);
    std::vector<Term> starts = rng() % 2 ? std::vector<Term>{g.terms[0]} : g.terms;
    std::set<std::vector<std::string>> expected;
    try {
      expected = oracle::segment_paths(g.atoms, starts, q);
    } catch (const std::length_error&) {
      continue;
    }
    std::set<std::vector<std::string>> got;
    for (const auto& p : enumerate_paths(g.atoms, starts, q)) {
      EXPECT_TRUE(got.insert(p.steps).second);
      for (std::size_t k = 0; k + 1 < p.witness.size(); ++k)
        EXPECT_TRUE(g.atoms.contains(make_atom(Predicate::value, {sym(p.steps[2 * k + 1]), p.witness[k], p.witness[k + 1]})));
    }
    EXPECT_EQ(got, expected) << "round " << round;
    ++checked;
  }
  EXPECT_GE(checked, 80);
}
