#include "ookb/parser.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "json_atoms.hpp"
#include "ookb/error.hpp"

namespace ookb {

std::string_view parse_error_kind_name(ParseError::Kind k) noexcept {
  switch (k) {
    case ParseError::Kind::syntax: return "syntax";
    case ParseError::Kind::arity: return "arity";
    case ParseError::Kind::undeclared_symbol: return "undeclared-symbol";
    case ParseError::Kind::bad_template: return "bad-template";
    case ParseError::Kind::duplicate: return "duplicate";
  }
  return "syntax";
}

std::string ParseError::str() const {
  std::ostringstream os;
  os << span.file << ':' << span.line << ':' << span.column << ": "
     << parse_error_kind_name(kind) << ": " << message;
  return os.str();
}

namespace {

using Kind = ParseError::Kind;

// Thrown inside the loader to abort on syntax errors.
struct SyntaxAbort {
  ParseError error;
};

enum class Tok { ident, var, integer, lparen, rparen, comma, period, implies, minus, end };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(std::string_view text, std::string file) : text_(text), file_(std::move(file)) {}

  Token next() {
    skip_blank();
    Token t;
    t.span = {file_, line_, col_};
    if (pos_ >= text_.size()) return t;
    const char c = text_[pos_];
    if (std::islower(static_cast<unsigned char>(c)) || c == '_') {
      t.kind = Tok::ident;
      t.text = take_word();
    } else if (std::isupper(static_cast<unsigned char>(c))) {
      t.kind = Tok::var;
      t.text = take_word();
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Tok::integer;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        t.text += advance();
    } else if (c == '(') {
      t.kind = Tok::lparen, t.text = advance();
    } else if (c == ')') {
      t.kind = Tok::rparen, t.text = advance();
    } else if (c == ',') {
      t.kind = Tok::comma, t.text = advance();
    } else if (c == '.') {
      t.kind = Tok::period, t.text = advance();
    } else if (c == '-') {
      t.kind = Tok::minus, t.text = advance();
    } else if (c == ':' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
      t.kind = Tok::implies;
      t.text = ":-";
      advance();
      advance();
    } else {
      throw SyntaxAbort{{t.span, Kind::syntax, std::string("unexpected character '") + c + "'"}};
    }
    return t;
  }

 private:
  char advance() {
    const char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '%') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::string take_word() {
    std::string w;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      w += advance();
    return w;
  }

  std::string_view text_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

// Untyped syntax tree for terms and literals.
struct Node {
  enum class Kind { ident, var, integer } kind = Kind::ident;
  std::string name;
  std::vector<Node> args;
  SourceSpan span;
};

struct Literal {
  bool neg = false;
  bool naf = false;
  Node atom;
};

struct Statement {
  Literal head;
  std::vector<Literal> body;
  SourceSpan span;
};

class SyntaxParser {
 public:
  SyntaxParser(std::string_view text, std::string file) : lex_(text, std::move(file)) {
    cur_ = lex_.next();
  }

  bool at_end() const { return cur_.kind == Tok::end; }

  Statement statement() {
    Statement st;
    st.span = cur_.span;
    st.head = literal();
    if (cur_.kind == Tok::implies) {
      shift();
      st.body.push_back(literal());
      while (cur_.kind == Tok::comma) {
        shift();
        st.body.push_back(literal());
      }
    }
    expect(Tok::period, "'.'");
    return st;
  }

  Literal literal() {
    Literal lit;
    if (cur_.kind == Tok::minus) {
      lit.neg = true;
      shift();
    }
    if (cur_.kind == Tok::ident && cur_.text == "not" && !lit.neg) {
      // `not p(...)`: default negation. Distinguish from a constant named not.
      Token save = cur_;
      shift();
      if (cur_.kind == Tok::ident) {
        lit.naf = true;
        lit.atom = term();
        return lit;
      }
      lit.atom = finish_term(save);
      return lit;
    }
    if (cur_.kind != Tok::ident) fail("expected a predicate name");
    lit.atom = term();
    return lit;
  }

  Node term() {
    Token t = cur_;
    shift();
    return finish_term(t);
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::string got = cur_.kind == Tok::end ? "end of input" : "'" + cur_.text + "'";
    throw SyntaxAbort{{cur_.span, Kind::syntax, what + ", got " + got}};
  }

 private:
  Node finish_term(const Token& t) {
    Node n;
    n.span = t.span;
    n.name = t.text;
    switch (t.kind) {
      case Tok::ident: n.kind = Node::Kind::ident; break;
      case Tok::var: n.kind = Node::Kind::var; break;
      case Tok::integer: n.kind = Node::Kind::integer; break;
      default:
        throw SyntaxAbort{{t.span, Kind::syntax, "expected a term, got '" + t.text + "'"}};
    }
    if (n.kind == Node::Kind::ident && cur_.kind == Tok::lparen) {
      shift();
      n.args.push_back(term());
      while (cur_.kind == Tok::comma) {
        shift();
        n.args.push_back(term());
      }
      expect(Tok::rparen, "')'");
    }
    return n;
  }

  void shift() { cur_ = lex_.next(); }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k) fail(std::string("expected ") + what);
    shift();
  }

  Lexer lex_;
  Token cur_;
};

bool is_term_position(Predicate p, std::size_t i) {
  switch (p) {
    case Predicate::instance_of: return i == 0;
    case Predicate::value:
    case Predicate::value_e: return i == 1 || i == 2;
    case Predicate::eq:
    case Predicate::neq:
    case Predicate::substitute: return true;
    case Predicate::is_substituted:
    case Predicate::term: return true;
    case Predicate::constraint: return i == 1;
    default: return false;
  }
}

std::optional<Term> ground_term(const Node& n) {
  if (n.kind != Node::Kind::ident) return std::nullopt;
  if (n.args.empty()) return Term(n.name);
  if (n.args.size() != 1) return std::nullopt;
  auto inner = ground_term(n.args[0]);
  if (!inner) return std::nullopt;
  return apply_skolem(n.name, *inner);
}

std::int64_t to_bound(const Node& n) {
  if (n.kind != Node::Kind::integer)
    throw SyntaxAbort{{n.span, Kind::syntax, "expected a non-negative integer"}};
  if (n.name.size() > 10 || std::stoll(n.name) > std::numeric_limits<std::int32_t>::max())
    throw SyntaxAbort{{n.span, Kind::syntax, "integer bound out of range: " + n.name}};
  return std::stoll(n.name);
}

std::optional<Predicate> lookup_predicate(const Node& n, std::vector<ParseError>* errors) {
  auto p = predicate_from_name(n.name);
  if (!p) {
    errors->push_back({n.span, Kind::syntax, "unknown predicate '" + n.name + "'"});
    return std::nullopt;
  }
  if (predicate_arity(*p) != n.args.size()) {
    errors->push_back({n.span, Kind::arity,
                       n.name + " expects " + std::to_string(predicate_arity(*p)) +
                           " arguments, got " + std::to_string(n.args.size())});
    return std::nullopt;
  }
  return p;
}

// Converts a ground literal; errors are appended and nullopt returned.
std::optional<Atom> ground_atom(const Literal& lit, std::vector<ParseError>* errors) {
  auto p = lookup_predicate(lit.atom, errors);
  if (!p) return std::nullopt;
  Atom a;
  a.pred = *p;
  a.neg = lit.neg;
  for (std::size_t i = 0; i < lit.atom.args.size(); ++i) {
    const Node& arg = lit.atom.args[i];
    if (*p == Predicate::constraint && i == 4) {
      a.args.emplace_back(to_bound(arg));
      continue;
    }
    auto t = ground_term(arg);
    if (!t) {
      errors->push_back({arg.span, arg.kind == Node::Kind::var ? Kind::bad_template : Kind::syntax,
                         "expected a ground term in argument " + std::to_string(i + 1) +
                             " of " + lit.atom.name});
      return std::nullopt;
    }
    if (!is_term_position(*p, i) && t->depth() > 0) {
      errors->push_back({arg.span, Kind::syntax,
                         "argument " + std::to_string(i + 1) + " of " + lit.atom.name +
                             " must be a constant"});
      return std::nullopt;
    }
    a.args.emplace_back(std::move(*t));
  }
  if (*p == Predicate::constraint && !bound_from_name(a.symbol_at(0))) {
    errors->push_back({lit.atom.args[0].span, Kind::syntax,
                       "constraint kind must be min, max or exact"});
    return std::nullopt;
  }
  return a;
}

enum class SymbolKind { class_, relation, individual };

const char* symbol_kind_name(SymbolKind k) {
  switch (k) {
    case SymbolKind::class_: return "class";
    case SymbolKind::relation: return "relation";
    case SymbolKind::individual: return "individual";
  }
  return "";
}

struct Use {
  std::string name;
  SymbolKind kind;
  SourceSpan span;
};

class Loader {
 public:
  explicit Loader(const ParseOptions& opts) : opts_(opts) {}

  void add(const Source& src) {
    SyntaxParser sp(src.text, src.name);
    while (!sp.at_end()) {
      Statement st = sp.statement();
      check_reserved(st.head.atom);
      for (const auto& b : st.body) check_reserved(b.atom);
      if (st.body.empty())
        fact(st);
      else
        rule(st);
    }
  }

  LoadResult finish() {
    resolve_declarations();
    SkolemTable table(result_.domain);
    for (const auto& p : table.problems())
      error(rule_spans_.at(p.rule), Kind::bad_template, p.message + " in '" + render_rule(p.rule) + "'");
    return std::move(result_);
  }

  LoadResult abort(ParseError e) {
    LoadResult r;
    r.errors = std::move(result_.errors);
    r.errors.push_back(std::move(e));
    return r;
  }

 private:
  void error(const SourceSpan& at, Kind kind, std::string msg) {
    result_.errors.push_back({at, kind, std::move(msg)});
  }

  void check_reserved(const Node& n) {
    if (n.kind == Node::Kind::ident && n.name.rfind("__", 0) == 0)
      throw SyntaxAbort{{n.span, Kind::syntax, "identifier '" + n.name + "' is reserved"}};
    for (const auto& a : n.args) check_reserved(a);
  }

  void use(const std::string& name, SymbolKind kind, const SourceSpan& at) {
    uses_.push_back({name, kind, at});
  }

  void declare(const std::string& name, SymbolKind kind, const SourceSpan& at) {
    auto [it, fresh] = declared_.emplace(name, kind);
    if (!fresh && it->second != kind) {
      error(at, Kind::duplicate, "'" + name + "' declared as both " + symbol_kind_name(it->second) +
                                     " and " + symbol_kind_name(kind));
      return;
    }
    auto& d = result_.domain;
    (kind == SymbolKind::class_ ? d.classes
     : kind == SymbolKind::relation ? d.relations
                                    : d.individuals)
        .insert(name);
  }

  void fact(const Statement& st) {
    const Literal& h = st.head;
    if (h.naf) return error(st.span, Kind::bad_template, "default negation is not supported");
    auto atom = ground_atom(h, &result_.errors);
    if (!atom) return;
    if (atom->neg) return error(st.span, Kind::bad_template, "classically negated facts are not supported");
    for (std::size_t i = 0; i < atom->args.size(); ++i) {
      if (const Term* t = std::get_if<Term>(&atom->args[i]); t && t->depth() > 0)
        return error(st.span, Kind::bad_template, "ground facts may only mention individuals");
    }
    const auto& sp = st.span;
    auto s = [&](std::size_t i) { return atom->symbol_at(i); };
    switch (atom->pred) {
      case Predicate::class_: return declare(s(0), SymbolKind::class_, sp);
      case Predicate::relation: return declare(s(0), SymbolKind::relation, sp);
      case Predicate::individual: return declare(s(0), SymbolKind::individual, sp);
      case Predicate::subclass_of:
      case Predicate::disjoint:
        use(s(0), SymbolKind::class_, sp);
        use(s(1), SymbolKind::class_, sp);
        break;
      case Predicate::instance_of:
        use(s(0), SymbolKind::individual, sp);
        use(s(1), SymbolKind::class_, sp);
        break;
      case Predicate::domain:
      case Predicate::range:
        use(s(0), SymbolKind::relation, sp);
        use(s(1), SymbolKind::class_, sp);
        break;
      case Predicate::subrelation_of:
      case Predicate::inverse:
        use(s(0), SymbolKind::relation, sp);
        use(s(1), SymbolKind::relation, sp);
        break;
      case Predicate::compose:
        for (std::size_t i = 0; i < 3; ++i) use(s(i), SymbolKind::relation, sp);
        break;
      case Predicate::value:
        use(s(0), SymbolKind::relation, sp);
        use(s(1), SymbolKind::individual, sp);
        use(s(2), SymbolKind::individual, sp);
        break;
      case Predicate::eq:
      case Predicate::neq:
        if (s(0) == s(1)) return error(sp, Kind::bad_template, "equality between identical terms");
        use(s(0), SymbolKind::individual, sp);
        use(s(1), SymbolKind::individual, sp);
        break;
      case Predicate::constraint:
        use(s(1), SymbolKind::individual, sp);
        use(s(2), SymbolKind::relation, sp);
        use(s(3), SymbolKind::class_, sp);
        break;
      default:
        return error(sp, Kind::bad_template,
                     std::string(predicate_name(atom->pred)) + " is derived and cannot be asserted");
    }
    result_.domain.facts.insert(std::move(*atom));
  }

  // Reads a term over the single template variable `var` as a Skolem chain.
  std::optional<SkolemChain> chain_over(const Node& n, const std::string& var) {
    SkolemChain rev;
    const Node* cur = &n;
    while (cur->kind == Node::Kind::ident && cur->args.size() == 1) {
      rev.push_back(cur->name);
      cur = &cur->args[0];
    }
    if (cur->kind != Node::Kind::var || !cur->args.empty()) return std::nullopt;
    if (cur->name != var) {
      free_var_ = cur->name;
      return std::nullopt;
    }
    return SkolemChain(rev.rbegin(), rev.rend());
  }

  std::optional<std::string> constant(const Node& n) {
    if (n.kind == Node::Kind::ident && n.args.empty()) return n.name;
    return std::nullopt;
  }

  void rule(const Statement& st) {
    for (const auto& b : st.body) {
      if (b.naf) return error(b.atom.span, Kind::bad_template, "default negation is not supported in domain rules");
      if (b.neg) return error(b.atom.span, Kind::bad_template, "classical negation is not supported in rule bodies");
    }
    if (st.head.naf || st.head.neg)
      return error(st.span, Kind::bad_template, "rule heads must be positive literals");
    std::vector<ParseError> local;
    if (!lookup_predicate(st.head.atom, &local)) {
      for (auto& e : local) result_.errors.push_back(std::move(e));
      return;
    }
    for (const auto& b : st.body) {
      if (!lookup_predicate(b.atom, &local)) {
        for (auto& e : local) result_.errors.push_back(std::move(e));
        return;
      }
    }
    const Node& head = st.head.atom;
    const bool bare_member_head = head.name == "instance_of" &&
                                  head.args[0].kind == Node::Kind::var && head.args[0].args.empty();
    if (!bare_member_head && st.body.size() == 1 && st.body[0].atom.name == "instance_of" &&
        st.body[0].atom.args[0].kind == Node::Kind::var) {
      template_rule(st);
    } else if (bare_member_head) {
      sufficient_condition(st);
    } else {
      error(st.span, Kind::bad_template, "rule does not match any OOKB template");
    }
  }

  void template_rule(const Statement& st) {
    const Node& guard = st.body[0].atom;
    const std::string var = guard.args[0].name;
    auto owner = constant(guard.args[1]);
    if (!owner || !guard.args[0].args.empty())
      return error(st.span, Kind::bad_template, "template guard must be instance_of(X, class)");
    const Node& h = st.head.atom;
    free_var_.clear();
    auto bad = [&](const std::string& why) {
      std::string msg = why;
      if (!free_var_.empty()) msg = "free variable " + free_var_ + " in template head";
      error(h.span, Kind::bad_template, msg);
    };
    DescriptiveRule r;
    r.owner_class = *owner;
    const auto& sp = st.span;
    use(*owner, SymbolKind::class_, sp);
    if (h.name == "value") {
      auto rel = constant(h.args[0]);
      auto x = chain_over(h.args[1], var);
      auto y = x ? chain_over(h.args[2], var) : std::nullopt;
      if (!rel || !x || !y) return bad("value template must be value(r, t1, t2) over " + var);
      if (x->empty() && y->empty()) return bad("value template needs a Skolem term");
      if (*x == *y) return bad("value template relates a term to itself");
      use(*rel, SymbolKind::relation, sp);
      r.head = ValueHead{*rel, *x, *y};
    } else if (h.name == "instance_of") {
      auto t = chain_over(h.args[0], var);
      auto c = constant(h.args[1]);
      if (!t || !c || t->empty()) return bad("instance_of template must be instance_of(f(X), class)");
      use(*c, SymbolKind::class_, sp);
      r.head = MemberHead{*t, *c};
    } else if (h.name == "eq" || h.name == "neq") {
      auto a = chain_over(h.args[0], var);
      auto b = a ? chain_over(h.args[1], var) : std::nullopt;
      if (!a || !b) return bad(h.name + " template must relate terms over " + var);
      if (*a == *b) return bad(h.name + " template relates a term to itself");
      r.head = EqualityHead{h.name == "neq", *a, *b};
    } else if (h.name == "constraint") {
      auto kind = constant(h.args[0]);
      auto t = chain_over(h.args[1], var);
      auto rel = constant(h.args[2]);
      auto d = constant(h.args[3]);
      if (!kind || !bound_from_name(*kind) || !t || !rel || !d)
        return bad("constraint template must be constraint(min|max|exact, t, r, class, n)");
      use(*rel, SymbolKind::relation, sp);
      use(*d, SymbolKind::class_, sp);
      r.head = ConstraintHead{*bound_from_name(*kind), *t, *rel, *d, to_bound(h.args[4])};
    } else {
      return bad("predicate " + h.name + " cannot head a template");
    }
    rule_spans_.emplace(r, sp);
    result_.domain.rules.insert(std::move(r));
  }

  void sufficient_condition(const Statement& st) {
    const Node& h = st.head.atom;
    auto target = constant(h.args[1]);
    if (!target) return error(h.span, Kind::bad_template, "sufficient condition must conclude instance_of(X, class)");
    std::map<std::string, std::string> rename{{h.args[0].name, "X"}};
    SufficientCondition sc;
    sc.target_class = *target;
    sc.head_var = "X";
    use(*target, SymbolKind::class_, st.span);
    bool head_var_seen = false;
    for (const auto& lit : st.body) {
      const Node& a = lit.atom;
      auto p = *predicate_from_name(a.name);
      if (p != Predicate::value && p != Predicate::instance_of && p != Predicate::constraint)
        return error(a.span, Kind::bad_template, "sufficient condition bodies allow value, instance_of and constraint literals");
      PatternAtom pa;
      pa.pred = p;
      for (std::size_t i = 0; i < a.args.size(); ++i) {
        const Node& n = a.args[i];
        if (p == Predicate::constraint && i == 4) {
          pa.args.emplace_back(to_bound(n));
          continue;
        }
        if (!n.args.empty())
          return error(n.span, Kind::bad_template, "sufficient condition bodies may not contain Skolem terms");
        if (n.kind == Node::Kind::integer)
          return error(n.span, Kind::syntax, "unexpected integer");
        const bool term_pos = is_term_position(p, i);
        if (n.kind == Node::Kind::var) {
          if (!term_pos) return error(n.span, Kind::bad_template, "variables are only allowed in term positions");
          auto [it, fresh] = rename.emplace(n.name, "Y" + std::to_string(rename.size()));
          if (it->second == "X") head_var_seen = true;
          pa.args.emplace_back(Variable{it->second});
          continue;
        }
        SymbolKind k = term_pos ? SymbolKind::individual
                       : (p == Predicate::instance_of || (p == Predicate::constraint && i == 3))
                           ? SymbolKind::class_
                           : SymbolKind::relation;
        if (p == Predicate::constraint && i == 0) {
          if (!bound_from_name(n.name))
            return error(n.span, Kind::syntax, "constraint kind must be min, max or exact");
        } else {
          use(n.name, k, st.span);
        }
        pa.args.emplace_back(Term(n.name));
      }
      sc.body.push_back(std::move(pa));
    }
    if (!head_var_seen)
      return error(st.span, Kind::bad_template, "head variable must occur in the body");
    result_.domain.sufficient_conditions.insert(std::move(sc));
  }

  void resolve_declarations() {
    for (const auto& u : uses_) {
      auto it = declared_.find(u.name);
      if (it != declared_.end() && it->second == u.kind) continue;
      if (opts_.implicit_declarations) {
        declare(u.name, u.kind, u.span);
        continue;
      }
      if (it != declared_.end())
        error(u.span, Kind::undeclared_symbol, "'" + u.name + "' is declared as " +
                                                   symbol_kind_name(it->second) + ", used as " +
                                                   symbol_kind_name(u.kind));
      else
        error(u.span, Kind::undeclared_symbol,
              std::string("undeclared ") + symbol_kind_name(u.kind) + " '" + u.name + "'");
    }
  }

  ParseOptions opts_;
  LoadResult result_;
  std::map<std::string, SymbolKind> declared_;
  std::vector<Use> uses_;
  std::map<DescriptiveRule, SourceSpan> rule_spans_;
  std::string free_var_;
};

}  // namespace

LoadResult parse_kb(const std::vector<Source>& sources, const ParseOptions& opts) {
  Loader loader(opts);
  try {
    for (const auto& s : sources) loader.add(s);
  } catch (SyntaxAbort& a) {
    return loader.abort(std::move(a.error));
  }
  return loader.finish();
}

LoadResult parse_kb(std::string_view text, const ParseOptions& opts) {
  return parse_kb(std::vector<Source>{{"<input>", std::string(text)}}, opts);
}

LoadResult load_kb_files(const std::vector<std::string>& paths, const ParseOptions& opts) {
  std::vector<Source> sources;
  for (const auto& p : paths) {
    std::ifstream in(p, std::ios::binary);
    if (!in) {
      LoadResult r;
      r.errors.push_back({{p, 1, 1}, ParseError::Kind::syntax, "cannot read file"});
      return r;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    sources.push_back({p, ss.str()});
  }
  return parse_kb(sources, opts);
}

Atom parse_atom(std::string_view text) {
  try {
    SyntaxParser sp(text, "<atom>");
    Literal lit = sp.literal();
    if (!sp.at_end()) sp.fail("expected end of atom");
    if (lit.naf) throw Error(ErrorCode::load, "default negation is not a ground literal");
    std::vector<ParseError> errors;
    auto a = ground_atom(lit, &errors);
    if (!a) throw Error(ErrorCode::load, errors.front().str());
    return *a;
  } catch (const SyntaxAbort& e) {
    throw Error(ErrorCode::load, e.error.str());
  }
}

AtomSet parse_atom_set(std::string_view text) {
  AtomSet out;
  try {
    SyntaxParser sp(text, "<atoms>");
    while (!sp.at_end()) {
      Statement st = sp.statement();
      if (!st.body.empty() || st.head.naf) throw Error(ErrorCode::load, "expected ground literals only");
      std::vector<ParseError> errors;
      auto a = ground_atom(st.head, &errors);
      if (!a) throw Error(ErrorCode::load, errors.front().str());
      out.insert(std::move(*a));
    }
  } catch (const SyntaxAbort& e) {
    throw Error(ErrorCode::load, e.error.str());
  }
  return out;
}

std::string render_atoms(const AtomSet& atoms, Format format) {
  std::vector<std::pair<std::string, const Atom*>> lines;
  lines.reserve(atoms.size());
  for (const auto& a : atoms) lines.emplace_back(a.str(), &a);
  std::sort(lines.begin(), lines.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  if (format == Format::text) {
    std::string out;
    for (const auto& [text, atom] : lines) {
      out += text;
      out += ".\n";
    }
    return out;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [text, atom] : lines) arr.push_back(atom_json(*atom));
  return arr.dump();
}

namespace {

std::string chain_str(const SkolemChain& chain) {
  return Term("X", chain).str();
}

std::string pattern_arg_str(const PatternArg& a) {
  if (const auto* v = std::get_if<Variable>(&a)) return v->name;
  if (const auto* t = std::get_if<Term>(&a)) return t->str();
  return std::to_string(std::get<std::int64_t>(a));
}

}  // namespace

std::string render_rule(const DescriptiveRule& rule) {
  struct Visitor {
    std::string operator()(const ValueHead& h) const {
      return "value(" + h.relation + ", " + chain_str(h.subject) + ", " + chain_str(h.object) + ")";
    }
    std::string operator()(const MemberHead& h) const {
      return "instance_of(" + chain_str(h.term) + ", " + h.class_name + ")";
    }
    std::string operator()(const EqualityHead& h) const {
      return std::string(h.negated ? "neq(" : "eq(") + chain_str(h.lhs) + ", " + chain_str(h.rhs) + ")";
    }
    std::string operator()(const ConstraintHead& h) const {
      return "constraint(" + std::string(bound_name(h.bound)) + ", " + chain_str(h.term) + ", " +
             h.relation + ", " + h.filler + ", " + std::to_string(h.count) + ")";
    }
  };
  return std::visit(Visitor{}, rule.head) + " :- instance_of(X, " + rule.owner_class + ").";
}

std::string render_condition(const SufficientCondition& cond) {
  std::string out = "instance_of(" + cond.head_var + ", " + cond.target_class + ") :- ";
  for (std::size_t i = 0; i < cond.body.size(); ++i) {
    if (i) out += ", ";
    const auto& lit = cond.body[i];
    out += predicate_name(lit.pred);
    out += '(';
    for (std::size_t j = 0; j < lit.args.size(); ++j) {
      if (j) out += ", ";
      out += pattern_arg_str(lit.args[j]);
    }
    out += ')';
  }
  return out + ".";
}

std::string render_domain(const OOKBDomain& d) {
  std::string out;
  for (const auto& c : d.classes) out += "class(" + c + ").\n";
  for (const auto& r : d.relations) out += "relation(" + r + ").\n";
  for (const auto& i : d.individuals) out += "individual(" + i + ").\n";
  for (const auto& a : d.facts) out += a.str() + ".\n";
  for (const auto& r : d.rules) out += render_rule(r) + "\n";
  for (const auto& s : d.sufficient_conditions) out += render_condition(s) + "\n";
  return out;
}

}  // namespace ookb
