#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ookb/atom.hpp"
#include "ookb/domain.hpp"

namespace ookb {

struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
};

struct ParseError {
  enum class Kind { syntax, arity, undeclared_symbol, bad_template, duplicate };

  SourceSpan span;
  Kind kind = Kind::syntax;
  std::string message;

  std::string str() const;  // file:line:col: kind: message
};

std::string_view parse_error_kind_name(ParseError::Kind k) noexcept;

struct ParseOptions {
  /// Declare classes/relations/individuals on first use instead of reporting
  /// undeclared-symbol errors.
  bool implicit_declarations = false;
};

struct Source {
  std::string name;
  std::string text;
};

struct LoadResult {
  OOKBDomain domain;
  std::vector<ParseError> errors;
  bool ok() const noexcept { return errors.empty(); }
};

/// Parses one or more KB sources into a single domain. Duplicate statements
/// are idempotent. A syntax error stops loading; all other errors are
/// collected. `domain` is only meaningful when ok().
LoadResult parse_kb(const std::vector<Source>& sources, const ParseOptions& opts = {});
LoadResult parse_kb(std::string_view text, const ParseOptions& opts = {});

/// Reads the files and parses them as one domain. Unreadable files are
/// reported as syntax errors.
LoadResult load_kb_files(const std::vector<std::string>& paths, const ParseOptions& opts = {});

/// Parses one ground literal such as `value(has_part, i, f1(i))`, optionally
/// prefixed with `-`. Throws Error(load) on syntax or arity problems.
Atom parse_atom(std::string_view text);

/// Parses a sequence of period-terminated ground literals.
AtomSet parse_atom_set(std::string_view text);

enum class Format { text, json };

/// One literal per line, sorted by surface form, each ending in ".\n"; or a
/// JSON array of {"predicate", "args", "neg"} in the same order.
std::string render_atoms(const AtomSet& atoms, Format format);

std::string render_rule(const DescriptiveRule& rule);
std::string render_condition(const SufficientCondition& cond);

/// KB text that parses back to an equal domain.
std::string render_domain(const OOKBDomain& domain);

}  // namespace ookb
