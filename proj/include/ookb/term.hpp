#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ookb {

/// A ground term of the OOKB language: an individual constant with a chain of
/// unary Skolem functions applied to it. `skolems` is ordered innermost first,
/// so `f3(f1(i))` is {root = "i", skolems = {"f1", "f3"}}.
struct Term {
  std::string root;
  std::vector<std::string> skolems;

  Term() = default;
  explicit Term(std::string individual) : root(std::move(individual)) {}
  Term(std::string r, std::vector<std::string> fns)
      : root(std::move(r)), skolems(std::move(fns)) {}

  std::size_t depth() const noexcept { return skolems.size(); }
  bool is_individual() const noexcept { return skolems.empty(); }

  /// The argument of the outermost Skolem application. Requires depth() > 0.
  Term argument() const;

  std::string str() const;

  friend auto operator<=>(const Term&, const Term&) = default;
  friend bool operator==(const Term&, const Term&) = default;
};

Term apply_skolem(std::string_view fn, const Term& arg);
std::size_t term_depth(const Term& t) noexcept;

/// Order used for representative selection: shallower first, then by the
/// rendered surface form.
bool min_depth_less(const Term& a, const Term& b);

/// True if `t` is `root` itself or built from it by Skolem applications.
bool rooted_at(const Term& t, std::string_view root) noexcept;

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

}  // namespace ookb
