#include "ookb/term.hpp"

#include <cassert>
#include <functional>

namespace ookb {

Term Term::argument() const {
  assert(!skolems.empty());
  return Term(root, {skolems.begin(), skolems.end() - 1});
}

std::string Term::str() const {
  std::string out;
  for (auto it = skolems.rbegin(); it != skolems.rend(); ++it) {
    out += *it;
    out += '(';
  }
  out += root;
  out.append(skolems.size(), ')');
  return out;
}

Term apply_skolem(std::string_view fn, const Term& arg) {
  Term t = arg;
  t.skolems.emplace_back(fn);
  return t;
}

std::size_t term_depth(const Term& t) noexcept { return t.depth(); }

bool min_depth_less(const Term& a, const Term& b) {
  if (a.depth() != b.depth()) return a.depth() < b.depth();
  return a.str() < b.str();
}

bool rooted_at(const Term& t, std::string_view root) noexcept {
  return t.root == root;
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.root);
  for (const auto& f : t.skolems)
    h ^= std::hash<std::string>{}(f) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace ookb
