#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ookb/ookb.h"

namespace {

enum Exit { ok = 0, negative = 1, usage = 2, load_error = 3, resource_cap = 4 };

int exit_code(ookb_status s) {
  switch (s) {
    case OOKB_OK: return ok;
    case OOKB_FALSE:
    case OOKB_ERR_INCONSISTENT:
    case OOKB_ERR_INTERNAL: return negative;
    case OOKB_ERR_INVALID_ARGUMENT:
    case OOKB_ERR_INVARIANT_FAMILY: return usage;
    case OOKB_ERR_LOAD: return load_error;
    case OOKB_ERR_RESOURCE_CAP: return resource_cap;
  }
  return negative;
}

struct Config {
  std::vector<std::string> kb_paths;
  int max_depth = 1;
  std::uint64_t universe_cap = 1000000;
  std::string policy = "min-depth";
  std::uint64_t seed = 0;
  std::string format = "text";
  bool implicit_decl = false;

  ookb_format fmt() const { return format == "json" ? OOKB_FORMAT_JSON : OOKB_FORMAT_TEXT; }

  ookb_options options() const {
    ookb_options o;
    ookb_options_init(&o);
    o.max_depth = max_depth;
    o.universe_cap = universe_cap;
    o.policy = policy == "random" ? OOKB_POLICY_RANDOM : OOKB_POLICY_MIN_DEPTH;
    o.seed = seed;
    o.format = fmt();
    return o;
  }
};

class Output {
 public:
  ~Output() { ookb_string_free(text_); }
  char** slot() { return &text_; }
  void print() const {
    if (text_) std::fputs(text_, stdout);
  }

 private:
  char* text_ = nullptr;
};

int finish(ookb_status s, const Output& out) {
  out.print();
  if (s != OOKB_OK && s != OOKB_FALSE) std::fputs(ookb_last_error(), stderr);
  return exit_code(s);
}

struct Kb {
  ookb_kb* handle = nullptr;
  ~Kb() { ookb_kb_free(handle); }
};

ookb_status load(const Config& cfg, Kb& kb) {
  std::vector<const char*> paths;
  for (const auto& p : cfg.kb_paths) paths.push_back(p.c_str());
  return ookb_kb_load_files(paths.data(), paths.size(), cfg.implicit_decl, cfg.fmt(), &kb.handle);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Object-oriented knowledge base reasoner"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", ookb_version());

  Config cfg;
  app.add_option("-k,--kb", cfg.kb_paths, "KB file; repeat to concatenate")->check(CLI::ExistingFile);
  app.add_option("--depth", cfg.max_depth, "Skolem depth bound")->envname("OOKB_MAX_DEPTH")->check(CLI::NonNegativeNumber);
  app.add_option("--universe-cap", cfg.universe_cap, "Maximum number of ground terms")
      ->envname("OOKB_UNIVERSE_CAP")
      ->check(CLI::PositiveNumber);
  app.add_option("--policy", cfg.policy, "Representative policy")->check(CLI::IsMember({"min-depth", "random"}));
  app.add_option("--seed", cfg.seed, "Seed for the random policy and the generator");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--implicit-decl", cfg.implicit_decl, "Declare symbols on first use");

  auto* load_cmd = app.add_subcommand("load", "Validate KB files");
  auto* stats_cmd = app.add_subcommand("stats", "Count KB statements by category");
  auto* solve_cmd = app.add_subcommand("solve", "Compute the answer set and constraint report");
  auto* ground_cmd = app.add_subcommand("ground", "Print the ground program");

  std::string c1, c2;
  auto* subsume_cmd = app.add_subcommand("subsume", "Is every C1 a C2?");
  subsume_cmd->add_option("C1", c1)->required();
  subsume_cmd->add_option("C2", c2)->required();

  bool msc = false;
  auto* describe_cmd = app.add_subcommand("describe", "Describe a class");
  describe_cmd->add_option("C", c1)->required();
  describe_cmd->add_flag("--msc", msc, "Report only the most specific classes");

  auto* compare_cmd = app.add_subcommand("compare", "Similarities and differences of two classes");
  compare_cmd->add_option("C1", c1)->required();
  compare_cmd->add_option("C2", c2)->required();

  std::vector<std::string> rels;
  int max_len = 3;
  std::size_t max_paths = 0;
  bool any_start = false;
  auto* path_cmd = app.add_subcommand("path", "Relationship paths from C1 to C2");
  path_cmd->add_option("C1", c1)->required();
  path_cmd->add_option("C2", c2)->required();
  path_cmd->add_option("--rel", rels, "Relations to follow (default all)")->delimiter(',');
  path_cmd->add_option("--max-len", max_len, "Maximum number of edges")->check(CLI::PositiveNumber);
  path_cmd->add_option("--max-paths", max_paths, "Maximum number of paths (0 = unlimited)");
  path_cmd->add_flag("--any-start", any_start, "Start from any instance of C1");

  std::string literals;
  bool credulous = false;
  auto* entails_cmd = app.add_subcommand("entails", "Check ground literals against the KB");
  entails_cmd->add_option("LITERALS", literals, "Period-terminated ground literals")->required();
  entails_cmd->add_flag("--credulous", credulous, "Entailed in some answer set");

  ookb_gen_profile profile;
  ookb_gen_profile_init(&profile);
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic KB");
  gen_cmd->add_option("--classes", profile.n_classes)->check(CLI::PositiveNumber);
  gen_cmd->add_option("--relations", profile.n_relations)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--skolems", profile.skolems_per_rule)->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--eq-density", profile.eq_density)->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--cycle-prob", profile.cycle_prob)->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  Output out;
  if (gen_cmd->parsed()) {
    profile.seed = cfg.seed;
    return finish(ookb_generate(&profile, out.slot()), out);
  }

  if (cfg.kb_paths.empty()) {
    std::fputs("error: at least one -k KB file is required\n", stderr);
    return usage;
  }
  Kb kb;
  if (ookb_status s = load(cfg, kb); s != OOKB_OK) return finish(s, out);

  const ookb_options opts = cfg.options();
  if (load_cmd->parsed()) {
    std::fputs(cfg.fmt() == OOKB_FORMAT_JSON ? "{\"ok\":true}\n" : "ok\n", stdout);
    return ok;
  }
  if (stats_cmd->parsed()) return finish(ookb_stats(kb.handle, cfg.fmt(), out.slot()), out);
  if (solve_cmd->parsed()) return finish(ookb_solve(kb.handle, &opts, out.slot()), out);
  if (ground_cmd->parsed()) return finish(ookb_ground(kb.handle, &opts, out.slot()), out);
  if (subsume_cmd->parsed()) return finish(ookb_subsume(kb.handle, c1.c_str(), c2.c_str(), &opts, out.slot()), out);
  if (describe_cmd->parsed()) return finish(ookb_describe(kb.handle, c1.c_str(), msc, &opts, out.slot()), out);
  if (compare_cmd->parsed()) return finish(ookb_compare(kb.handle, c1.c_str(), c2.c_str(), &opts, out.slot()), out);
  if (path_cmd->parsed()) {
    std::vector<const char*> rel_ptrs;
    for (const auto& r : rels) rel_ptrs.push_back(r.c_str());
    ookb_path_query q{c1.c_str(), c2.c_str(), rel_ptrs.data(), rel_ptrs.size(), max_len, max_paths, any_start};
    return finish(ookb_paths(kb.handle, &q, &opts, out.slot(), nullptr), out);
  }
  if (entails_cmd->parsed()) {
    ookb_status s = ookb_entails(kb.handle, literals.c_str(), credulous, &opts);
    if (s == OOKB_OK || s == OOKB_FALSE) std::fputs(s == OOKB_OK ? "true\n" : "false\n", stdout);
    return finish(s, out);
  }
  return usage;
}
