#include "ookb/ookb.h"

#include <cstdlib>
#include <cstring>
#include <new>

#include "ookb/generator.hpp"
#include "ookb/report.hpp"

struct ookb_kb {
  ookb::OOKBDomain domain;
};

namespace {

thread_local std::string last_error;

using ookb::ErrorCode;
using ookb::Format;

Format fmt(ookb_format f) { return f == OOKB_FORMAT_JSON ? Format::json : Format::text; }

ookb_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return OOKB_ERR_INVALID_ARGUMENT;
    case ErrorCode::load: return OOKB_ERR_LOAD;
    case ErrorCode::inconsistent: return OOKB_ERR_INCONSISTENT;
    case ErrorCode::resource_cap: return OOKB_ERR_RESOURCE_CAP;
    case ErrorCode::invariant_family: return OOKB_ERR_INVARIANT_FAMILY;
    case ErrorCode::internal: return OOKB_ERR_INTERNAL;
  }
  return OOKB_ERR_INTERNAL;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

ookb_options defaults() {
  ookb_options o;
  ookb_options_init(&o);
  return o;
}

ookb::SolveOptions solve_options(const ookb_options& o) {
  if (o.max_depth < 0) throw ookb::Error(ErrorCode::invalid_argument, "max_depth must be non-negative");
  if (o.universe_cap == 0) throw ookb::Error(ErrorCode::invalid_argument, "universe_cap must be positive");
  ookb::SolveOptions s;
  s.max_depth = o.max_depth;
  s.universe_cap = static_cast<std::size_t>(o.universe_cap);
  s.policy = o.policy == OOKB_POLICY_RANDOM ? ookb::Policy::random : ookb::Policy::min_depth;
  s.seed = o.seed;
  return s;
}

template <class F>
ookb_status guarded(ookb_format format, F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const ookb::Error& e) {
    last_error = ookb::report_error(e.code(), e.what(), fmt(format));
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = ookb::report_error(ErrorCode::internal, "out of memory", fmt(format));
  } catch (const std::exception& e) {
    last_error = ookb::report_error(ErrorCode::internal, e.what(), fmt(format));
  }
  return OOKB_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) throw ookb::Error(ErrorCode::invalid_argument, what);
}

ookb_status load_result(ookb::LoadResult r, ookb_format format, ookb_kb** out) {
  if (!r.ok()) {
    last_error = ookb::report_parse_errors(r.errors, fmt(format));
    return OOKB_ERR_LOAD;
  }
  *out = new ookb_kb{std::move(r.domain)};
  return OOKB_OK;
}

}  // namespace

extern "C" {

const char* ookb_version(void) { return "0.1.0"; }

void ookb_options_init(ookb_options* opts) {
  if (!opts) return;
  opts->max_depth = 1;
  opts->universe_cap = 1000000;
  opts->policy = OOKB_POLICY_MIN_DEPTH;
  opts->seed = 0;
  opts->format = OOKB_FORMAT_TEXT;
}

void ookb_gen_profile_init(ookb_gen_profile* profile) {
  if (!profile) return;
  ookb::GenProfile p;
  profile->n_classes = p.n_classes;
  profile->n_relations = p.n_relations;
  profile->skolems_per_rule = p.skolems_per_rule;
  profile->eq_density = p.eq_density;
  profile->cycle_prob = p.cycle_prob;
  profile->seed = p.seed;
}

const char* ookb_last_error(void) { return last_error.c_str(); }

void ookb_string_free(char* s) { std::free(s); }

ookb_status ookb_kb_load_files(const char* const* paths, size_t n_paths, int implicit_declarations,
                               ookb_format format, ookb_kb** out) {
  return guarded(format, [&] {
    require(out && (paths || n_paths == 0), "null argument");
    std::vector<std::string> files;
    for (size_t k = 0; k < n_paths; ++k) {
      require(paths[k], "null path");
      files.emplace_back(paths[k]);
    }
    ookb::ParseOptions po;
    po.implicit_declarations = implicit_declarations != 0;
    return load_result(ookb::load_kb_files(files, po), format, out);
  });
}

ookb_status ookb_kb_load_text(const char* text, int implicit_declarations, ookb_format format,
                              ookb_kb** out) {
  return guarded(format, [&] {
    require(text && out, "null argument");
    ookb::ParseOptions po;
    po.implicit_declarations = implicit_declarations != 0;
    return load_result(ookb::parse_kb(std::string_view(text), po), format, out);
  });
}

void ookb_kb_free(ookb_kb* kb) { delete kb; }

ookb_status ookb_kb_render(const ookb_kb* kb, char** out) {
  return guarded(OOKB_FORMAT_TEXT, [&] {
    require(kb && out, "null argument");
    *out = dup(ookb::render_domain(kb->domain));
    return OOKB_OK;
  });
}

ookb_status ookb_stats(const ookb_kb* kb, ookb_format format, char** out) {
  return guarded(format, [&] {
    require(kb && out, "null argument");
    *out = dup(ookb::report_stats(ookb::kb_stats(kb->domain), fmt(format)));
    return OOKB_OK;
  });
}

ookb_status ookb_solve(const ookb_kb* kb, const ookb_options* opts, char** out) {
  const ookb_options o = opts ? *opts : defaults();
  return guarded(o.format, [&] {
    require(kb && out, "null argument");
    auto as = ookb::answer_set(kb->domain, {}, solve_options(o));
    *out = dup(ookb::report_answer_set(as, fmt(o.format)));
    return as.consistent() ? OOKB_OK : OOKB_FALSE;
  });
}

ookb_status ookb_ground(const ookb_kb* kb, const ookb_options* opts, char** out) {
  const ookb_options o = opts ? *opts : defaults();
  return guarded(o.format, [&] {
    require(kb && out, "null argument");
    auto program = ookb::ground_program(kb->domain, {}, solve_options(o).grounding());
    *out = dup(ookb::report_program(program, fmt(o.format)));
    return OOKB_OK;
  });
}

ookb_status ookb_subsume(const ookb_kb* kb, const char* c1, const char* c2, const ookb_options* opts,
                         char** out) {
  const ookb_options o = opts ? *opts : defaults();
  return guarded(o.format, [&] {
    require(kb && c1 && c2 && out, "null argument");
    bool result = ookb::subsumes(kb->domain, c1, c2, solve_options(o));
    *out = dup(ookb::report_subsumes(c1, c2, result, fmt(o.format)));
    return result ? OOKB_OK : OOKB_FALSE;
  });
}

ookb_status ookb_describe(const ookb_kb* kb, const char* c, int msc_only, const ookb_options* opts,
                          char** out) {
  const ookb_options o = opts ? *opts : defaults();
  return guarded(o.format, [&] {
    require(kb && c && out, "null argument");
    auto d = ookb::describe(kb->domain, c, solve_options(o), msc_only != 0);
    *out = dup(ookb::report_description(c, d, fmt(o.format)));
    return OOKB_OK;
  });
}

ookb_status ookb_compare(const ookb_kb* kb, const char* c1, const char* c2, const ookb_options* opts,
                         char** out) {
  const ookb_options o = opts ? *opts : defaults();
  return guarded(o.format, [&] {
    require(kb && c1 && c2 && out, "null argument");
    auto cmp = ookb::compare(kb->domain, c1, c2, solve_options(o));
    *out = dup(ookb::report_comparison(c1, c2, cmp, fmt(o.format)));
    return OOKB_OK;
  });
}

ookb_status ookb_paths(const ookb_kb* kb, const ookb_path_query* query, const ookb_options* opts,
                       char** out, size_t* n_paths) {
  const ookb_options o = opts ? *opts : defaults();
  return guarded(o.format, [&] {
    require(kb && query && query->from && query->to && out, "null argument");
    ookb::PathQuery q;
    q.from = query->from;
    q.to = query->to;
    if (query->n_relations == 0) {
      q.relations = kb->domain.relations;
    } else {
      require(query->relations, "null relation list");
      for (size_t k = 0; k < query->n_relations; ++k) {
        require(query->relations[k], "null relation");
        q.relations.insert(query->relations[k]);
      }
    }
    q.max_len = query->max_len;
    if (query->max_paths) q.max_paths = query->max_paths;
    q.any_start = query->any_start != 0;
    auto paths = ookb::find_paths(kb->domain, q, solve_options(o));
    *out = dup(ookb::report_paths(paths, fmt(o.format)));
    if (n_paths) *n_paths = paths.size();
    return OOKB_OK;
  });
}

ookb_status ookb_entails(const ookb_kb* kb, const char* literals, int credulous,
                         const ookb_options* opts) {
  const ookb_options o = opts ? *opts : defaults();
  return guarded(o.format, [&] {
    require(kb && literals, "null argument");
    const auto mode = credulous ? ookb::EntailmentMode::credulous : ookb::EntailmentMode::cautious;
    for (const auto& a : ookb::parse_atom_set(literals))
      if (!ookb::entails(kb->domain, {}, a, solve_options(o), mode)) return OOKB_FALSE;
    return OOKB_OK;
  });
}

ookb_status ookb_generate(const ookb_gen_profile* profile, char** out) {
  return guarded(OOKB_FORMAT_TEXT, [&] {
    require(profile && out, "null argument");
    ookb::GenProfile p;
    p.n_classes = profile->n_classes;
    p.n_relations = profile->n_relations;
    p.skolems_per_rule = profile->skolems_per_rule;
    p.eq_density = profile->eq_density;
    p.cycle_prob = profile->cycle_prob;
    p.seed = profile->seed;
    *out = dup(ookb::render_domain(ookb::generate_synthetic(p)));
    return OOKB_OK;
  });
}

}  // extern "C"
