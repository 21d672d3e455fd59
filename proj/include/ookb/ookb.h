#ifndef OOKB_OOKB_H
#define OOKB_OOKB_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define OOKB_API __attribute__((visibility("default")))
#else
#define OOKB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ookb_kb ookb_kb;

typedef enum {
  OOKB_OK = 0,
  OOKB_FALSE = 1,
  OOKB_ERR_INVALID_ARGUMENT = 2,
  OOKB_ERR_LOAD = 3,
  OOKB_ERR_RESOURCE_CAP = 4,
  OOKB_ERR_INCONSISTENT = 5,
  OOKB_ERR_INVARIANT_FAMILY = 6,
  OOKB_ERR_INTERNAL = 7
} ookb_status;

typedef enum { OOKB_FORMAT_TEXT = 0, OOKB_FORMAT_JSON = 1 } ookb_format;

typedef enum { OOKB_POLICY_MIN_DEPTH = 0, OOKB_POLICY_RANDOM = 1 } ookb_policy;

typedef struct {
  int max_depth;
  uint64_t universe_cap;
  ookb_policy policy;
  uint64_t seed;
  ookb_format format;
} ookb_options;

typedef struct {
  int n_classes;
  int n_relations;
  int skolems_per_rule;
  double eq_density;
  double cycle_prob;
  uint64_t seed;
} ookb_gen_profile;

typedef struct {
  const char* from;
  const char* to;
  /* NULL or empty selects every relation of the KB. */
  const char* const* relations;
  size_t n_relations;
  int max_len;
  /* 0 means unlimited. */
  size_t max_paths;
  int any_start;
} ookb_path_query;

OOKB_API const char* ookb_version(void);

/* Depth 1, universe cap 1000000, min-depth policy, seed 0, text output. */
OOKB_API void ookb_options_init(ookb_options* opts);
OOKB_API void ookb_gen_profile_init(ookb_gen_profile* profile);

/* Diagnostics of the last failed call on this thread, one per line, in the
   format of that call. Valid until the next call on the thread. */
OOKB_API const char* ookb_last_error(void);

OOKB_API void ookb_string_free(char* s);

OOKB_API ookb_status ookb_kb_load_files(const char* const* paths, size_t n_paths, int implicit_declarations,
                               ookb_format format, ookb_kb** out);
OOKB_API ookb_status ookb_kb_load_text(const char* text, int implicit_declarations, ookb_format format,
                              ookb_kb** out);
OOKB_API void ookb_kb_free(ookb_kb* kb);

/* Outputs are newly allocated strings released with ookb_string_free. */
OOKB_API ookb_status ookb_kb_render(const ookb_kb* kb, char** out);
OOKB_API ookb_status ookb_stats(const ookb_kb* kb, ookb_format format, char** out);

/* OOKB_FALSE when the answer set is inconsistent; the report is still set. */
OOKB_API ookb_status ookb_solve(const ookb_kb* kb, const ookb_options* opts, char** out);
OOKB_API ookb_status ookb_ground(const ookb_kb* kb, const ookb_options* opts, char** out);

/* OOKB_FALSE when c1 is not subsumed by c2. */
OOKB_API ookb_status ookb_subsume(const ookb_kb* kb, const char* c1, const char* c2, const ookb_options* opts,
                         char** out);
OOKB_API ookb_status ookb_describe(const ookb_kb* kb, const char* c, int msc_only, const ookb_options* opts,
                          char** out);
OOKB_API ookb_status ookb_compare(const ookb_kb* kb, const char* c1, const char* c2, const ookb_options* opts,
                         char** out);
OOKB_API ookb_status ookb_paths(const ookb_kb* kb, const ookb_path_query* query, const ookb_options* opts,
                       char** out, size_t* n_paths);

/* Ground literals in KB syntax, each ending in a period. OOKB_FALSE when not
   entailed. */
OOKB_API ookb_status ookb_entails(const ookb_kb* kb, const char* literals, int credulous,
                         const ookb_options* opts);

OOKB_API ookb_status ookb_generate(const ookb_gen_profile* profile, char** out);

#ifdef __cplusplus
}
#endif

#endif
