#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ookb/engine.hpp"
#include "ookb/error.hpp"
#include "ookb/grounder.hpp"
#include "ookb/parser.hpp"
#include "ookb/queries.hpp"
#include "ookb/stats.hpp"

namespace ookb {

std::string_view error_code_name(ErrorCode code) noexcept;

/// Each output ends with a newline.
std::string report_stats(const StatsTable& stats, Format format);
std::string report_answer_set(const AnswerSet& as, Format format);
std::string report_subsumes(const std::string& c1, const std::string& c2, bool result, Format format);
std::string report_description(const std::string& c, const Description& d, Format format);
std::string report_comparison(const std::string& c1, const std::string& c2, const Comparison& cmp,
                              Format format);
std::string report_paths(const std::vector<Path>& paths, Format format);
std::string report_program(const GroundProgram& program, Format format);

/// One diagnostic per line; JSON lines hold one object each.
std::string report_parse_errors(const std::vector<ParseError>& errors, Format format);
std::string report_error(ErrorCode code, std::string_view message, Format format);

}  // namespace ookb
