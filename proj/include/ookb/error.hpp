#pragma once

#include <stdexcept>
#include <string>

namespace ookb {

enum class ErrorCode {
  invalid_argument,   // bad parameter, unknown class/relation
  load,               // KB text rejected by the parser
  inconsistent,       // the KB (or query program) has no answer set
  resource_cap,       // universe or budget limit exceeded
  invariant_family,   // cautious entailment on a non-invariant predicate
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ookb
