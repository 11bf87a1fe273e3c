#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace wordmorph {

/// Failure categories surfaced by the library. The CLI maps these onto
/// process exit codes; tests assert on them directly.
enum class errc {
  invalid_symbol,
  invalid_alphabet,
  alien_symbol,
  domain_mismatch,
  not_prolongable,
  not_uniform,
  arity_one,
  not_found,
  index_out_of_range,
  too_short,
  likely_periodic,
  bad_preperiod,
  empty_period,
  insufficient_occurrences,
  precondition,
  parse_error,
  unknown_symbol,
  missing_rule,
  unknown_name,
};

class error : public std::runtime_error {
public:
  error(errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
  throw error(code, message);
}

}  // namespace wordmorph
