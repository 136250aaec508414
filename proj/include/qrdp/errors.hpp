#pragma once

#include <stdexcept>
#include <string>

namespace qrdp {

// Failure categories surfaced by the library. The CLI maps these onto
// process exit codes, so keep the set stable.
enum class errc {
  not_hermitian,
  no_convergence,
  not_psd,
  trace_not_one,
  dimension_mismatch,
  dimension_overflow,
  param_out_of_range,
  channel_not_trace_preserving,
  imaginary_probability,
  length_mismatch,
  not_stochastic,
  delta_out_of_range,
  not_qubit,
  missing_exact_inputs,
  schedule_conflict,
  bad_document,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace qrdp
