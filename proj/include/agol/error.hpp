#pragma once

#include <stdexcept>
#include <string>

namespace agol {

enum class Errc {
  parity_violation,
  width_out_of_range,
  index_out_of_range,
  puncture_count,
  mismatched_surface,
  invalid_parameters,
  ordering_convention,
  path_step_failed,
  invalid_decomposition,
  missing_slope,
  zero_slope,
  not_a_knot,
  schema,
  degenerate_geometry,
  invalid_word,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

}  // namespace agol
