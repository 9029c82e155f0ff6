#pragma once

#include <stdexcept>
#include <string>

namespace syt {

enum class errc {
  not_weakly_decreasing,
  inner_not_contained,
  malformed_syntax,
  cell_outside_diagram,
  cell_outside_shape,
  equal_cells,
  d_too_small,
  non_integer_result,
  too_small,
  single_column_or_row,
  out_of_range,
  zero_row_difference,
  containment_violated,
  mu_too_long,
  unknown_suite,
  bad_params,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace syt
