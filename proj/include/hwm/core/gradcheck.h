#pragma once

#include <functional>
#include <string>

#include "hwm/core/dense_array.h"
#include "hwm/core/tape.h"

namespace hwm {

struct GradCheckOptions {
  // Five-point central stencil: truncation O(step^4), rounding O(eps / step).
  double step = 1e-3;
  // Denominator floor for the relative error |a - n| / max(|a|, |n|, floor).
  double abs_floor = 1e-6;
  // Checks at most this many entries per block (0 = all), chosen uniformly.
  int max_entries_per_block = 0;
  unsigned long long seed = 0;
};

struct GradCheckResult {
  double max_rel_error = 0.0;
  std::string worst_block;
  int worst_index = -1;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;
  int entries_checked = 0;
};

// Compares Tape::Backward gradients of `build_loss` against central finite
// differences for every block in `params`. `build_loss` must be a pure
// function of the parameter values.
GradCheckResult CheckGradients(ParamSet& params, const std::function<Var(Tape&)>& build_loss,
                               const GradCheckOptions& options = {});

}  // namespace hwm
