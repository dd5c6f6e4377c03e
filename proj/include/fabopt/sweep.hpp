#pragma once

#include <optional>
#include <vector>

#include "fabopt/model.hpp"
#include "fabopt/solvers.hpp"

namespace fabopt {

struct SweepPoint {
  Lambda lambda;
  Solution solution;
};

/// Points in ascending lambda; optimal objective and defense lost are both
/// non-increasing along the sequence.
struct SweepResult {
  std::vector<SweepPoint> points;
};

/// One solve per distinct lambda (duplicates collapse). Uses `kind`, or the
/// default dp-with-bb-fallback when `kind` is empty. The monotonicity of
/// objective and defense lost is re-checked afterwards; a violation throws
/// fabopt::Error.
SweepResult sweep(const Instance& instance, std::vector<Lambda> lambdas, std::optional<SolverKind> kind = {},
                  const SolveOptions& options = {});

}  // namespace fabopt
