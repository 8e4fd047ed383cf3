// Overhead-constraint feedback loop: regenerate, estimate, discard the
// lowest-score 10% until the bounds hold.
#pragma once

#include <vector>

#include "dispel/cost.hpp"

namespace dispel {

struct IterationRecord {
    int iteration = 0;
    int retained = 0;
    double area_pct = 0.0;
    double delay_pct = 0.0;
    double power_pct = 0.0;
};

struct ConstraintLoopResult {
    std::vector<CompiledPolicy> retained;
    std::vector<IterationRecord> log;
};

// Each round drops ceil(10% of currently retained) lowest-score policies
// (minimum 1). Throws ConstraintsUnsatisfiable when the set empties with
// bounds still violated, BackendFailure on external-command errors.
ConstraintLoopResult enforce_constraints(const std::vector<CompiledPolicy>& policies,
                                         const SocConfig& cfg,
                                         const ConstraintSpec& constraints,
                                         CostBackend& backend,
                                         const CostReport& baseline);

// Baseline resolution: config-supplied baseline wins, otherwise the backend's
// estimate of the zero-policy artifacts.
CostReport resolve_baseline(const ConstraintSpec& constraints, const SocConfig& cfg,
                            CostBackend& backend);

} // namespace dispel
