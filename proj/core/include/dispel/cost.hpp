// Cost estimation behind the overhead feedback loop: a deterministic mock
// model at desk scale, or a user-supplied external command.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "dispel/codegen.hpp"

namespace dispel {

struct CostReport {
    double area_um2 = 0.0;
    double delay_ns = 0.0;
    double power_mw = 0.0;
};

struct ConstraintSpec {
    std::optional<double> max_area_pct;
    std::optional<double> max_delay_pct;
    std::optional<double> max_power_pct;
    std::optional<CostReport> baseline;   // config-supplied baseline wins

    bool any_bound() const {
        return max_area_pct || max_delay_pct || max_power_pct;
    }
};

ConstraintSpec parse_constraints_text(const std::string& json_text, const std::string& filename);
ConstraintSpec load_constraints(const std::filesystem::path& path);

class CostBackend {
public:
    virtual ~CostBackend() = default;
    virtual CostReport estimate(const GeneratedArtifacts& artifacts) = 0;
};

// area  = A0 + a * comparison_terms + b * fsm_state_bits
// delay = D0 + d * max_bool_depth
// power = P0 + p * area
struct MockParams {
    double area_base = 1000.0;
    double area_per_term = 50.0;
    double area_per_state_bit = 25.0;
    double delay_base = 2.0;
    double delay_per_depth = 0.1;
    double power_base = 5.0;
    double power_per_area = 0.001;
};

class MockEstimator final : public CostBackend {
public:
    MockEstimator() = default;
    explicit MockEstimator(MockParams params) : params_(params) {}

    CostReport estimate(const GeneratedArtifacts& artifacts) override;
    const MockParams& params() const { return params_; }

private:
    MockParams params_;
};

// Writes the artifacts to a scratch directory and runs `command <dir>`; the
// command must print {"area_um2":..., "delay_ns":..., "power_mw":...} on
// stdout. Nonzero exit or unparsable output is BackendFailure.
class ExternalCommandBackend final : public CostBackend {
public:
    explicit ExternalCommandBackend(std::string command, const SocConfig& cfg)
        : command_(std::move(command)), cfg_(&cfg) {}

    CostReport estimate(const GeneratedArtifacts& artifacts) override;

private:
    std::string command_;
    const SocConfig* cfg_;
};

} // namespace dispel
