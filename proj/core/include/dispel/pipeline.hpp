// End-to-end compilation driver shared by the CLI and tests.
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dispel/bus_sim.hpp"
#include "dispel/codegen.hpp"
#include "dispel/constraint_loop.hpp"
#include "dispel/cost.hpp"

namespace dispel {

struct PipelineOptions {
    ScoreWeights weights;
    // Existing wrapper files keyed by IP name; patched instead of skeletons.
    std::map<std::string, std::string> existing_wrappers;
};

struct CompileResult {
    std::vector<CompiledPolicy> policies;       // analyzed, file order
    GeneratedArtifacts artifacts;               // for the retained set
    std::vector<size_t> retained;               // indices into policies
    std::vector<IterationRecord> iteration_log; // empty without constraints
    DiagnosticList warnings;
};

// Parse + classify + bind + score one policy. Throws CompileError on the
// first error; warnings accumulate.
CompiledPolicy analyze_policy(const Policy& pol, const SocConfig& cfg,
                              const ScoreWeights& weights, int file_order,
                              DiagnosticList& warnings);

std::vector<CompiledPolicy> analyze_policies(const std::vector<Policy>& pols,
                                             const SocConfig& cfg,
                                             const PipelineOptions& options,
                                             DiagnosticList& warnings);

// Full pipeline: analyze, optionally run the constraint loop, emit artifacts
// for the retained set.
CompileResult compile_policies(const std::vector<Policy>& pols, const SocConfig& cfg,
                               const PipelineOptions& options = {},
                               const std::optional<ConstraintSpec>& constraints = std::nullopt,
                               CostBackend* backend = nullptr);

// report.json content for a finished compile.
std::string build_report_json(const CompileResult& result, const SocConfig& cfg);

// Writes artifacts + report into `out_dir` atomically (temp dir + rename);
// either the full directory appears or nothing does.
void write_artifacts(const CompileResult& result, const SocConfig& cfg,
                     const std::filesystem::path& out_dir);

} // namespace dispel
