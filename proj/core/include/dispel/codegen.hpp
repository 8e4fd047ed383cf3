// SystemVerilog emission: the centralized policy module, per-IP wrapper
// patches, concurrent assertions, and the formal-verification script.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dispel/classify.hpp"
#include "dispel/keywords.hpp"
#include "dispel/policy.hpp"
#include "dispel/scoring.hpp"
#include "dispel/soc_config.hpp"

namespace dispel {

// A fully analyzed policy, ready for emission and simulation.
struct CompiledPolicy {
    Policy source;
    PredicateAst predicate;       // keyword-resolved
    TimingSpec timing;
    ActionSpec action;            // keyword-resolved
    PolicyClass cls;
    std::optional<TargetBinding> binding;
    ScoreInputs score_inputs;
    double score = 0.0;
    int file_order = 0;
};

struct AssertionEntry {
    std::optional<int> ip_id;     // absent = bus scope
    std::string name;
    std::string text;
};

// Structural counts feeding the mock cost model.
struct ArtifactStats {
    int comparison_terms = 0;
    int fsm_count = 0;
    int fsm_state_bits = 0;       // sum of states * counter width per FSM
    int max_bool_depth = 0;
    int cond_blocks = 0;
};

struct GeneratedArtifacts {
    std::string central_module;
    std::map<int, std::vector<std::string>> wrapper_patches;   // IP id -> blocks
    std::vector<AssertionEntry> assertions;
    std::string formal_script;
    ArtifactStats stats;
};

struct FsmPlan {
    std::string flag_register_name;
    int counter_width = 0;
    std::vector<std::string> states;
    uint64_t threshold = 0;
};

struct CentralScaffold {
    std::string module_def;       // header + port list
    std::string master_block;     // pass-through defaults, master side
    std::string slave_block;      // pass-through defaults, slave side
};

// Basic structure of the centralized module: ports for every IP's channel
// bundle plus clock/reset/reg_mode, with both blocks initially pass-through
// so the zero-policy module is an identity shim.
CentralScaffold create_security_policy_module(const SocConfig& cfg);

// `if (<predicate && timing>) begin <assignments> end` for one IP section.
// `flag_name`, when set, replaces the FSM-tracked parts of the condition.
std::string create_cond(const CompiledPolicy& pol, const IpConfig& ip,
                        const SocConfig& cfg,
                        const std::string& flag_name = {});

struct FsmResult {
    FsmPlan plan;
    std::string block;            // clocked always block
    std::string flag_name;
};

FsmResult create_fsm(const CompiledPolicy& pol, const SocConfig& cfg);

// Named concurrent assertion conjoining predicate and timing.
std::string create_assertion(const PredicateAst& predicate, const TimingSpec& timing,
                             const SocConfig& cfg, const std::string& policy_name);

// Splices blocks at the "// DISPEL-INSERT" marker of an existing wrapper, or
// generates a self-contained "<ip>_spw" skeleton when none is supplied.
extern const char* const kWrapperInsertMarker;
std::string emit_wrapper_patch(const IpConfig& ip, const std::vector<std::string>& blocks,
                               const SocConfig& cfg,
                               const std::optional<std::string>& existing_wrapper = std::nullopt);

std::string emit_formal_script(const GeneratedArtifacts& artifacts, const SocConfig& cfg);

// Full emission for a policy set: blocks ordered by ascending score within
// each section so higher-score policies win last-assignment conflicts.
GeneratedArtifacts generate_artifacts(const std::vector<CompiledPolicy>& policies,
                                      const SocConfig& cfg,
                                      const std::map<std::string, std::string>& existing_wrappers = {});

// Emission-order permutation of `policies` (ascending score, ties by
// descending file order so earlier policies win).
std::vector<size_t> emission_order(const std::vector<CompiledPolicy>& policies);

// Identifier naming for generated state.
std::string policy_flag_name(const CompiledPolicy& pol);
std::string policy_counter_name(const CompiledPolicy& pol);

// Signal reference rendered against one IP's port section of the central
// module ("<ip>_aw_addr_in").
std::string port_name(const IpConfig& ip, Channel c, bool input);

} // namespace dispel
