// Transaction-level reference interpreter: the golden enforcement semantics
// applied directly to bus transactions, independent of the emitted code.
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dispel/codegen.hpp"

namespace dispel {

// One single-beat transfer as observed on a master->slave path. `cycle`
// drives FSM time; gaps between cycle numbers count as idle cycles.
struct Transaction {
    uint64_t cycle = 0;
    int master_id = 0;
    int slave_id = 0;
    uint32_t aw_addr = 0;
    uint32_t ar_addr = 0;
    bool aw_valid = false;
    bool ar_valid = false;
    bool w_valid = false;
    bool r_valid = false;
    uint32_t w_data = 0;
    uint32_t r_data = 0;
    uint8_t w_strb = 0;   // 4 bits
    uint32_t mode = 0;

    bool operator==(const Transaction&) const = default;
};

struct TraceDiffEntry {
    std::string signal;
    uint64_t original = 0;
    uint64_t enforced = 0;
    std::string policy;
};

using TraceDiff = std::vector<TraceDiffEntry>;

// Per-policy sequential state: cycle counters and sequence stages. Counters
// advance once per cycle where the gating condition holds; flags are sticky.
class FsmState {
public:
    explicit FsmState(const std::vector<CompiledPolicy>& policies);

    bool flag(size_t policy_index) const;

    // Clock edge for `cycle`: updates counters/stages from the transactions
    // observed in that cycle (empty = idle cycle).
    void step_cycle(const std::vector<CompiledPolicy>& policies,
                    const std::vector<Transaction>& txs_in_cycle);

private:
    struct PerPolicy {
        bool flag = false;
        uint64_t count = 0;        // cycle counter, saturating
        int stage = 0;             // sequence: next stage to match (0 = idle)
        int wait = 0;              // cycles until the armed stage is due
    };
    std::vector<PerPolicy> state_;
};

// Applies every policy's predicate-and-timing to the transaction (conditions
// read the original values; actions apply in emission order, last write
// wins) and returns the enforced transaction plus the diff.
std::pair<Transaction, TraceDiff> apply_policies(const Transaction& tx,
                                                 const std::vector<CompiledPolicy>& policies,
                                                 const SocConfig& cfg,
                                                 const FsmState& fsm);

// Folds apply_policies over the trace with persistent FSM state.
std::pair<std::vector<Transaction>, std::vector<TraceDiff>> run_trace(
    const std::vector<Transaction>& trace,
    const std::vector<CompiledPolicy>& policies,
    const SocConfig& cfg);

// Evaluates one expression against a transaction (original values).
// Throws UnknownSignal for signals outside the transaction model.
bool eval_predicate(const ExprPtr& expr, const Transaction& tx,
                    const SocConfig& cfg, const std::string& policy_name);
bool eval_timing(const TimingSpec& timing, const Transaction& tx);

std::vector<Transaction> parse_trace_text(const std::string& json_text,
                                          const std::string& filename);
std::vector<Transaction> load_trace(const std::filesystem::path& path);
std::string trace_to_json(const std::vector<Transaction>& trace,
                          const std::vector<TraceDiff>& diffs);

} // namespace dispel
