// The 3-tuple policy in source and parsed form: predicate expression tree,
// timing spec, action spec, plus classification and target binding results.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dispel {

enum class AttackType { Confidentiality, Integrity, Availability };
enum class PolicyLevel { Bus, Ip };

const char* to_string(PolicyLevel l);
char to_char(AttackType a);
std::optional<AttackType> attack_from_char(char c);

// One policy as read from the policy file, before any parsing of the tuple
// fields. Optional fields keep their absence so defaults can be reported.
struct Policy {
    std::string name;
    std::string predicate_src;
    std::optional<std::string> timing_src;
    std::string action_src;
    std::optional<uint32_t> bits_protected;
    std::optional<std::set<AttackType>> attack_types;
    std::optional<PolicyLevel> level_tag;
    std::optional<bool> synthesizable_tag;
};

// ---------------------------------------------------------------------------
// Predicate expression tree

enum class RelOp { Eq, Ne, Lt, Le, Gt, Ge };
const char* to_string(RelOp op);
bool eval_rel(RelOp op, uint64_t lhs, uint64_t rhs);

enum class SelectorKind { SlaveNo, MasterNo, ClockCycles };
const char* to_string(SelectorKind k);

enum class TemporalOp { Eventually, Always, Until };
const char* to_string(TemporalOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Literal {
    uint64_t value = 0;
    bool hex = false;   // print as 0x...; equality ignores spelling
};

struct SignalRef {
    std::string name;
    std::optional<std::pair<int, int>> slice;   // sig[hi:lo]
    std::optional<int> index;                   // sig[k] (array element)

    std::string text() const;
};

struct Expr {
    enum class Kind { Literal, Signal, Compare, Not, And, Or, Popcount, Selector, Temporal };

    Kind kind = Kind::Literal;
    Literal lit;                         // Literal
    SignalRef sig;                       // Signal
    RelOp rel = RelOp::Eq;               // Compare, Selector
    std::vector<ExprPtr> args;           // operands: Compare(2), Not(1), And/Or(2),
                                         // Popcount(xor terms), Temporal(1 or 2)
    SelectorKind selector = SelectorKind::SlaveNo;   // Selector
    std::vector<uint64_t> selector_values;           // Selector ("slave_no = 4 or 5")
    TemporalOp temporal = TemporalOp::Eventually;    // Temporal
};

ExprPtr make_literal(uint64_t value, bool hex = false);
ExprPtr make_signal(SignalRef sig);
ExprPtr make_compare(RelOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_not(ExprPtr arg);
ExprPtr make_and(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_or(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_popcount(std::vector<ExprPtr> xor_terms);
ExprPtr make_selector(SelectorKind kind, RelOp op, std::vector<uint64_t> values);
ExprPtr make_temporal(TemporalOp op, ExprPtr lhs, ExprPtr rhs = nullptr);

bool structurally_equal(const ExprPtr& a, const ExprPtr& b);

// One stage of a sequence predicate. gap_cycles is the distance from the
// previous stage (>= 1); ignored on the first stage.
struct SequenceStage {
    ExprPtr expr;
    int gap_cycles = 1;
};

// A parsed predicate: a single boolean expression, or an ordered sequence of
// stage expressions when stages.size() >= 2.
struct PredicateAst {
    std::vector<SequenceStage> stages;

    bool is_sequence() const { return stages.size() >= 2; }
    const ExprPtr& root() const { return stages.front().expr; }
};

bool structurally_equal(const PredicateAst& a, const PredicateAst& b);

// ---------------------------------------------------------------------------
// Timing and action

struct TimingSpec {
    enum class Kind { Always, ModeEquals, CycleBound };
    Kind kind = Kind::Always;
    uint64_t mode = 0;          // ModeEquals
    RelOp rel = RelOp::Gt;      // CycleBound
    uint64_t count = 1;         // CycleBound, >= 1

    static TimingSpec always() { return {}; }
    static TimingSpec mode_equals(uint64_t m) {
        TimingSpec t; t.kind = Kind::ModeEquals; t.mode = m; return t;
    }
    static TimingSpec cycle_bound(RelOp op, uint64_t n) {
        TimingSpec t; t.kind = Kind::CycleBound; t.rel = op; t.count = n; return t;
    }
};

struct ActionSpec {
    bool reject = false;
    std::vector<std::pair<SignalRef, Literal>> assignments;   // non-empty when !reject
};

// ---------------------------------------------------------------------------
// Classification and binding

struct PolicyClass {
    PolicyLevel level = PolicyLevel::Bus;
    bool synthesizable = true;
    bool needs_fsm = false;     // needs_fsm implies synthesizable
};

struct TargetBinding {
    int id = 0;
    bool m_flag = false;
    bool s_flag = false;
};

// Policy name reduced to a legal identifier ("Policy#1" -> "Policy_1").
std::string sanitize_identifier(const std::string& name);

} // namespace dispel
