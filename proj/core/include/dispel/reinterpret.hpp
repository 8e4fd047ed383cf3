// Micro-interpreter for the emitted SystemVerilog subset. Parses the central
// module text back into statements and evaluates it on transactions; kept
// deliberately independent of the golden interpreter so the two check each
// other.
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dispel/bus_sim.hpp"
#include "dispel/codegen.hpp"

namespace dispel::sv {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
    enum class Kind { Number, Ident, Unary, Binary, Countones, Slice };
    Kind kind = Kind::Number;
    uint64_t number = 0;
    int number_width = 32;
    std::string ident;
    std::string op;                 // unary: ! ~ - ; binary: && || == != < <= > >= ^ & | + -
    ExprPtr lhs, rhs;               // unary uses lhs
    int hi = 0, lo = 0;             // Slice on lhs
};

struct Stmt;
using StmtPtr = std::unique_ptr<Stmt>;

struct Stmt {
    enum class Kind { Assign, If };
    Kind kind = Stmt::Kind::Assign;
    bool nonblocking = false;
    std::string target;
    ExprPtr value;                  // Assign
    ExprPtr cond;                   // If
    std::vector<StmtPtr> then_body;
    std::vector<StmtPtr> else_body;
};

struct PortDecl {
    std::string name;
    bool input = false;
    int width = 1;
};

struct RegDecl {
    std::string name;
    int width = 1;
};

struct Module {
    std::string name;
    std::vector<PortDecl> ports;
    std::vector<RegDecl> regs;
    std::vector<StmtPtr> comb;                    // always @* body, in order
    std::vector<std::vector<StmtPtr>> seq_blocks; // always @(posedge clk) bodies
};

// Throws UnsupportedConstruct when the text strays outside the emitted
// subset.
Module parse_module(const std::string& text);

// Register state of a parsed module across clock cycles.
class ModuleState {
public:
    ModuleState() = default;
    explicit ModuleState(const Module& m);
    std::map<std::string, uint64_t> regs;
};

// Evaluates one combinational pass plus one clock edge for the transaction's
// cycle and returns the enforced transaction. Only the sections of the
// transaction's master and slave map onto it; other IP sections see idle
// inputs.
Transaction evaluate_on_transaction(const Module& m, const SocConfig& cfg,
                                    const Transaction& tx, ModuleState& state,
                                    bool clock_edge = true);

// Steps the module's sequential blocks with idle inputs (between trace
// cycles).
void step_idle_cycle(const Module& m, const SocConfig& cfg, ModuleState& state,
                     uint32_t mode);

} // namespace dispel::sv

namespace dispel {

// Parses artifacts.central_module and evaluates it on the transaction.
Transaction reinterpret_emitted(const GeneratedArtifacts& artifacts,
                                const SocConfig& cfg, const Transaction& tx,
                                sv::ModuleState& state);

struct Divergence {
    Transaction transaction;
    std::string signal;
    uint64_t golden = 0;
    uint64_t emitted = 0;
};

struct DifferentialReport {
    uint64_t trials = 0;
    std::optional<Divergence> divergence;   // first one found
};

// Runs both semantics on `trials` seeded random transactions (addresses
// biased toward slave range boundaries) and reports the first divergence.
// Reproducible from the seed.
DifferentialReport differential_check(const std::vector<CompiledPolicy>& policies,
                                      const SocConfig& cfg, uint64_t trials,
                                      uint64_t seed);

// Same check against an explicit central-module text (used by mutation
// tests).
DifferentialReport differential_check_text(const std::string& central_module,
                                           const std::vector<CompiledPolicy>& policies,
                                           const SocConfig& cfg, uint64_t trials,
                                           uint64_t seed);

// Seeded transaction generator shared by differential_check and tests.
std::vector<Transaction> random_transactions(const SocConfig& cfg, uint64_t count,
                                             uint64_t seed);

} // namespace dispel
