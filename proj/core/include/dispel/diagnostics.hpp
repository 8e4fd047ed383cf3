// Diagnostic codes and the error type shared by every pipeline stage.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dispel {

enum class DiagCode {
    FileNotFound,
    MalformedJson,
    ConfigInvariantViolation,
    MissingField,
    InvalidField,
    SyntaxError,
    UnknownFunction,
    NoEquivalentSignal,
    UnresolvableTarget,
    AmbiguousTarget,
    AssignmentToInput,
    ThresholdOverflow,
    MarkerNotFound,
    UnknownSignal,
    UnsupportedConstruct,
    DivergenceFound,
    ConstraintsUnsatisfiable,
    BackendFailure,
};

const char* to_string(DiagCode code);

enum class Severity { Warning, Error };

struct Diagnostic {
    Severity severity = Severity::Error;
    DiagCode code = DiagCode::SyntaxError;
    std::string message;
    std::string file;      // input file, when known
    int line = 0;          // 1-based, 0 = unknown
    int column = 0;        // 1-based, 0 = unknown
    std::string policy;    // policy name, when the diagnostic concerns one

    // "error: [SyntaxError] policies.json: Policy1:3:7: expected ')'"
    std::string render() const;
};

class CompileError : public std::runtime_error {
public:
    explicit CompileError(Diagnostic diag)
        : std::runtime_error(diag.render()), diag_(std::move(diag)) {}

    const Diagnostic& diag() const { return diag_; }
    DiagCode code() const { return diag_.code; }

private:
    Diagnostic diag_;
};

[[noreturn]] inline void fail(DiagCode code, std::string message,
                              std::string policy = {}, std::string file = {},
                              int line = 0, int column = 0) {
    throw CompileError(Diagnostic{Severity::Error, code, std::move(message),
                                  std::move(file), line, column,
                                  std::move(policy)});
}

// Warnings collected while compiling; errors are thrown, warnings accumulate.
using DiagnosticList = std::vector<Diagnostic>;

} // namespace dispel
