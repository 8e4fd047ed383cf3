#include "dispel/diagnostics.hpp"

#include <sstream>

namespace dispel {

const char* to_string(DiagCode code) {
    switch (code) {
    case DiagCode::FileNotFound: return "FileNotFound";
    case DiagCode::MalformedJson: return "MalformedJson";
    case DiagCode::ConfigInvariantViolation: return "ConfigInvariantViolation";
    case DiagCode::MissingField: return "MissingField";
    case DiagCode::InvalidField: return "InvalidField";
    case DiagCode::SyntaxError: return "SyntaxError";
    case DiagCode::UnknownFunction: return "UnknownFunction";
    case DiagCode::NoEquivalentSignal: return "NoEquivalentSignal";
    case DiagCode::UnresolvableTarget: return "UnresolvableTarget";
    case DiagCode::AmbiguousTarget: return "AmbiguousTarget";
    case DiagCode::AssignmentToInput: return "AssignmentToInput";
    case DiagCode::ThresholdOverflow: return "ThresholdOverflow";
    case DiagCode::MarkerNotFound: return "MarkerNotFound";
    case DiagCode::UnknownSignal: return "UnknownSignal";
    case DiagCode::UnsupportedConstruct: return "UnsupportedConstruct";
    case DiagCode::DivergenceFound: return "DivergenceFound";
    case DiagCode::ConstraintsUnsatisfiable: return "ConstraintsUnsatisfiable";
    case DiagCode::BackendFailure: return "BackendFailure";
    }
    return "Unknown";
}

std::string Diagnostic::render() const {
    std::ostringstream os;
    os << (severity == Severity::Error ? "error" : "warning");
    os << ": [" << to_string(code) << "]";
    if (!file.empty()) {
        os << " " << file;
        if (line > 0) {
            os << ":" << line;
            if (column > 0) os << ":" << column;
        }
        os << ":";
    }
    if (!policy.empty()) os << " " << policy << ":";
    os << " " << message;
    return os.str();
}

} // namespace dispel
