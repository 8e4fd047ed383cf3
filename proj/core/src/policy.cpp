#include "dispel/policy.hpp"

#include <cctype>
#include <sstream>

namespace dispel {

const char* to_string(PolicyLevel l) {
    return l == PolicyLevel::Bus ? "bus" : "ip";
}

char to_char(AttackType a) {
    switch (a) {
    case AttackType::Confidentiality: return 'C';
    case AttackType::Integrity: return 'I';
    case AttackType::Availability: return 'A';
    }
    return '?';
}

std::optional<AttackType> attack_from_char(char c) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
    case 'C': return AttackType::Confidentiality;
    case 'I': return AttackType::Integrity;
    case 'A': return AttackType::Availability;
    default: return std::nullopt;
    }
}

const char* to_string(RelOp op) {
    switch (op) {
    case RelOp::Eq: return "=";
    case RelOp::Ne: return "!=";
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Gt: return ">";
    case RelOp::Ge: return ">=";
    }
    return "?";
}

bool eval_rel(RelOp op, uint64_t lhs, uint64_t rhs) {
    switch (op) {
    case RelOp::Eq: return lhs == rhs;
    case RelOp::Ne: return lhs != rhs;
    case RelOp::Lt: return lhs < rhs;
    case RelOp::Le: return lhs <= rhs;
    case RelOp::Gt: return lhs > rhs;
    case RelOp::Ge: return lhs >= rhs;
    }
    return false;
}

const char* to_string(SelectorKind k) {
    switch (k) {
    case SelectorKind::SlaveNo: return "slave_no";
    case SelectorKind::MasterNo: return "master_no";
    case SelectorKind::ClockCycles: return "clock_cycles";
    }
    return "?";
}

const char* to_string(TemporalOp op) {
    switch (op) {
    case TemporalOp::Eventually: return "eventually";
    case TemporalOp::Always: return "always";
    case TemporalOp::Until: return "until";
    }
    return "?";
}

std::string SignalRef::text() const {
    std::ostringstream os;
    os << name;
    if (slice) os << "[" << slice->first << ":" << slice->second << "]";
    if (index) os << "[" << *index << "]";
    return os.str();
}

ExprPtr make_literal(uint64_t value, bool hex) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Literal;
    e->lit = Literal{value, hex};
    return e;
}

ExprPtr make_signal(SignalRef sig) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Signal;
    e->sig = std::move(sig);
    return e;
}

ExprPtr make_compare(RelOp op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Compare;
    e->rel = op;
    e->args = {std::move(lhs), std::move(rhs)};
    return e;
}

ExprPtr make_not(ExprPtr arg) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Not;
    e->args = {std::move(arg)};
    return e;
}

ExprPtr make_and(ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::And;
    e->args = {std::move(lhs), std::move(rhs)};
    return e;
}

ExprPtr make_or(ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Or;
    e->args = {std::move(lhs), std::move(rhs)};
    return e;
}

ExprPtr make_popcount(std::vector<ExprPtr> xor_terms) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Popcount;
    e->args = std::move(xor_terms);
    return e;
}

ExprPtr make_selector(SelectorKind kind, RelOp op, std::vector<uint64_t> values) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Selector;
    e->selector = kind;
    e->rel = op;
    e->selector_values = std::move(values);
    return e;
}

ExprPtr make_temporal(TemporalOp op, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Temporal;
    e->temporal = op;
    e->args = {std::move(lhs)};
    if (rhs) e->args.push_back(std::move(rhs));
    return e;
}

bool structurally_equal(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return a == b;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
    case Expr::Kind::Literal:
        return a->lit.value == b->lit.value;
    case Expr::Kind::Signal:
        return a->sig.name == b->sig.name && a->sig.slice == b->sig.slice &&
               a->sig.index == b->sig.index;
    case Expr::Kind::Selector:
        return a->selector == b->selector && a->rel == b->rel &&
               a->selector_values == b->selector_values;
    case Expr::Kind::Compare:
        if (a->rel != b->rel) return false;
        break;
    case Expr::Kind::Temporal:
        if (a->temporal != b->temporal) return false;
        break;
    default:
        break;
    }
    if (a->args.size() != b->args.size()) return false;
    for (size_t i = 0; i < a->args.size(); ++i)
        if (!structurally_equal(a->args[i], b->args[i])) return false;
    return true;
}

bool structurally_equal(const PredicateAst& a, const PredicateAst& b) {
    if (a.stages.size() != b.stages.size()) return false;
    for (size_t i = 0; i < a.stages.size(); ++i) {
        if (i > 0 && a.stages[i].gap_cycles != b.stages[i].gap_cycles) return false;
        if (!structurally_equal(a.stages[i].expr, b.stages[i].expr)) return false;
    }
    return true;
}

std::string sanitize_identifier(const std::string& name) {
    std::string out;
    out.reserve(name.size());
    for (char c : name) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
            out.push_back(c);
        else
            out.push_back('_');
    }
    if (out.empty()) out = "policy";
    if (std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(out.begin(), 'p');
    return out;
}

} // namespace dispel
