#include "dispel/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dispel/diagnostics.hpp"
#include "dispel/keywords.hpp"

namespace dispel {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
    Ident, Number,
    LParen, RParen, LBracket, RBracket, Colon, Comma, Caret,
    Rel,            // = == != < <= > >=
    AndAnd, OrOr, Bang,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    RelOp rel = RelOp::Eq;
    int column = 0;     // 1-based
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    const auto push = [&](Tok kind, std::string text, size_t at, RelOp rel = RelOp::Eq) {
        out.push_back(Token{kind, std::move(text), rel, static_cast<int>(at) + 1});
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        const size_t start = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
            ++i;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            push(Tok::Ident, src.substr(start, i - start), start);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ++i;
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            push(Tok::Number, src.substr(start, i - start), start);
            continue;
        }
        switch (c) {
        case '(': push(Tok::LParen, "(", i); ++i; continue;
        case ')': push(Tok::RParen, ")", i); ++i; continue;
        case '[': push(Tok::LBracket, "[", i); ++i; continue;
        case ']': push(Tok::RBracket, "]", i); ++i; continue;
        case ':': push(Tok::Colon, ":", i); ++i; continue;
        case ',': push(Tok::Comma, ",", i); ++i; continue;
        case '^': push(Tok::Caret, "^", i); ++i; continue;
        case '=':
            if (i + 1 < src.size() && src[i + 1] == '=') { push(Tok::Rel, "==", i, RelOp::Eq); i += 2; }
            else { push(Tok::Rel, "=", i, RelOp::Eq); ++i; }
            continue;
        case '!':
            if (i + 1 < src.size() && src[i + 1] == '=') { push(Tok::Rel, "!=", i, RelOp::Ne); i += 2; }
            else { push(Tok::Bang, "!", i); ++i; }
            continue;
        case '<':
            if (i + 1 < src.size() && src[i + 1] == '=') { push(Tok::Rel, "<=", i, RelOp::Le); i += 2; }
            else { push(Tok::Rel, "<", i, RelOp::Lt); ++i; }
            continue;
        case '>':
            if (i + 1 < src.size() && src[i + 1] == '=') { push(Tok::Rel, ">=", i, RelOp::Ge); i += 2; }
            else { push(Tok::Rel, ">", i, RelOp::Gt); ++i; }
            continue;
        case '&':
            if (i + 1 < src.size() && src[i + 1] == '&') { push(Tok::AndAnd, "&&", i); i += 2; continue; }
            break;
        case '|':
            if (i + 1 < src.size() && src[i + 1] == '|') { push(Tok::OrOr, "||", i); i += 2; continue; }
            break;
        default:
            break;
        }
        fail(DiagCode::SyntaxError,
             "unexpected character '" + std::string(1, c) + "'", {}, {}, 0,
             static_cast<int>(i) + 1);
    }
    out.push_back(Token{Tok::End, "", RelOp::Eq, static_cast<int>(src.size()) + 1});
    return out;
}

bool ident_is(const Token& t, const char* word) {
    return t.kind == Tok::Ident && lower(t.text) == word;
}

// Literal token -> value. Bare digit strings are decimal unless the
// comparison context is address-valued, where the policy idiom writes
// unprefixed hex.
Literal literal_from_text(const std::string& text, bool address_context, int column) {
    std::string s = text;
    bool hex = false;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) {
        hex = true;
        s = s.substr(2);
    } else if (s.find_first_of("abcdefABCDEF") != std::string::npos) {
        hex = true;
    } else if (address_context) {
        hex = true;
    }
    uint64_t value = 0;
    for (char c : s) {
        if (c == '_') continue;
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (hex && c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else
            fail(DiagCode::SyntaxError, "invalid digit in number \"" + text + "\"",
                 {}, {}, 0, column);
        value = value * (hex ? 16 : 10) + digit;
        if (value > 0xFFFFFFFFull)
            fail(DiagCode::SyntaxError, "number \"" + text + "\" exceeds 32 bits",
                 {}, {}, 0, column);
    }
    return Literal{value, hex};
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

class Parser {
public:
    explicit Parser(const std::string& src) : toks_(lex(src)) {}

    PredicateAst parse_sequence() {
        PredicateAst ast;
        ast.stages.push_back(SequenceStage{parse_expr(), 1});
        while (ident_is(peek(), "then")) {
            next();
            int gap = 1;
            if (ident_is(peek(), "after")) {
                next();
                const Token& n = expect(Tok::Number, "cycle count");
                gap = static_cast<int>(literal_from_text(n.text, false, n.column).value);
                if (gap < 1)
                    error("cycle gap must be >= 1", n.column);
                if (!ident_is(peek(), "cycles") && !ident_is(peek(), "cycle"))
                    error("expected \"cycles\"", peek().column);
                next();
            }
            ast.stages.push_back(SequenceStage{parse_expr(), gap});
        }
        expect(Tok::End, "end of predicate");
        return ast;
    }

    ExprPtr parse_expr() { return parse_until(); }

    TimingSpec parse_timing_spec() {
        if (peek().kind == Tok::End) return TimingSpec::always();
        if (ident_is(peek(), "always")) {
            next();
            expect(Tok::End, "end of timing");
            return TimingSpec::always();
        }
        if (ident_is(peek(), "mode")) {
            next();
            const Token& rel = expect(Tok::Rel, "\"=\"");
            if (rel.rel != RelOp::Eq)
                error("timing mode only supports \"=\"", rel.column);
            const Token& n = expect(Tok::Number, "mode value");
            const auto lit = literal_from_text(n.text, false, n.column);
            expect(Tok::End, "end of timing");
            return TimingSpec::mode_equals(lit.value);
        }
        if (ident_is(peek(), "clock_cycles")) {
            next();
            const Token& rel = expect(Tok::Rel, "relation");
            if (rel.rel != RelOp::Gt && rel.rel != RelOp::Ge)
                error("clock_cycles timing supports only > and >=", rel.column);
            const Token& n = expect(Tok::Number, "cycle count");
            const auto lit = literal_from_text(n.text, false, n.column);
            if (lit.value < 1)
                error("cycle count must be >= 1", n.column);
            expect(Tok::End, "end of timing");
            return TimingSpec::cycle_bound(rel.rel, lit.value);
        }
        error("expected \"mode = k\", \"clock_cycles > n\", or \"always\"", peek().column);
    }

    ActionSpec parse_action_spec() {
        if (ident_is(peek(), "reject")) {
            next();
            expect(Tok::End, "end of action");
            ActionSpec a;
            a.reject = true;
            return a;
        }
        ActionSpec a;
        while (true) {
            SignalRef sig = parse_signal_ref();
            check_assignable(sig);
            const Token& rel = expect(Tok::Rel, "\"=\"");
            if (rel.rel != RelOp::Eq)
                error("actions assign with \"=\"", rel.column);
            const Token& n = expect(Tok::Number, "literal value");
            a.assignments.emplace_back(
                sig, literal_from_text(n.text, is_address_class_name(sig.name), n.column));
            if (peek().kind == Tok::Comma || ident_is(peek(), "and")) {
                next();
                continue;
            }
            break;
        }
        expect(Tok::End, "end of action");
        return a;
    }

private:
    const Token& peek(size_t ahead = 0) const {
        const size_t i = std::min(pos_ + ahead, toks_.size() - 1);
        return toks_[i];
    }
    const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

    [[noreturn]] void error(const std::string& expected, int column) const {
        fail(DiagCode::SyntaxError, expected, {}, {}, 0, column);
    }

    const Token& expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            error(std::string("expected ") + what, peek().column);
        return next();
    }

    ExprPtr parse_until() {
        ExprPtr lhs = parse_or();
        if (ident_is(peek(), "until")) {
            next();
            ExprPtr rhs = parse_or();
            return make_temporal(TemporalOp::Until, std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    ExprPtr parse_or() {
        ExprPtr lhs = parse_and();
        while (peek().kind == Tok::OrOr || ident_is(peek(), "or")) {
            next();
            lhs = make_or(std::move(lhs), parse_and());
        }
        return lhs;
    }

    bool at_and_connective() const {
        return peek().kind == Tok::AndAnd || peek().kind == Tok::Comma ||
               ident_is(peek(), "and");
    }

    ExprPtr parse_and() {
        ExprPtr lhs = parse_not();
        while (at_and_connective()) {
            next();
            lhs = make_and(std::move(lhs), parse_not());
        }
        return lhs;
    }

    ExprPtr parse_not() {
        if (peek().kind == Tok::Bang || ident_is(peek(), "not")) {
            next();
            return make_not(parse_not());
        }
        if (ident_is(peek(), "eventually")) {
            next();
            return make_temporal(TemporalOp::Eventually, parse_not());
        }
        if (ident_is(peek(), "always")) {
            next();
            return make_temporal(TemporalOp::Always, parse_not());
        }
        return parse_atom();
    }

    bool at_selector() const {
        return ident_is(peek(), "slave_no") || ident_is(peek(), "master_no") ||
               ident_is(peek(), "clock_cycles");
    }

    ExprPtr parse_atom() {
        if (peek().kind == Tok::LParen) {
            next();
            ExprPtr inner = parse_expr();
            expect(Tok::RParen, "\")\"");
            return inner;
        }
        if (at_selector()) return parse_selector();

        ExprPtr lhs = parse_term();
        if (peek().kind == Tok::Rel) {
            const Token rel = next();
            ExprPtr rhs = parse_term();
            resolve_address_literals(lhs, rhs);
            return make_compare(rel.rel, std::move(lhs), std::move(rhs));
        }
        return lhs;   // bare term: nonzero = true
    }

    ExprPtr parse_selector() {
        const Token kw = next();
        SelectorKind kind = SelectorKind::SlaveNo;
        if (lower(kw.text) == "master_no") kind = SelectorKind::MasterNo;
        else if (lower(kw.text) == "clock_cycles") kind = SelectorKind::ClockCycles;

        const Token& rel = expect(Tok::Rel, "relation");
        if (kind == SelectorKind::ClockCycles) {
            if (rel.rel != RelOp::Gt && rel.rel != RelOp::Ge)
                error("clock_cycles supports only > and >=", rel.column);
        }
        const Token& n = expect(Tok::Number, "value");
        std::vector<uint64_t> values{literal_from_text(n.text, false, n.column).value};
        if (kind == SelectorKind::ClockCycles && values[0] < 1)
            error("cycle count must be >= 1", n.column);

        // "slave_no = 4 or 5": membership continuation, "=" only. A literal
        // followed by a relation or caret starts a fresh comparison instead.
        while (kind != SelectorKind::ClockCycles && rel.rel == RelOp::Eq &&
               (peek().kind == Tok::OrOr || ident_is(peek(), "or")) &&
               peek(1).kind == Tok::Number && peek(2).kind != Tok::Rel &&
               peek(2).kind != Tok::Caret) {
            next();
            const Token& v = next();
            values.push_back(literal_from_text(v.text, false, v.column).value);
        }
        return make_selector(kind, rel.rel, std::move(values));
    }

    ExprPtr parse_term() {
        if (peek().kind == Tok::Number) {
            const Token n = next();
            return make_literal_token(n);
        }
        if (peek().kind == Tok::Ident) {
            const std::string word = lower(peek().text);
            if (word == "countones" || word == "popcount" || word == "$countones" ||
                word == "$popcount") {
                next();
                expect(Tok::LParen, "\"(\"");
                std::vector<ExprPtr> terms;
                terms.push_back(parse_term());
                while (peek().kind == Tok::Caret) {
                    next();
                    terms.push_back(parse_term());
                }
                expect(Tok::RParen, "\")\"");
                return make_popcount(std::move(terms));
            }
            // Any other identifier followed by "(" is a call to a builtin we
            // do not have.
            if (peek(1).kind == Tok::LParen)
                fail(DiagCode::UnknownFunction,
                     "unknown function \"" + peek().text + "\" (only countones/popcount)",
                     {}, {}, 0, peek().column);
            return make_signal(parse_signal_ref());
        }
        error("expected literal, signal, or countones(...)", peek().column);
    }

    ExprPtr make_literal_token(const Token& n) {
        const Literal lit = literal_from_text(n.text, false, n.column);
        auto e = make_literal(lit.value, lit.hex);
        pending_literals_.push_back({e, n.text, n.column});
        return e;
    }

    SignalRef parse_signal_ref() {
        const Token& first = expect(Tok::Ident, "signal name");
        SignalRef sig;
        sig.name = first.text;

        // Two-word keyword spellings ("read address", "write valid", ...).
        static const char* kFirst[] = {"read", "write", "address"};
        static const char* kSecond[] = {"address", "data", "ready", "valid"};
        const std::string w1 = lower(first.text);
        if (std::any_of(std::begin(kFirst), std::end(kFirst),
                        [&](const char* w) { return w1 == w; }) &&
            peek().kind == Tok::Ident) {
            const std::string w2 = lower(peek().text);
            if (std::any_of(std::begin(kSecond), std::end(kSecond),
                            [&](const char* w) { return w2 == w; }) &&
                find_keyword(w1 + " " + w2)) {
                sig.name = first.text + " " + peek().text;
                next();
            }
        }

        if (peek().kind == Tok::LBracket) {
            next();
            const Token& hi = expect(Tok::Number, "bit index");
            const auto hi_lit = literal_from_text(hi.text, false, hi.column);
            if (peek().kind == Tok::Colon) {
                next();
                const Token& lo = expect(Tok::Number, "bit index");
                const auto lo_lit = literal_from_text(lo.text, false, lo.column);
                if (hi_lit.value < lo_lit.value || hi_lit.value > 127)
                    error("bad bit slice", hi.column);
                sig.slice = {static_cast<int>(hi_lit.value), static_cast<int>(lo_lit.value)};
            } else {
                sig.index = static_cast<int>(hi_lit.value);
            }
            expect(Tok::RBracket, "\"]\"");
        }
        return sig;
    }

    void check_assignable(const SignalRef& sig) {
        const std::string n = lower(sig.name);
        if (n == "slave_no" || n == "master_no" || n == "clock_cycles" ||
            n == "mode" || n == "reg_mode")
            fail(DiagCode::AssignmentToInput,
                 "\"" + sig.name + "\" is not a drivable signal");
    }

    // Re-reads bare-digit literals as hex when the comparison partner is an
    // address signal ("read_address >= 93000004").
    void resolve_address_literals(ExprPtr& lhs, ExprPtr& rhs) {
        const auto address_side = [](const ExprPtr& e) {
            return e->kind == Expr::Kind::Signal && is_address_class_name(e->sig.name);
        };
        if (!address_side(lhs) && !address_side(rhs)) return;
        for (ExprPtr* side : {&lhs, &rhs}) {
            ExprPtr& e = *side;
            if (e->kind != Expr::Kind::Literal) continue;
            for (const auto& pending : pending_literals_) {
                if (pending.expr.get() != e.get()) continue;
                const Literal relit = literal_from_text(pending.text, true, pending.column);
                e = make_literal(relit.value, relit.hex);
                break;
            }
        }
    }

    struct PendingLiteral {
        ExprPtr expr;
        std::string text;
        int column;
    };

    std::vector<Token> toks_;
    size_t pos_ = 0;
    std::vector<PendingLiteral> pending_literals_;
};

} // namespace

// ---------------------------------------------------------------------------

PredicateAst parse_predicate(const std::string& src) {
    if (src.empty())
        fail(DiagCode::SyntaxError, "empty predicate");
    return Parser(src).parse_sequence();
}

TimingSpec parse_timing(const std::optional<std::string>& src) {
    if (!src) return TimingSpec::always();
    return Parser(*src).parse_timing_spec();
}

ActionSpec parse_action(const std::string& src) {
    if (src.empty())
        fail(DiagCode::SyntaxError, "empty action");
    return Parser(src).parse_action_spec();
}

// ---------------------------------------------------------------------------
// Policy file

using ordered_json = nlohmann::ordered_json;

namespace {

int text_line(const std::string& text, size_t byte_pos) {
    int line = 1;
    for (size_t i = 0; i < byte_pos && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

std::set<AttackType> parse_attack_types(const std::string& s, const std::string& policy,
                                        const std::string& file) {
    std::set<AttackType> out;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == ';') continue;
        const auto a = attack_from_char(c);
        if (!a)
            fail(DiagCode::InvalidField,
                 "attack_types accepts letters C, I, A (got '" + std::string(1, c) + "')",
                 policy, file);
        out.insert(*a);
    }
    if (out.empty())
        fail(DiagCode::InvalidField, "attack_types must not be empty", policy, file);
    return out;
}

} // namespace

std::vector<Policy> parse_policies_text(const std::string& json_text,
                                        const std::string& filename) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const ordered_json::parse_error& e) {
        fail(DiagCode::MalformedJson, e.what(), {}, filename, text_line(json_text, e.byte));
    }
    if (!doc.is_object())
        fail(DiagCode::MalformedJson, "policy file must be a JSON object keyed by policy names",
             {}, filename);

    std::vector<Policy> out;
    for (const auto& [name, body] : doc.items()) {
        if (!body.is_object())
            fail(DiagCode::MalformedJson, "policy body must be an object", name, filename);
        Policy p;
        p.name = name;
        if (!body.contains("predicate"))
            fail(DiagCode::MissingField, "missing \"predicate\"", name, filename);
        if (!body.contains("action"))
            fail(DiagCode::MissingField, "missing \"action\"", name, filename);
        p.predicate_src = body.at("predicate").get<std::string>();
        p.action_src = body.at("action").get<std::string>();
        if (p.predicate_src.empty())
            fail(DiagCode::MissingField, "empty \"predicate\"", name, filename);
        if (p.action_src.empty())
            fail(DiagCode::MissingField, "empty \"action\"", name, filename);
        if (body.contains("timing"))
            p.timing_src = body.at("timing").get<std::string>();
        if (body.contains("bits_protected")) {
            const auto bits = body.at("bits_protected").get<int64_t>();
            if (bits <= 0)
                fail(DiagCode::InvalidField, "bits_protected must be > 0", name, filename);
            p.bits_protected = static_cast<uint32_t>(bits);
        }
        if (body.contains("attack_types"))
            p.attack_types =
                parse_attack_types(body.at("attack_types").get<std::string>(), name, filename);
        if (body.contains("level")) {
            const std::string level = lower(body.at("level").get<std::string>());
            if (level == "bus") p.level_tag = PolicyLevel::Bus;
            else if (level == "ip") p.level_tag = PolicyLevel::Ip;
            else fail(DiagCode::InvalidField, "level must be \"bus\" or \"ip\"", name, filename);
        }
        if (body.contains("synthesizable"))
            p.synthesizable_tag = body.at("synthesizable").get<bool>();
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Policy> parse_policies(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(DiagCode::FileNotFound, "cannot open policy file \"" + path.string() + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_policies_text(buf.str(), path.string());
}

// ---------------------------------------------------------------------------
// Pretty-printer

namespace {

std::string print_literal(const Literal& lit) {
    if (!lit.hex) return std::to_string(lit.value);
    std::ostringstream os;
    os << "0x" << std::hex << lit.value;
    return os.str();
}

std::string print_expr(const ExprPtr& e);

std::string print_selector(const Expr& e) {
    std::ostringstream os;
    os << to_string(e.selector) << " " << to_string(e.rel) << " " << e.selector_values[0];
    for (size_t i = 1; i < e.selector_values.size(); ++i)
        os << " or " << e.selector_values[i];
    return os.str();
}

std::string print_expr(const ExprPtr& e) {
    switch (e->kind) {
    case Expr::Kind::Literal:
        return print_literal(e->lit);
    case Expr::Kind::Signal:
        return e->sig.text();
    case Expr::Kind::Compare:
        return "(" + print_expr(e->args[0]) + " " + to_string(e->rel) + " " +
               print_expr(e->args[1]) + ")";
    case Expr::Kind::Not:
        return "(not " + print_expr(e->args[0]) + ")";
    case Expr::Kind::And:
        return "(" + print_expr(e->args[0]) + " and " + print_expr(e->args[1]) + ")";
    case Expr::Kind::Or: {
        // "(slave_no = 4 or 5)" would re-parse as a membership selector;
        // parenthesize a bare-literal right operand after an "=" selector.
        const auto& lhs = e->args[0];
        const auto& rhs = e->args[1];
        std::string rhs_text = print_expr(rhs);
        if (lhs->kind == Expr::Kind::Selector && lhs->rel == RelOp::Eq &&
            rhs->kind == Expr::Kind::Literal)
            rhs_text = "(" + rhs_text + ")";
        return "(" + print_expr(lhs) + " or " + rhs_text + ")";
    }
    case Expr::Kind::Popcount: {
        std::ostringstream os;
        os << "countones(";
        for (size_t i = 0; i < e->args.size(); ++i) {
            if (i) os << " ^ ";
            os << print_expr(e->args[i]);
        }
        os << ")";
        return os.str();
    }
    case Expr::Kind::Selector:
        return "(" + print_selector(*e) + ")";
    case Expr::Kind::Temporal:
        if (e->temporal == TemporalOp::Until)
            return "(" + print_expr(e->args[0]) + " until " + print_expr(e->args[1]) + ")";
        return "(" + std::string(to_string(e->temporal)) + " " + print_expr(e->args[0]) + ")";
    }
    return "";
}

} // namespace

std::string pretty_print(const ExprPtr& expr) { return print_expr(expr); }

std::string pretty_print(const PredicateAst& ast) {
    std::ostringstream os;
    for (size_t i = 0; i < ast.stages.size(); ++i) {
        if (i) {
            os << " then ";
            if (ast.stages[i].gap_cycles != 1)
                os << "after " << ast.stages[i].gap_cycles << " cycles ";
        }
        os << print_expr(ast.stages[i].expr);
    }
    return os.str();
}

} // namespace dispel
