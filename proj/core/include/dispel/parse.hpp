// Front-end parsers for the policy file and the three tuple fields.
//
// Predicate grammar:
//   sequence   := expr { "then" ["after" int "cycles"] expr }
//   expr       := until_expr
//   until_expr := or_expr ["until" or_expr]
//   or_expr    := and_expr { ("or"|"||") and_expr }
//   and_expr   := not_expr { ("and"|"&&"|",") not_expr }
//   not_expr   := ("not"|"!"|"eventually"|"always") not_expr | atom
//   atom       := "(" expr ")" | selector | comparison | term
//   comparison := term rel term
//   term       := literal | signal_ref | ("countones"|"popcount") "(" xor ")"
//   xor        := term { "^" term }
//   selector   := ("slave_no"|"master_no"|"clock_cycles") rel literal
//                 { "or" literal }          // membership, "=" only
//
// Literals compared against address-class signals are read as hex even
// without a 0x prefix (the policy idiom writes "93000004" for 0x93000004);
// everywhere else bare numbers are decimal.
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dispel/policy.hpp"

namespace dispel {

std::vector<Policy> parse_policies_text(const std::string& json_text,
                                        const std::string& filename);
std::vector<Policy> parse_policies(const std::filesystem::path& path);

PredicateAst parse_predicate(const std::string& src);
TimingSpec parse_timing(const std::optional<std::string>& src);
ActionSpec parse_action(const std::string& src);

// Canonical source text; parse_predicate(pretty_print(ast)) is structurally
// identical to ast for every tree over the grammar.
std::string pretty_print(const PredicateAst& ast);
std::string pretty_print(const ExprPtr& expr);

} // namespace dispel
