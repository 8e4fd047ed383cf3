// Policy classification: synthesizability, FSM need, bus/IP level, and
// target IP binding.
#pragma once

#include <optional>
#include <string>

#include "dispel/policy.hpp"
#include "dispel/soc_config.hpp"

namespace dispel {

// True iff the predicate stays inside the synthesizable operator set:
// comparisons, boolean connectives, popcount/xor, selectors, signal and
// literal leaves. Temporal operators (eventually/always/until) force the
// assertion path.
bool is_syn(const PredicateAst& p);

// True iff the predicate carries the sequence form (>= 2 stages).
bool is_sequential(const PredicateAst& p);

// True iff the predicate contains a clock_cycles selector or the timing is
// a cycle bound.
bool is_clock_cycles(const PredicateAst& p, const TimingSpec& t);

// True if any leaf references a signal that is neither a keyword, a protocol
// bus signal, a canonical channel, nor a selector - i.e. an IP-internal name.
bool references_internal_signals(const PredicateAst& p, BusProtocol protocol);

PolicyClass classify_policy(const Policy& pol, const PredicateAst& ast,
                            const TimingSpec& timing, const SocConfig& cfg);

// Resolves the IP the policy's enforcement block attaches to.
//   1. slave_no / master_no selectors bind directly (conflicts are
//      AmbiguousTarget; ids must exist).
//   2. Read-address comparisons resolve through the slave address map.
//   3. Write-channel predicates/actions bind to the master side: write
//      enforcement sits on the master-to-bus path.
// Throws UnresolvableTarget when nothing applies.
TargetBinding extract_id_flag(const PredicateAst& p, const SocConfig& cfg);
TargetBinding extract_id_flag(const PredicateAst& p, const ActionSpec& action,
                              const SocConfig& cfg);

// All selector ids the policy applies to (multi-value selectors cover several
// IPs); falls back to the binding id.
std::vector<int> binding_member_ids(const PredicateAst& p, const TargetBinding& b);

// The IP whose asset the policy protects, for scoring: address-resolved slave
// first, then selector target, then the binding side. Null when unknown.
const IpConfig* resolve_involved_ip(const PredicateAst& p,
                                    const std::optional<TargetBinding>& binding,
                                    const SocConfig& cfg);

} // namespace dispel
