// Keyword-to-bus-signal translation and the canonical channel model.
//
// Keywords are the author-facing spellings; each maps to a protocol signal
// (or to nothing, for protocols lacking the signal). Protocol signals map
// onto the canonical channels the transaction model and the generated
// central module use.
#pragma once

#include <array>
#include <optional>
#include <string>

#include "dispel/policy.hpp"
#include "dispel/soc_config.hpp"

namespace dispel {

struct KeywordRow {
    std::array<const char*, 3> spellings;   // e.g. "read_address", "read address", "raddress"
    const char* axi4;                       // protocol signal, or nullptr
    const char* wishbone;
};

// The 11 supported keyword rows, in table order.
const std::vector<KeywordRow>& keyword_table();

// Case-insensitive keyword lookup across all spellings.
const KeywordRow* find_keyword(const std::string& name);

// Protocol cell for a row; nullopt for "-" cells.
std::optional<std::string> bus_signal_for(const KeywordRow& row, BusProtocol protocol);

// Rewrites every keyword leaf to the protocol's signal name. Pure; idempotent
// (protocol signal names are not keywords). Throws NoEquivalentSignal for
// keywords whose protocol cell is empty.
PredicateAst replace_keywords(const PredicateAst& ast, BusProtocol protocol);
ActionSpec replace_keywords(const ActionSpec& action, BusProtocol protocol);

// ---------------------------------------------------------------------------
// Canonical channels

enum class Channel {
    AwAddr, AwValid, AwReady,
    WData, WStrb, WValid, WReady,
    BValid, BReady,
    ArAddr, ArValid, ArReady,
    RData, RValid, RReady,
    Mode,
};

const char* channel_name(Channel c);
int channel_width(Channel c);

// Channel for a protocol signal name (S_AXI_AWADDR, wb_adr_i, ...) or a
// canonical channel name (aw_addr, r_data, ...). Case-insensitive.
std::optional<Channel> channel_for_signal(const std::string& name, BusProtocol protocol);

// Channels carried by the transaction model (readys and the B channel are
// pass-through only and not observable at transaction level).
bool transaction_observable(Channel c);

// Channels a policy action may drive. Mode is an input; readys and the B
// channel stay pass-through.
bool channel_drivable(Channel c);

bool is_write_side(Channel c);
bool is_read_side(Channel c);
bool is_address_channel(Channel c);

// True for names that denote an address-valued signal before keyword
// replacement (used to read bare hex literals in address comparisons).
bool is_address_class_name(const std::string& name);

// The ordered channel list emitted per IP in the central module.
const std::vector<Channel>& port_channels();

} // namespace dispel
