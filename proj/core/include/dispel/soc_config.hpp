// SoC description: bus protocol, clock/reset, and the master/slave IP map.
// Loaded once from JSON, validated, then shared read-only by every stage.
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dispel/diagnostics.hpp"

namespace dispel {

enum class BusProtocol { Axi4, Wishbone };
enum class IpKind { Master, Slave };
enum class IpCategory { Crypto, Hashing, Memory, Dsp, Accelerator, Peripheral, Other };

const char* to_string(BusProtocol p);
const char* to_string(IpKind k);
const char* to_string(IpCategory c);

struct IpConfig {
    std::string name;
    int id = 0;
    IpKind kind = IpKind::Slave;
    IpCategory category = IpCategory::Other;
    uint32_t base_addr = 0;
    uint32_t addr_start = 0;
    uint32_t addr_end = 0;
    std::optional<uint32_t> data_marker_start;
    std::optional<uint32_t> data_marker_end;
    bool trusted = false;   // zero-trust default

    bool contains(uint32_t addr) const {
        return kind == IpKind::Slave && addr >= addr_start && addr <= addr_end;
    }
};

struct SocConfig {
    std::string clock_name = "clk";
    std::string reset_name = "rst";
    BusProtocol bus_protocol = BusProtocol::Axi4;
    std::vector<IpConfig> ips;   // file order preserved

    const IpConfig* find_by_id(int id) const;
    const IpConfig* find_by_name(const std::string& name) const;
    std::vector<const IpConfig*> masters() const;
    std::vector<const IpConfig*> slaves() const;
};

// Parses a hex address string ("93000000" or "0x93000000") to unsigned 32-bit.
uint32_t parse_address_string(const std::string& text);

SocConfig parse_soc_config(const std::string& json_text, const std::string& filename);
SocConfig load_soc_config(const std::filesystem::path& path);

// Throws ConfigInvariantViolation naming the violated invariant and IP.
void validate_soc_config(const SocConfig& cfg, const std::string& filename = {});

// The unique slave whose [addr_start, addr_end] contains addr, or nullptr.
const IpConfig* lookup_ip_by_address(const SocConfig& cfg, uint32_t addr);

} // namespace dispel
