#include "dispel/soc_config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace dispel {

using nlohmann::json;

const char* to_string(BusProtocol p) {
    return p == BusProtocol::Axi4 ? "AXI4" : "Wishbone";
}

const char* to_string(IpKind k) {
    return k == IpKind::Master ? "Master" : "Slave";
}

const char* to_string(IpCategory c) {
    switch (c) {
    case IpCategory::Crypto: return "Crypto";
    case IpCategory::Hashing: return "Hashing";
    case IpCategory::Memory: return "Memory";
    case IpCategory::Dsp: return "DSP";
    case IpCategory::Accelerator: return "Accelerator";
    case IpCategory::Peripheral: return "Peripheral";
    case IpCategory::Other: return "Other";
    }
    return "Other";
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
}

BusProtocol parse_protocol(const std::string& s, const std::string& file) {
    const std::string v = lower(s);
    if (v == "axi4" || v == "axi") return BusProtocol::Axi4;
    if (v == "wishbone") return BusProtocol::Wishbone;
    fail(DiagCode::InvalidField, "unknown bus_protocol \"" + s + "\" (expected AXI4 or Wishbone)",
         {}, file);
}

IpKind parse_kind(const std::string& s, const std::string& ip, const std::string& file) {
    const std::string v = lower(s);
    if (v == "master") return IpKind::Master;
    if (v == "slave") return IpKind::Slave;
    fail(DiagCode::InvalidField, "unknown kind \"" + s + "\" (expected Master or Slave)",
         ip, file);
}

IpCategory parse_category(const std::string& s, const std::string& ip, const std::string& file) {
    const std::string v = lower(s);
    if (v == "crypto") return IpCategory::Crypto;
    if (v == "hashing") return IpCategory::Hashing;
    if (v == "memory") return IpCategory::Memory;
    if (v == "dsp") return IpCategory::Dsp;
    if (v == "accelerator") return IpCategory::Accelerator;
    if (v == "peripheral") return IpCategory::Peripheral;
    if (v == "other") return IpCategory::Other;
    fail(DiagCode::InvalidField, "unknown category \"" + s + "\"", ip, file);
}

int json_line(const std::string& text, size_t byte_pos) {
    int line = 1;
    for (size_t i = 0; i < byte_pos && i < text.size(); ++i)
        if (text[i] == '\n') ++line;
    return line;
}

uint32_t address_field(const json& j, const char* key, const std::string& ip,
                       const std::string& file, uint32_t fallback) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (v.is_number_unsigned() || v.is_number_integer()) {
        const auto n = v.get<int64_t>();
        if (n < 0 || n > 0xFFFFFFFFll)
            fail(DiagCode::InvalidField, std::string(key) + " out of 32-bit range", ip, file);
        return static_cast<uint32_t>(n);
    }
    if (v.is_string()) {
        try {
            return parse_address_string(v.get<std::string>());
        } catch (const CompileError& e) {
            fail(DiagCode::InvalidField,
                 std::string(key) + ": " + e.diag().message, ip, file);
        }
    }
    fail(DiagCode::InvalidField, std::string(key) + " must be a hex string or integer", ip, file);
}

} // namespace

uint32_t parse_address_string(const std::string& text) {
    std::string s = text;
    if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
    if (s.empty())
        fail(DiagCode::InvalidField, "empty address string");
    uint64_t value = 0;
    for (char c : s) {
        int digit;
        if (c >= '0' && c <= '9') digit = c - '0';
        else if (c >= 'a' && c <= 'f') digit = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') digit = c - 'A' + 10;
        else if (c == '_') continue;
        else fail(DiagCode::InvalidField, "invalid hex digit '" + std::string(1, c) +
                                          "' in address \"" + text + "\"");
        value = value * 16 + digit;
        if (value > 0xFFFFFFFFull)
            fail(DiagCode::InvalidField, "address \"" + text + "\" exceeds 32 bits");
    }
    return static_cast<uint32_t>(value);
}

const IpConfig* SocConfig::find_by_id(int id) const {
    for (const auto& ip : ips)
        if (ip.id == id) return &ip;
    return nullptr;
}

const IpConfig* SocConfig::find_by_name(const std::string& name) const {
    for (const auto& ip : ips)
        if (ip.name == name) return &ip;
    return nullptr;
}

std::vector<const IpConfig*> SocConfig::masters() const {
    std::vector<const IpConfig*> out;
    for (const auto& ip : ips)
        if (ip.kind == IpKind::Master) out.push_back(&ip);
    return out;
}

std::vector<const IpConfig*> SocConfig::slaves() const {
    std::vector<const IpConfig*> out;
    for (const auto& ip : ips)
        if (ip.kind == IpKind::Slave) out.push_back(&ip);
    return out;
}

SocConfig parse_soc_config(const std::string& json_text, const std::string& filename) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(DiagCode::MalformedJson, e.what(), {}, filename,
             json_line(json_text, e.byte));
    }
    if (!doc.is_object())
        fail(DiagCode::MalformedJson, "top level must be a JSON object", {}, filename);

    SocConfig cfg;
    cfg.clock_name = doc.value("clock", "clk");
    cfg.reset_name = doc.value("reset", "rst");
    if (doc.contains("bus_protocol"))
        cfg.bus_protocol = parse_protocol(doc.at("bus_protocol").get<std::string>(), filename);

    if (doc.contains("ips")) {
        if (!doc.at("ips").is_array())
            fail(DiagCode::MalformedJson, "\"ips\" must be an array", {}, filename);
        for (const auto& j : doc.at("ips")) {
            IpConfig ip;
            if (!j.contains("name"))
                fail(DiagCode::MissingField, "IP entry missing \"name\"", {}, filename);
            ip.name = j.at("name").get<std::string>();
            if (!j.contains("id"))
                fail(DiagCode::MissingField, "missing \"id\"", ip.name, filename);
            ip.id = j.at("id").get<int>();
            if (j.contains("kind"))
                ip.kind = parse_kind(j.at("kind").get<std::string>(), ip.name, filename);
            if (j.contains("category"))
                ip.category = parse_category(j.at("category").get<std::string>(), ip.name, filename);
            ip.addr_start = address_field(j, "addr_start", ip.name, filename, 0);
            ip.addr_end = address_field(j, "addr_end", ip.name, filename, ip.addr_start);
            ip.base_addr = address_field(j, "base_addr", ip.name, filename, ip.addr_start);
            if (j.contains("data_marker_start"))
                ip.data_marker_start = address_field(j, "data_marker_start", ip.name, filename, 0);
            if (j.contains("data_marker_end"))
                ip.data_marker_end = address_field(j, "data_marker_end", ip.name, filename, 0);
            ip.trusted = j.value("trusted", false);
            cfg.ips.push_back(std::move(ip));
        }
    }

    validate_soc_config(cfg, filename);
    return cfg;
}

SocConfig load_soc_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(DiagCode::FileNotFound, "cannot open SoC config \"" + path.string() + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_soc_config(buf.str(), path.string());
}

void validate_soc_config(const SocConfig& cfg, const std::string& filename) {
    bool has_master = false, has_slave = false;
    for (const auto& ip : cfg.ips) {
        (ip.kind == IpKind::Master ? has_master : has_slave) = true;
        if (ip.id < 0)
            fail(DiagCode::ConfigInvariantViolation, "negative id", ip.name, filename);
        if (ip.kind == IpKind::Slave && ip.addr_start > ip.addr_end)
            fail(DiagCode::ConfigInvariantViolation, "addr_start > addr_end", ip.name, filename);
        if (ip.data_marker_start || ip.data_marker_end) {
            const uint32_t lo = ip.data_marker_start.value_or(ip.addr_start);
            const uint32_t hi = ip.data_marker_end.value_or(ip.addr_end);
            if (lo > hi || lo < ip.addr_start || hi > ip.addr_end)
                fail(DiagCode::ConfigInvariantViolation,
                     "data markers outside [addr_start, addr_end]", ip.name, filename);
        }
    }
    if (!has_master)
        fail(DiagCode::ConfigInvariantViolation, "no master IP", {}, filename);
    if (!has_slave)
        fail(DiagCode::ConfigInvariantViolation, "no slave IP", {}, filename);

    for (size_t i = 0; i < cfg.ips.size(); ++i) {
        for (size_t k = i + 1; k < cfg.ips.size(); ++k) {
            const auto& a = cfg.ips[i];
            const auto& b = cfg.ips[k];
            if (a.name == b.name)
                fail(DiagCode::ConfigInvariantViolation, "duplicate IP name", a.name, filename);
            if (a.id == b.id)
                fail(DiagCode::ConfigInvariantViolation, "duplicate IP id", a.name, filename);
            if (a.kind == IpKind::Slave && b.kind == IpKind::Slave &&
                a.addr_start <= b.addr_end && b.addr_start <= a.addr_end)
                fail(DiagCode::ConfigInvariantViolation,
                     "overlapping slave address ranges (" + a.name + ", " + b.name + ")",
                     a.name, filename);
        }
    }
}

const IpConfig* lookup_ip_by_address(const SocConfig& cfg, uint32_t addr) {
    for (const auto& ip : cfg.ips)
        if (ip.contains(addr)) return &ip;
    return nullptr;
}

} // namespace dispel
