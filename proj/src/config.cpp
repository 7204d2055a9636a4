#include "eehtac/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "eehtac/clustering.hpp"

namespace eehtac {

const char* protocol_name(Protocol p) {
    switch (p) {
        case Protocol::Eehtac: return "eehtac";
        case Protocol::Eulc1: return "eulc1";
        case Protocol::Eulc2: return "eulc2";
        case Protocol::Eulc3: return "eulc3";
        case Protocol::Eulc4: return "eulc4";
    }
    return "eehtac";
}

Protocol protocol_from_name(const std::string& name) {
    if (name == "eehtac") return Protocol::Eehtac;
    if (name == "eulc1") return Protocol::Eulc1;
    if (name == "eulc2") return Protocol::Eulc2;
    if (name == "eulc3") return Protocol::Eulc3;
    if (name == "eulc4") return Protocol::Eulc4;
    throw ConfigError("unknown protocol '" + name + "'");
}

EulcWeights eulc_weights(Protocol p) {
    switch (p) {
        case Protocol::Eulc1: return {0.2, 0.3, 0.5};
        case Protocol::Eulc2: return {0.1, 0.5, 0.4};
        case Protocol::Eulc3: return {0.4, 0.3, 0.3};
        case Protocol::Eulc4: return {0.4, 0.4, 0.2};
        default: throw ConfigError("protocol has no baseline weights");
    }
}

int ScenarioConfig::layer_count(double depth, double ctr, int k_layer) {
    return layer_number(depth, ctr, k_layer);
}

NetworkParams ScenarioConfig::network_params() const {
    NetworkParams p;
    p.node_count = nodes;
    p.region = {region_width, region_length, region_depth};
    p.ctr = ctr;
    p.k_layer = k_layer;
    p.total_layers = total_layers();
    p.t_cmp = t_cmp;
    p.t_adv = t_adv;
    p.avb_set = avb_set;
    p.e_surv = e_surv;
    p.srl = srl;
    p.priority_mode = priority_mode;
    p.p4_variant = p4_variant;
    p.radius_mode = radius_mode;
    p.ch_window = ch_window;
    return p;
}

void ScenarioConfig::validate() const {
    auto fail = [](const std::string& msg) { throw ConfigError(msg); };
    if (nodes < 1) fail("nodes must be >= 1");
    if (rounds < 0) fail("rounds must be >= 0");
    if (region_width <= 0 || region_length <= 0 || region_depth <= 0)
        fail("region extents must be positive");
    if (packet_bytes <= 0 || control_bytes <= 0) fail("packet sizes must be positive");
    if (data_rate_bps <= 0) fail("data_rate must be positive");
    if (carrier_khz <= 0) fail("carrier_frequency must be positive");
    if (ctr <= 0) fail("ctr must be positive");
    if (e_init <= 0) fail("initial energy must be positive");
    if (e_idle < 0 || e_fuse < 0 || e_elec < 0 || e_amp < 0)
        fail("energy coefficients must be non-negative");
    if (spreading_exponent <= 0) fail("spreading_exponent must be positive");
    if (t_cmp <= 0 || t_adv < 0 || t_data <= 0) fail("protocol timings must be positive");
    if (sense_interval <= 0) fail("sense_interval must be positive");
    if (k_layer < 1 || k_layer > 5) fail("k_layer must be within [1, 5]");
    if (avb_set < 0) fail("avb_set must be >= 0");
    if (e_surv < 0 || e_surv >= e_init) fail("e_surv must be within [0, initial)");
    if (srl < 1) fail("srl must be >= 1");
    if (ch_window < 2) fail("ch_window must be >= 2");
    if (max_bonding_retries < 1) fail("max_bonding_retries must be >= 1");
    if (renewal_hazard < 0 || renewal_hazard >= 1) fail("renewal_hazard must be in [0, 1)");
    if (delta_proc < 0) fail("delta_proc must be >= 0");
    if (current_speed < 0 || jitter < 0) fail("mobility parameters must be >= 0");
    if (auv_speed <= 0) fail("auv speed must be positive");
    if (primary_fault_rate < 0 || primary_fault_rate > 1)
        fail("primary_fault_rate must be within [0, 1]");
}

namespace {

// Units accepted per dimension, with the factor into base units.
struct Unit {
    const char* token;
    double factor;
};

const std::vector<Unit> kNone = {{"", 1.0}};
const std::vector<Unit> kLength = {{"m", 1.0}};
const std::vector<Unit> kTime = {{"s", 1.0}, {"ms", 1e-3}};
const std::vector<Unit> kEnergy = {{"J", 1.0}, {"mJ", 1e-3}, {"uJ", 1e-6}, {"nJ", 1e-9}};
const std::vector<Unit> kPerBit = {{"J/bit", 1.0}, {"nJ/bit", 1e-9}, {"pJ/bit", 1e-12}};
const std::vector<Unit> kRate = {{"bps", 1.0}, {"kbps", 1e3}};
const std::vector<Unit> kFreq = {{"kHz", 1.0}};
const std::vector<Unit> kSpeed = {{"m/s", 1.0}};
const std::vector<Unit> kBytes = {{"B", 1.0}};

struct ParseCtx {
    int line = 0;
    std::string key;
    std::string value;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError("line " + std::to_string(line) + ": " + msg);
    }

    double number(const std::vector<Unit>& units) const {
        std::istringstream in(value);
        double v = 0.0;
        if (!(in >> v)) fail("expected a number for '" + key + "', got '" + value + "'");
        std::string unit;
        in >> unit;
        std::string trailing;
        if (in >> trailing) fail("trailing content after value for '" + key + "'");
        for (const auto& u : units) {
            if (unit == u.token) return v * u.factor;
        }
        fail("bad unit '" + unit + "' for '" + key + "'");
    }

    long long integer() const {
        const double v = number(kNone);
        if (v != std::floor(v)) fail("expected an integer for '" + key + "'");
        return static_cast<long long>(v);
    }

    std::string word() const {
        std::istringstream in(value);
        std::string w, trailing;
        in >> w;
        if (in >> trailing) fail("trailing content after value for '" + key + "'");
        return w;
    }
};

using Setter = std::function<void(ScenarioConfig&, const ParseCtx&)>;

const std::map<std::string, std::map<std::string, Setter>>& schema() {
    static const std::map<std::string, std::map<std::string, Setter>> s = {
        {"simulation",
         {
             {"nodes", [](ScenarioConfig& c, const ParseCtx& p) {
                  const auto v = p.integer();
                  if (v < 1) p.fail("nodes must be >= 1");
                  c.nodes = static_cast<std::uint32_t>(v);
              }},
             {"rounds", [](ScenarioConfig& c, const ParseCtx& p) {
                  const auto v = p.integer();
                  if (v < 0) p.fail("rounds must be >= 0");
                  c.rounds = static_cast<int>(v);
              }},
             {"seed", [](ScenarioConfig& c, const ParseCtx& p) {
                  const auto v = p.integer();
                  if (v < 0) p.fail("seed must be >= 0");
                  c.seed = static_cast<std::uint64_t>(v);
              }},
             {"protocol", [](ScenarioConfig& c, const ParseCtx& p) {
                  try {
                      c.protocol = protocol_from_name(p.word());
                  } catch (const ConfigError& e) {
                      p.fail(e.what());
                  }
              }},
         }},
        {"region",
         {
             {"width", [](ScenarioConfig& c, const ParseCtx& p) { c.region_width = p.number(kLength); }},
             {"length", [](ScenarioConfig& c, const ParseCtx& p) { c.region_length = p.number(kLength); }},
             {"depth", [](ScenarioConfig& c, const ParseCtx& p) { c.region_depth = p.number(kLength); }},
         }},
        {"radio",
         {
             {"packet_size", [](ScenarioConfig& c, const ParseCtx& p) { c.packet_bytes = p.number(kBytes); }},
             {"control_size", [](ScenarioConfig& c, const ParseCtx& p) { c.control_bytes = p.number(kBytes); }},
             {"data_rate", [](ScenarioConfig& c, const ParseCtx& p) { c.data_rate_bps = p.number(kRate); }},
             {"carrier_frequency", [](ScenarioConfig& c, const ParseCtx& p) { c.carrier_khz = p.number(kFreq); }},
             {"ctr", [](ScenarioConfig& c, const ParseCtx& p) { c.ctr = p.number(kLength); }},
         }},
        {"energy",
         {
             {"initial", [](ScenarioConfig& c, const ParseCtx& p) { c.e_init = p.number(kEnergy); }},
             {"idle", [](ScenarioConfig& c, const ParseCtx& p) { c.e_idle = p.number(kEnergy); }},
             {"fuse", [](ScenarioConfig& c, const ParseCtx& p) { c.e_fuse = p.number(kPerBit); }},
             {"electronics", [](ScenarioConfig& c, const ParseCtx& p) { c.e_elec = p.number(kPerBit); }},
             {"amplifier", [](ScenarioConfig& c, const ParseCtx& p) { c.e_amp = p.number(kPerBit); }},
             {"spreading_exponent", [](ScenarioConfig& c, const ParseCtx& p) { c.spreading_exponent = p.number(kNone); }},
         }},
        {"protocol",
         {
             {"dt_preset", [](ScenarioConfig& c, const ParseCtx& p) {
                  const std::string w = p.word();
                  if (w == "high-fault") {
                      c.dt_preset = DtPreset::HighFault;
                      c.t_cmp = 0.1;
                  } else if (w == "normal") {
                      c.dt_preset = DtPreset::Normal;
                      c.t_cmp = 90.0;
                  } else if (w == "high-overhead") {
                      c.dt_preset = DtPreset::HighOverhead;
                      c.t_cmp = 300.0;
                  } else if (w == "custom") {
                      c.dt_preset = DtPreset::Custom;
                  } else {
                      p.fail("unknown dt_preset '" + w + "'");
                  }
              }},
             {"t_cmp", [](ScenarioConfig& c, const ParseCtx& p) {
                  c.t_cmp = p.number(kTime);
                  c.dt_preset = DtPreset::Custom;
              }},
             {"t_adv", [](ScenarioConfig& c, const ParseCtx& p) { c.t_adv = p.number(kTime); }},
             {"t_data", [](ScenarioConfig& c, const ParseCtx& p) { c.t_data = p.number(kTime); }},
             {"sense_interval", [](ScenarioConfig& c, const ParseCtx& p) { c.sense_interval = p.number(kTime); }},
             {"k_layer", [](ScenarioConfig& c, const ParseCtx& p) { c.k_layer = static_cast<int>(p.integer()); }},
             {"avb_set", [](ScenarioConfig& c, const ParseCtx& p) { c.avb_set = p.number(kNone); }},
             {"e_surv", [](ScenarioConfig& c, const ParseCtx& p) { c.e_surv = p.number(kEnergy); }},
             {"srl", [](ScenarioConfig& c, const ParseCtx& p) { c.srl = static_cast<int>(p.integer()); }},
             {"priority", [](ScenarioConfig& c, const ParseCtx& p) {
                  const std::string w = p.word();
                  if (w == "low-tag") c.priority_mode = PriorityMode::LowTag;
                  else if (w == "high-tag") c.priority_mode = PriorityMode::HighTag;
                  else p.fail("priority must be low-tag or high-tag");
              }},
             {"p4_variant", [](ScenarioConfig& c, const ParseCtx& p) {
                  const std::string w = p.word();
                  if (w == "literal") c.p4_variant = P4Variant::Literal;
                  else if (w == "complementary") c.p4_variant = P4Variant::Complementary;
                  else p.fail("p4_variant must be literal or complementary");
              }},
             {"radius_mode", [](ScenarioConfig& c, const ParseCtx& p) {
                  const std::string w = p.word();
                  if (w == "literal") c.radius_mode = RadiusMode::Literal;
                  else if (w == "clamped") c.radius_mode = RadiusMode::Clamped;
                  else p.fail("radius_mode must be literal or clamped");
              }},
             {"ch_window", [](ScenarioConfig& c, const ParseCtx& p) { c.ch_window = static_cast<int>(p.integer()); }},
             {"max_bonding_retries", [](ScenarioConfig& c, const ParseCtx& p) { c.max_bonding_retries = static_cast<int>(p.integer()); }},
             {"renewal_hazard", [](ScenarioConfig& c, const ParseCtx& p) { c.renewal_hazard = p.number(kNone); }},
             {"delta_proc", [](ScenarioConfig& c, const ParseCtx& p) { c.delta_proc = p.number(kTime); }},
         }},
        {"mobility",
         {
             {"current_speed", [](ScenarioConfig& c, const ParseCtx& p) { c.current_speed = p.number(kSpeed); }},
             {"jitter", [](ScenarioConfig& c, const ParseCtx& p) { c.jitter = p.number(kNone); }},
         }},
        {"auv",
         {
             {"speed", [](ScenarioConfig& c, const ParseCtx& p) { c.auv_speed = p.number(kSpeed); }},
         }},
        {"faults",
         {
             {"primary_fault_rate", [](ScenarioConfig& c, const ParseCtx& p) { c.primary_fault_rate = p.number(kNone); }},
         }},
    };
    return s;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

ScenarioConfig parse_config(const std::string& document) {
    ScenarioConfig config;
    std::istringstream in(document);
    std::string raw;
    std::string section;
    int line_no = 0;

    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        ParseCtx ctx;
        ctx.line = line_no;

        if (line == "}") {
            if (section.empty()) ctx.fail("unmatched '}'");
            section.clear();
            continue;
        }
        if (line.back() == '{') {
            if (!section.empty()) ctx.fail("nested sections are not supported");
            section = trim(line.substr(0, line.size() - 1));
            if (!schema().count(section))
                ctx.fail("unknown section '" + section + "'");
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) ctx.fail("expected 'key = value'");
        if (section.empty()) ctx.fail("key outside of a section");

        ctx.key = trim(line.substr(0, eq));
        ctx.value = trim(line.substr(eq + 1));
        const auto& keys = schema().at(section);
        const auto it = keys.find(ctx.key);
        if (it == keys.end())
            ctx.fail("unknown key '" + ctx.key + "' in section '" + section + "'");
        it->second(config, ctx);
    }
    if (!section.empty())
        throw ConfigError("line " + std::to_string(line_no) + ": unterminated section '" + section + "'");

    config.validate();
    return config;
}

ScenarioConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

const char* preset_name(DtPreset p) {
    switch (p) {
        case DtPreset::HighFault: return "high-fault";
        case DtPreset::Normal: return "normal";
        case DtPreset::HighOverhead: return "high-overhead";
        case DtPreset::Custom: return "custom";
    }
    return "custom";
}

}  // namespace

std::string render_config(const ScenarioConfig& c) {
    std::ostringstream out;
    out << "simulation {\n"
        << "  nodes = " << c.nodes << "\n"
        << "  rounds = " << c.rounds << "\n"
        << "  seed = " << c.seed << "\n"
        << "  protocol = " << protocol_name(c.protocol) << "\n"
        << "}\n\n"
        << "region {\n"
        << "  width = " << fmt(c.region_width) << " m\n"
        << "  length = " << fmt(c.region_length) << " m\n"
        << "  depth = " << fmt(c.region_depth) << " m\n"
        << "}\n\n"
        << "radio {\n"
        << "  packet_size = " << fmt(c.packet_bytes) << " B\n"
        << "  control_size = " << fmt(c.control_bytes) << " B\n"
        << "  data_rate = " << fmt(c.data_rate_bps) << " bps\n"
        << "  carrier_frequency = " << fmt(c.carrier_khz) << " kHz\n"
        << "  ctr = " << fmt(c.ctr) << " m\n"
        << "}\n\n"
        << "energy {\n"
        << "  initial = " << fmt(c.e_init) << " J\n"
        << "  idle = " << fmt(c.e_idle) << " J\n"
        << "  fuse = " << fmt(c.e_fuse) << " J/bit\n"
        << "  electronics = " << fmt(c.e_elec) << " J/bit\n"
        << "  amplifier = " << fmt(c.e_amp) << " J/bit\n"
        << "  spreading_exponent = " << fmt(c.spreading_exponent) << "\n"
        << "}\n\n"
        << "protocol {\n"
        << "  dt_preset = " << preset_name(c.dt_preset) << "\n";
    if (c.dt_preset == DtPreset::Custom)
        out << "  t_cmp = " << fmt(c.t_cmp) << " s\n";
    out << "  t_adv = " << fmt(c.t_adv) << " s\n"
        << "  t_data = " << fmt(c.t_data) << " s\n"
        << "  sense_interval = " << fmt(c.sense_interval) << " s\n"
        << "  k_layer = " << c.k_layer << "\n"
        << "  avb_set = " << fmt(c.avb_set) << "\n"
        << "  e_surv = " << fmt(c.e_surv) << " J\n"
        << "  srl = " << c.srl << "\n"
        << "  priority = " << (c.priority_mode == PriorityMode::LowTag ? "low-tag" : "high-tag") << "\n"
        << "  p4_variant = " << (c.p4_variant == P4Variant::Literal ? "literal" : "complementary") << "\n"
        << "  radius_mode = " << (c.radius_mode == RadiusMode::Literal ? "literal" : "clamped") << "\n"
        << "  ch_window = " << c.ch_window << "\n"
        << "  max_bonding_retries = " << c.max_bonding_retries << "\n"
        << "  renewal_hazard = " << fmt(c.renewal_hazard) << "\n"
        << "  delta_proc = " << fmt(c.delta_proc) << " s\n"
        << "}\n\n"
        << "mobility {\n"
        << "  current_speed = " << fmt(c.current_speed) << " m/s\n"
        << "  jitter = " << fmt(c.jitter) << "\n"
        << "}\n\n"
        << "auv {\n"
        << "  speed = " << fmt(c.auv_speed) << " m/s\n"
        << "}\n\n"
        << "faults {\n"
        << "  primary_fault_rate = " << fmt(c.primary_fault_rate) << "\n"
        << "}\n";
    return out.str();
}

}  // namespace eehtac
