#include "sqm/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include <fmt/format.h>

#include "sqm/errors.hpp"

namespace sqm {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void config_error(int line, const std::string& msg) {
    fail(ErrorCode::ConfigError, fmt::format("line {}: {}", line, msg));
}

double parse_double(std::string_view v, int line, std::string_view key) {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (v.empty() || ec != std::errc{} || ptr != end)
        config_error(line, fmt::format("{}: '{}' is not a number", key, v));
    return out;
}

int parse_int(std::string_view v, int line, std::string_view key) {
    int out = 0;
    const auto* end = v.data() + v.size();
    const auto [ptr, ec] = std::from_chars(v.data(), end, out);
    if (v.empty() || ec != std::errc{} || ptr != end)
        config_error(line, fmt::format("{}: '{}' is not an integer", key, v));
    return out;
}

struct Entry {
    std::string value;
    int line;
};

}  // namespace

RunConfig parse_config(std::string_view text) {
    static const char* const known[] = {"alpha",   "beta",   "m_q",          "m_qbar",      "reduced_mass",
                                        "b_z",     "spin",   "n1",           "n2",          "omega_mode",
                                        "omega_value", "prefactor_mode", "q2_fixed", "p2_fixed", "q1_min",
                                        "q1_max",  "q1_step", "p1_values",   "out_dir"};
    std::map<std::string, Entry> entries;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) config_error(line_no, fmt::format("expected key=value, got '{}'", line));
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) config_error(line_no, fmt::format("unknown key '{}'", key));
        if (auto it = entries.find(key); it != entries.end())
            config_error(line_no, fmt::format("duplicate key '{}' (first set on line {})", key, it->second.line));
        entries[key] = {value, line_no};
    }

    RunConfig cfg;
    auto number = [&](const char* key, double& target) {
        if (auto it = entries.find(key); it != entries.end()) target = parse_double(it->second.value, it->second.line, key);
    };
    auto integer = [&](const char* key, int& target) {
        if (auto it = entries.find(key); it != entries.end()) target = parse_int(it->second.value, it->second.line, key);
    };
    auto require = [&](const char* key, bool ok, const std::string& msg) {
        if (ok) return;
        const auto it = entries.find(key);
        config_error(it == entries.end() ? 0 : it->second.line, fmt::format("{}: {}", key, msg));
    };

    auto& p = cfg.params;
    number("alpha", p.alpha);
    number("beta", p.beta);
    number("m_q", p.m_q);
    number("m_qbar", p.m_qbar);
    number("reduced_mass", p.m);
    number("b_z", p.B_z);
    integer("spin", p.spin);
    integer("n1", cfg.label.n1);
    integer("n2", cfg.label.n2);
    cfg.label.spin = p.spin;
    number("q2_fixed", cfg.slice.q2);
    number("p2_fixed", cfg.slice.p2);
    number("q1_min", cfg.slice.q1_lo);
    number("q1_max", cfg.slice.q1_hi);
    number("q1_step", cfg.slice.q1_step);

    require("alpha", p.alpha > 0.0, "must be > 0");
    require("beta", p.beta > 0.0, "must be > 0");
    require("m_q", p.m_q > 0.0, "must be > 0");
    require("m_qbar", p.m_qbar > 0.0, "must be > 0");
    require("reduced_mass", p.m > 0.0, "must be > 0");
    require("b_z", p.B_z >= 0.0, "must be >= 0");
    require("spin", p.spin == 1 || p.spin == -1, "must be +1 or -1");
    require("n1", cfg.label.n1 >= 0, "must be >= 0");
    require("n2", cfg.label.n2 >= 0, "must be >= 0");
    require("q1_step", cfg.slice.q1_step > 0.0, "must be > 0");
    require(entries.count("q1_max") ? "q1_max" : "q1_min", cfg.slice.q1_lo <= cfg.slice.q1_hi, "q1_min must not exceed q1_max");

    std::string omega_mode = "solve";
    if (auto it = entries.find("omega_mode"); it != entries.end()) omega_mode = it->second.value;
    require("omega_mode", omega_mode == "solve" || omega_mode == "fixed", fmt::format("'{}' is not solve|fixed", omega_mode));
    if (omega_mode == "fixed") {
        require("omega_mode", entries.count("omega_value") > 0, "fixed requires omega_value");
        double w = 0.0;
        number("omega_value", w);
        require("omega_value", w > 0.0, "must be > 0");
        p.fixed_omega = w;
    } else {
        require("omega_value", entries.count("omega_value") == 0, "only allowed with omega_mode=fixed");
    }

    if (auto it = entries.find("prefactor_mode"); it != entries.end()) {
        const auto& v = it->second.value;
        require("prefactor_mode", v == "enecor" || v == "b21", fmt::format("'{}' is not enecor|b21", v));
        p.prefactor_mode = v == "enecor" ? PrefactorMode::Enecor : PrefactorMode::B21;
    }

    if (auto it = entries.find("p1_values"); it != entries.end()) {
        cfg.slice.p1_values.clear();
        std::string_view rest = it->second.value;
        while (true) {
            const auto comma = rest.find(',');
            cfg.slice.p1_values.push_back(parse_double(trim(rest.substr(0, comma)), it->second.line, "p1_values"));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
    }

    if (auto it = entries.find("out_dir"); it != entries.end()) {
        require("out_dir", !it->second.value.empty(), "must not be empty");
        cfg.out_dir = it->second.value;
    }
    return cfg;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::IoError, fmt::format("cannot read config file '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

}  // namespace sqm
