#include "lmcf/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace lmcf {

void VerificationReport::add(const std::string& name, double value, double gate,
                             bool gated) {
    CheckRow row;
    row.name = name;
    row.value = value;
    row.gate = gate;
    row.gated = gated;
    row.pass = !gated || value <= gate;
    rows.push_back(row);
}

bool VerificationReport::all_pass() const {
    for (const auto& r : rows)
        if (r.gated && !r.pass) return false;
    return true;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string serialize_report_json(const VerificationReport& rep) {
    nlohmann::ordered_json j;
    j["tool_version"] = rep.tool_version;
    j["subject"] = rep.subject;
    j["seed"] = rep.seed;
    nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
    for (const auto& [k, v] : rep.config) cfg[k] = v;
    j["config"] = cfg;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& r : rep.rows) {
        nlohmann::ordered_json row;
        row["name"] = r.name;
        row["value"] = format_double(r.value);
        row["gate"] = format_double(r.gate);
        row["gated"] = r.gated;
        row["pass"] = r.pass;
        rows.push_back(row);
    }
    j["checks"] = rows;
    j["all_pass"] = rep.all_pass();
    return j.dump(2) + "\n";
}

std::string serialize_report_csv(const VerificationReport& rep) {
    std::ostringstream out;
    out << "name,value,gate,gated,pass\n";
    for (const auto& r : rep.rows)
        out << r.name << ',' << format_double(r.value) << ','
            << format_double(r.gate) << ',' << (r.gated ? 1 : 0) << ','
            << (r.pass ? 1 : 0) << '\n';
    return out.str();
}

VerificationReport parse_report_json(const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    VerificationReport rep;
    rep.tool_version = j.at("tool_version").get<std::string>();
    rep.subject = j.at("subject").get<std::string>();
    rep.seed = j.at("seed").get<unsigned long long>();
    for (const auto& [k, v] : j.at("config").items())
        rep.config[k] = v.get<std::string>();
    for (const auto& row : j.at("checks")) {
        CheckRow r;
        r.name = row.at("name").get<std::string>();
        r.value = std::strtod(row.at("value").get<std::string>().c_str(), nullptr);
        r.gate = std::strtod(row.at("gate").get<std::string>().c_str(), nullptr);
        r.gated = row.at("gated").get<bool>();
        r.pass = row.at("pass").get<bool>();
        rep.rows.push_back(r);
    }
    return rep;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_file: cannot open " + path);
    f << content;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("read_file: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string resolve_output_path(const std::string& name) {
    if (!name.empty() && name.front() == '/') return name;
    const char* dir = std::getenv("LSL_OUTPUT_DIR");
    if (dir && *dir) return std::string(dir) + "/" + name;
    return name;
}

}  // namespace lmcf
