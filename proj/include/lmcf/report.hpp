#pragma once

#include <map>
#include <string>
#include <vector>

namespace lmcf {

struct CheckRow {
    std::string name;
    double value = 0.0;  // measured residual / quantity
    double gate = 0.0;   // threshold (ignored when not gated)
    bool gated = true;
    bool pass = true;
};

// Pass/fail verdicts plus enough context to reproduce the run.  Wall-clock
// timing is deliberately not part of the serialized payload so that repeated
// runs with the same configuration are byte-identical.
struct VerificationReport {
    std::string tool_version = "0.1.0";
    std::string subject;  // e.g. "ambient", "model:torus"
    unsigned long long seed = 0;
    std::map<std::string, std::string> config;  // sorted echo of the inputs
    std::vector<CheckRow> rows;

    void add(const std::string& name, double value, double gate, bool gated = true);
    bool all_pass() const;
};

std::string serialize_report_json(const VerificationReport& rep);
std::string serialize_report_csv(const VerificationReport& rep);
VerificationReport parse_report_json(const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Resolves an output path: absolute paths win, otherwise the LSL_OUTPUT_DIR
// environment variable (when set) is used as the base directory.
std::string resolve_output_path(const std::string& name);

// 17-significant-digit textual form used across all serializers
std::string format_double(double x);

}  // namespace lmcf
