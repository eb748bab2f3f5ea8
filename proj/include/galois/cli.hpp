#ifndef GALOIS_CLI_HPP
#define GALOIS_CLI_HPP

#include <optional>
#include <string>

#include "galois/report_json.hpp"

namespace galois {

// One invocation of the tool. Exactly one mode; tolerance in (0, 1e-4].
struct RunConfig {
    enum class Mode { Analyze, VerifyLine, Project, EnumerateGroups };
    Mode mode = Mode::Analyze;
    std::optional<std::array<Rational, 3>> roots;
    std::optional<std::pair<Rational, Rational>> pq;
    std::optional<Complex> omega;
    bool square_lattice = false;
    std::optional<std::string> center;     // "X:Y:Z:W"
    std::optional<std::string> line_label; // "edge(0,1)" or "l(2,2)"
    bool verify_galois_point = false;
    double tolerance = 1e-8;
    std::uint64_t seed = 20240901ull;
    bool json_output = false;
};

struct RunResult {
    int exit_code = 0;   // 0 ok, 1 certificate/claim failure, 2 usage
    std::string output;  // full text or JSON document
};

EllipticCurveModel curve_from_config(const RunConfig& cfg);

RunResult run_analyze(const RunConfig& cfg);
RunResult run_enumerate_groups(const RunConfig& cfg);
RunResult run_project(const RunConfig& cfg);
RunResult run_verify_line(const RunConfig& cfg);

ProjPoint parse_point(const std::string& text);

} // namespace galois

#endif
