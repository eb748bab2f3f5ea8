// Command-line driver: computes and certifies the Galois-line arrangement of
// a linearly normal elliptic quartic in P^3.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "galois/cli.hpp"

namespace {

std::array<galois::Rational, 3> parse_roots(const std::string& text) {
    std::array<galois::Rational, 3> out;
    std::stringstream ss(text);
    std::string part;
    int k = 0;
    while (std::getline(ss, part, ',')) {
        if (k >= 3) throw galois::usage_error("--roots needs exactly three values");
        out[static_cast<size_t>(k++)] = galois::parse_rational(part);
    }
    if (k != 3) throw galois::usage_error("--roots needs exactly three values");
    return out;
}

std::pair<galois::Rational, galois::Rational> parse_pq(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw galois::usage_error("--pq needs two values p,q");
    return {galois::parse_rational(text.substr(0, comma)),
            galois::parse_rational(text.substr(comma + 1))};
}

galois::Complex parse_omega(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw galois::usage_error("--omega needs re,im");
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
}

int emit(const galois::RunResult& res, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << res.output;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "cannot open output file " << out_path << "\n";
            return 2;
        }
        f << res.output;
    }
    return res.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois lines of elliptic space quartics"};
    app.require_subcommand(1);

    std::string roots_text, pq_text, omega_text, center_text, line_text, out_path;
    double tol = 1e-8;
    std::uint64_t seed = 20240901ull;
    bool json = false, square = false, verify_gp = false;

    auto add_curve_opts = [&](CLI::App* cmd) {
        cmd->add_option("--roots", roots_text, "roots e1,e2,e3 (rational, sum 0)");
        cmd->add_option("--pq", pq_text, "coefficients p,q of y^2 = 4x^3 + px + q");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--tol", tol, "numeric tolerance, in (0, 1e-4]");
        cmd->add_option("--seed", seed, "seed for the numeric sampling");
        cmd->add_flag("--json", json, "emit JSON");
        cmd->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full arrangement report");
    add_curve_opts(analyze);
    add_common(analyze);

    CLI::App* verify = app.add_subcommand("verify-line", "re-certify one catalog line");
    add_curve_opts(verify);
    verify->add_option("--line", line_text, "label, e.g. edge(0,1) or l(2,2)");
    add_common(verify);

    CLI::App* project = app.add_subcommand("project", "project the curve from a center");
    add_curve_opts(project);
    project->add_option("--center", center_text, "center X:Y:Z:W")->required();
    project->add_flag("--verify-galois-point", verify_gp,
                      "verify the plane Galois point at the image of the center's line");
    add_common(project);

    CLI::App* enumerate = app.add_subcommand("enumerate-groups", "order-4 torus groups");
    enumerate->add_option("--omega", omega_text, "lattice parameter re,im");
    enumerate->add_flag("--square-lattice", square, "shorthand for omega = i");
    add_common(enumerate);

    CLI11_PARSE(app, argc, argv);

    try {
        galois::RunConfig cfg;
        cfg.tolerance = tol;
        cfg.seed = seed;
        cfg.json_output = json;
        cfg.square_lattice = square;
        cfg.verify_galois_point = verify_gp;
        if (!roots_text.empty()) cfg.roots = parse_roots(roots_text);
        if (!pq_text.empty()) cfg.pq = parse_pq(pq_text);
        if (!omega_text.empty()) cfg.omega = parse_omega(omega_text);
        if (!center_text.empty()) cfg.center = center_text;
        if (!line_text.empty()) cfg.line_label = line_text;

        galois::RunResult res;
        if (app.got_subcommand(analyze)) {
            cfg.mode = galois::RunConfig::Mode::Analyze;
            res = galois::run_analyze(cfg);
        } else if (app.got_subcommand(verify)) {
            cfg.mode = galois::RunConfig::Mode::VerifyLine;
            res = galois::run_verify_line(cfg);
        } else if (app.got_subcommand(project)) {
            cfg.mode = galois::RunConfig::Mode::Project;
            res = galois::run_project(cfg);
        } else {
            cfg.mode = galois::RunConfig::Mode::EnumerateGroups;
            res = galois::run_enumerate_groups(cfg);
        }
        return emit(res, out_path);
    } catch (const galois::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind() == "usage" || e.kind() == "invalid-input" || e.kind() == "singular-curve" ||
                       e.kind() == "not-weierstrass-normal"
                   ? 2
                   : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
