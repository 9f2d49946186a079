#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "redos/regex.hpp"
#include "redos/report.hpp"
#include "redos/utf8.hpp"

using namespace redos;

namespace {

void add_common(CLI::App* cmd, report::Options& opts, bool& json) {
    cmd->add_flag("--dynamic,!--no-dynamic", opts.dynamic, "Confirm attacks with the backtracking matcher (default on)");
    cmd->add_option("--threshold", opts.threshold, "Matcher step threshold")->capture_default_str();
    cmd->add_option("--budget", opts.budget, "DFA state budget for complementation")->capture_default_str();
    cmd->add_option("--deadline", opts.deadline_seconds, "Static analysis deadline in seconds")->capture_default_str();
    cmd->add_flag("--json", json, "Emit a JSON report");
    cmd->add_flag("--timings", opts.timings, "Include wall-clock timings in the report");
}

int emit(const report::Json& j, bool json) {
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        (j.contains("error") ? std::cerr : std::cout) << report::render_text(j);
    if (json && j.contains("error")) std::cerr << report::describe_error(j["error"]) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ReDoS detection for regular expressions and STRIMP programs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", report::kToolVersion);

    report::Options opts;
    bool json = false;

    std::string regex;
    std::string curve_path;
    std::size_t curve_max = 12;
    auto* ar = app.add_subcommand("analyze-regex", "Classify a regex and confirm its attack patterns");
    ar->add_option("regex", regex, "Regular expression")->required();
    add_common(ar, opts, json);
    ar->add_option("--emit-curve", curve_path, "Write (k, steps) samples per pattern as CSV");
    ar->add_option("--curve-max", curve_max, "Largest pump count sampled by --emit-curve")->capture_default_str();

    std::size_t pump = 1;
    auto* ga = app.add_subcommand("gen-attack", "Print an attack string for a vulnerable regex");
    ga->add_option("regex", regex, "Regular expression")->required();
    ga->add_option("--pump", pump, "Core repetitions")->capture_default_str()->check(CLI::PositiveNumber);
    ga->add_option("--budget", opts.budget, "DFA state budget for complementation")->capture_default_str();

    std::string path;
    auto* ap = app.add_subcommand("analyze-program", "Report tainted uses of vulnerable regexes in a STRIMP program");
    ap->add_option("path", path, "STRIMP source file")->required();
    add_common(ap, opts, json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : report::kExitError;
    }

    if (ar->parsed()) {
        auto r = report::analyze_regex(regex, opts);
        emit(r.json, json);
        if (!curve_path.empty() && r.exit_code != report::kExitError) {
            std::ofstream out(curve_path);
            if (!out) {
                std::cerr << "error: cannot write " << curve_path << "\n";
                return report::kExitError;
            }
            out << report::curve_csv(report::attack_curve(regex, curve_max, opts.threshold, opts));
        }
        return r.exit_code;
    }

    if (ga->parsed()) {
        try {
            auto a = report::gen_attack(regex, pump, opts);
            if (!a.value) {
                std::cerr << "regex is " << to_string(a.verdict) << "; no attack pattern\n";
                return a.verdict == Verdict::Unknown ? report::kExitUnknown : report::kExitNotVulnerable;
            }
            std::cout << utf8::encode(*a.value) << "\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return report::kExitError;
        }
    }

    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return report::kExitError;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    auto r = report::analyze_program(ss.str(), path, opts);
    emit(r.json, json);
    return r.exit_code;
}
