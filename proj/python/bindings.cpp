#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "redos/matcher.hpp"
#include "redos/regex.hpp"
#include "redos/report.hpp"
#include "redos/utf8.hpp"
#include "redos/vulnerability.hpp"

namespace py = pybind11;
using namespace redos;

namespace {

report::Options options(bool dynamic, std::uint64_t threshold, std::size_t budget) {
    report::Options o;
    o.dynamic = dynamic;
    o.threshold = threshold;
    o.budget = budget;
    return o;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Linear: return "linear";
        case Verdict::SuperLinear: return "super-linear";
        case Verdict::Exponential: return "exponential";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

}  // namespace

PYBIND11_MODULE(_redos, m) {
    m.doc() = "ReDoS detection: regex complexity classification, attack synthesis and program analysis";
    m.attr("__version__") = report::kToolVersion;

    m.attr("DEFAULT_THRESHOLD") = kDefaultThreshold;
    m.attr("DEFAULT_BUDGET") = kDefaultComplementBudget;

    py::register_exception<RegexError>(m, "RegexError", PyExc_ValueError);
    py::register_exception<SizeExceeded>(m, "SizeExceeded", PyExc_ValueError);

    m.def(
        "classify",
        [](const std::string& regex, std::size_t budget) {
            AnalysisOptions o;
            o.complement_budget = budget;
            return verdict_name(classify(compile_regex(regex), o).verdict);
        },
        py::arg("regex"), py::arg("budget") = kDefaultComplementBudget);

    m.def(
        "analyze_regex_json",
        [](const std::string& regex, bool dynamic, std::uint64_t threshold, std::size_t budget) {
            auto r = report::analyze_regex(regex, options(dynamic, threshold, budget));
            return py::make_tuple(r.json.dump(), r.exit_code);
        },
        py::arg("regex"), py::arg("dynamic") = true, py::arg("threshold") = kDefaultThreshold,
        py::arg("budget") = kDefaultComplementBudget);

    m.def(
        "analyze_program_json",
        [](const std::string& source, const std::string& subject, bool dynamic, std::uint64_t threshold,
           std::size_t budget) {
            auto r = report::analyze_program(source, subject, options(dynamic, threshold, budget));
            return py::make_tuple(r.json.dump(), r.exit_code);
        },
        py::arg("source"), py::arg("subject") = "<string>", py::arg("dynamic") = true,
        py::arg("threshold") = kDefaultThreshold, py::arg("budget") = kDefaultComplementBudget);

    m.def(
        "gen_attack",
        [](const std::string& regex, std::size_t k) -> std::optional<std::string> {
            auto a = report::gen_attack(regex, k);
            if (!a.value) return std::nullopt;
            return utf8::encode(*a.value);
        },
        py::arg("regex"), py::arg("pumps") = 1);

    m.def(
        "match",
        [](const std::string& regex, const std::string& text, std::uint64_t budget) {
            MatchResult r = backtrack_match(compile_regex(regex), utf8::decode(text), budget);
            return py::make_tuple(r.accepted, r.steps, r.exhausted);
        },
        py::arg("regex"), py::arg("text"), py::arg("budget") = kDefaultThreshold,
        "Backtracking match; returns (accepted, steps, exhausted).");

    m.def(
        "count_rejecting_paths",
        [](const std::string& regex, const std::string& text) {
            BigCount n = count_rejecting_paths(compile_regex(regex), utf8::decode(text));
            return py::int_(py::str(n.str()));
        },
        py::arg("regex"), py::arg("text"));
}
