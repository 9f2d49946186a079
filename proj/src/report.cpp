#include "redos/report.hpp"

#include <cstdio>
#include <sstream>

#include "redos/regex.hpp"
#include "redos/utf8.hpp"

namespace redos::report {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Json header(const char* kind, const std::string& subject, const Options& opts) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["tool"] = {{"name", "redos"}, {"version", kToolVersion}};
    j["kind"] = kind;
    j["subject"] = subject;
    j["settings"] = {{"dynamic", opts.dynamic},
                     {"threshold", opts.threshold},
                     {"budget", opts.budget},
                     {"deadline_seconds", opts.deadline_seconds}};
    return j;
}

Json error_json(const std::exception& e) {
    Json j;
    if (const auto* r = dynamic_cast<const UnsupportedFeature*>(&e)) {
        j["type"] = "unsupported-feature";
        j["position"] = r->position;
    } else if (const auto* s = dynamic_cast<const SyntaxError*>(&e)) {
        j["type"] = "syntax";
        j["position"] = s->position;
    } else if (dynamic_cast<const SizeExceeded*>(&e)) {
        j["type"] = "size-exceeded";
    } else if (const auto* p = dynamic_cast<const strimp::ProgramSyntaxError*>(&e)) {
        j["type"] = "syntax";
        j["line"] = p->loc.line;
        j["column"] = p->loc.column;
    } else if (dynamic_cast<const utf8::DecodeError*>(&e)) {
        j["type"] = "encoding";
    } else {
        j["type"] = "error";
    }
    j["message"] = e.what();
    return j;
}

std::string u8(const std::u32string& s) { return utf8::encode(s); }

Json pattern_json(std::size_t index, const AttackPattern& p, const AttackParts& parts) {
    Json j;
    j["index"] = index;
    j["kind"] = to_string(p.kind);
    j["pivot"] = p.pivot;
    j["partner"] = p.partner ? Json(*p.partner) : Json(nullptr);
    j["label"] = p.label.to_string();
    j["prefix"] = u8(parts.prefix);
    j["core"] = u8(parts.core);
    j["suffix"] = u8(parts.suffix);
    j["example"] = u8(parts.assemble(1));
    return j;
}

Json dynamic_json(const DynamicVerdict& v) {
    return {{"confirmed", v.confirmed},
            {"k", v.min_pumps},
            {"b", v.min_length},
            {"steps", v.steps},
            {"witness", u8(v.witness)}};
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Linear: return kExitLinear;
        case Verdict::SuperLinear: return kExitSuperLinear;
        case Verdict::Exponential: return kExitExponential;
        case Verdict::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

struct Site {
    std::string site, variable, regex;
};

void collect_sites(const strimp::Stmt& s, std::vector<Site>& out) {
    using K = strimp::Stmt::Kind;
    if (s.kind == K::Match) out.push_back({s.site, s.var, s.regex});
    for (const auto& c : s.body) collect_sites(*c, out);
    for (const auto& c : s.otherwise) collect_sites(*c, out);
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string display_utf8(const std::string& s, std::size_t max_chars = 80) {
    try {
        return display_string(utf8::decode(s), max_chars);
    } catch (const utf8::DecodeError&) {
        return s;
    }
}

}  // namespace

std::string describe_error(const Json& e) {
    std::string out = "error (" + e.value("type", std::string("error"));
    if (e.contains("position")) out += " at offset " + std::to_string(e["position"].get<std::size_t>());
    return out + "): " + e.value("message", std::string());
}

AnalysisOptions analysis_options(const Options& opts) {
    AnalysisOptions a;
    a.complement_budget = opts.budget;
    a.deadline = std::chrono::milliseconds(static_cast<std::int64_t>(opts.deadline_seconds * 1000.0));
    return a;
}

RegexReport analyze_regex(const std::string& regex, const Options& opts) {
    RegexReport r;
    Json& j = r.json;
    j = header("regex", regex, opts);
    auto t0 = Clock::now();
    Json timings;

    Nfa nfa;
    try {
        nfa = compile_regex(regex);
    } catch (const std::exception& e) {
        j["verdict"] = nullptr;
        j["error"] = error_json(e);
        r.exit_code = kExitError;
        return r;
    }
    timings["compile"] = seconds_since(t0);
    j["automaton"] = {{"states", nfa.num_states()}, {"transitions", nfa.num_transitions()}};

    auto t1 = Clock::now();
    ComplexityClass c = classify(nfa, analysis_options(opts));
    timings["static"] = seconds_since(t1);
    j["verdict"] = to_string(c.verdict);
    if (c.verdict == Verdict::Unknown) j["reason"] = c.reason;

    auto t2 = Clock::now();
    Json patterns = Json::array();
    for (std::size_t i = 0; i < c.patterns.size(); ++i) {
        const auto& p = c.patterns[i];
        Json pj = pattern_json(i, p, attack_parts(p));
        if (opts.dynamic) pj["dynamic"] = dynamic_json(infer_min_pumps(nfa, p, opts.threshold));
        patterns.push_back(std::move(pj));
    }
    if (opts.dynamic) timings["dynamic"] = seconds_since(t2);
    j["patterns"] = std::move(patterns);
    if (opts.timings) j["timings"] = std::move(timings);
    r.exit_code = exit_for(c.verdict);
    return r;
}

ProgramReport analyze_program(const std::string& source, const std::string& subject, const Options& opts) {
    ProgramReport r;
    Json& j = r.json;
    j = header("program", subject, opts);
    auto t0 = Clock::now();
    Json timings;
    try {
        auto prog = strimp::parse_program(source);
        std::vector<Site> sites;
        collect_sites(*prog, sites);

        strimp::PipelineOptions po;
        po.dynamic = opts.dynamic;
        po.threshold = opts.threshold;
        po.analysis = analysis_options(opts);
        std::vector<strimp::RegexSummary> summaries;
        auto env = strimp::build_attack_env(*prog, po, &summaries);
        timings["regexes"] = seconds_since(t0);

        Json regexes = Json::array();
        for (const auto& s : summaries) {
            Json rj;
            rj["regex"] = s.regex;
            rj["verdict"] = to_string(s.verdict);
            if (!s.error.empty()) rj["error"] = s.error;
            rj["min_bound"] = s.info.min_bound ? Json(*s.info.min_bound) : Json(nullptr);
            std::size_t confirmed = 0;
            for (const auto& d : s.dynamic) confirmed += d.confirmed ? 1 : 0;
            rj["patterns"] = s.dynamic.size();
            rj["confirmed"] = confirmed;
            regexes.push_back(std::move(rj));
        }
        j["regexes"] = std::move(regexes);

        auto t1 = Clock::now();
        strimp::AnalyzeOptions ao;
        ao.complement_budget = opts.budget;
        auto result = strimp::analyze(*prog, env, ao);
        timings["analysis"] = seconds_since(t1);

        Json sj = Json::array();
        for (const auto& s : sites) {
            bool warned = false;
            for (const auto& w : result.warnings) warned = warned || w.site == s.site;
            sj.push_back({{"site", s.site}, {"variable", s.variable}, {"regex", s.regex}, {"warning", warned}});
        }
        j["sites"] = std::move(sj);

        Json wj = Json::array();
        for (const auto& w : result.warnings) {
            Json x;
            x["site"] = w.site;
            x["variable"] = w.variable;
            x["regex"] = w.regex;
            x["reasons"] = w.reasons;
            x["example"] = w.example ? Json(u8(*w.example)) : Json(nullptr);
            wj.push_back(std::move(x));
        }
        j["warnings"] = std::move(wj);
        j["loop_passes"] = result.max_loop_passes;
        r.exit_code = result.warnings.empty() ? kExitLinear : kExitWarnings;
    } catch (const std::exception& e) {
        j["error"] = error_json(e);
        r.exit_code = kExitError;
        return r;
    }
    if (opts.timings) j["timings"] = std::move(timings);
    return r;
}

std::vector<CurvePoint> attack_curve(const std::string& regex, std::size_t max_pumps, std::uint64_t budget,
                                     const Options& opts) {
    Nfa nfa = compile_regex(regex);
    ComplexityClass c = classify(nfa, analysis_options(opts));
    std::vector<CurvePoint> out;
    for (std::size_t i = 0; i < c.patterns.size(); ++i) {
        AttackParts parts = attack_parts(c.patterns[i]);
        for (std::size_t k = 1; k <= max_pumps; ++k) {
            std::u32string s = parts.assemble(k);
            MatchResult m = backtrack_match(nfa, s, budget);
            out.push_back({i, k, s.size(), m.steps, m.exhausted});
        }
    }
    return out;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
    std::ostringstream os;
    os << "pattern,k,length,steps,exhausted\n";
    for (const auto& p : points)
        os << p.pattern << ',' << p.pumps << ',' << p.length << ',' << p.steps << ',' << (p.exhausted ? 1 : 0) << '\n';
    return os.str();
}

AttackString gen_attack(const std::string& regex, std::size_t k, const Options& opts) {
    Nfa nfa = compile_regex(regex);
    ComplexityClass c = classify(nfa, analysis_options(opts));
    AttackString out;
    out.verdict = c.verdict;
    if (!c.patterns.empty()) out.value = synth_attack(c.patterns.front(), k);
    return out;
}

std::string display_string(const std::u32string& s, std::size_t max_chars) {
    auto piece = [](std::u32string_view v) {
        std::string o;
        for (char32_t c : v) {
            switch (c) {
                case '\n': o += "\\n"; break;
                case '\r': o += "\\r"; break;
                case '\t': o += "\\t"; break;
                case '\\': o += "\\\\"; break;
                case '"': o += "\\\""; break;
                default:
                    if (c < 0x20 || c == 0x7F) {
                        char buf[8];
                        std::snprintf(buf, sizeof buf, "\\x%02X", static_cast<unsigned>(c));
                        o += buf;
                    } else {
                        o += utf8::encode(std::u32string(1, c));
                    }
            }
        }
        return o;
    };
    std::u32string_view v(s);
    if (v.size() <= max_chars) return "\"" + piece(v) + "\"";
    std::size_t head = max_chars * 3 / 4, tail = max_chars - head;
    return "\"" + piece(v.substr(0, head)) + "\"...\"" + piece(v.substr(v.size() - tail)) + "\" (" +
           std::to_string(v.size()) + " chars)";
}

std::string render_text(const Json& j) {
    std::ostringstream os;
    const std::string kind = j.value("kind", "");
    if (kind == "regex") {
        os << "regex: " << j["subject"].get<std::string>() << "\n";
        if (j.contains("error")) {
            os << describe_error(j["error"]) << "\n";
            return os.str();
        }
        os << "verdict: " << j["verdict"].get<std::string>() << "\n";
        if (j.contains("reason")) os << "reason: " << j["reason"].get<std::string>() << "\n";
        for (const auto& p : j["patterns"]) {
            os << "pattern " << p["index"].get<std::size_t>() << " (" << p["kind"].get<std::string>() << ", pivot "
               << p["pivot"].get<std::size_t>();
            if (!p["partner"].is_null()) os << ", partner " << p["partner"].get<std::size_t>();
            os << ", label " << p["label"].get<std::string>() << ")\n";
            os << "  prefix " << display_utf8(p["prefix"].get<std::string>()) << "  core "
               << display_utf8(p["core"].get<std::string>()) << "  suffix "
               << display_utf8(p["suffix"].get<std::string>()) << "\n";
            if (p.contains("dynamic")) {
                const auto& d = p["dynamic"];
                os << "  " << (d["confirmed"].get<bool>() ? "confirmed" : "not confirmed") << ": k = "
                   << d["k"].get<std::size_t>() << ", b = " << d["b"].get<std::size_t>() << ", steps = "
                   << d["steps"].get<std::uint64_t>() << "\n";
                os << "  witness " << display_utf8(d["witness"].get<std::string>()) << "\n";
            }
        }
    } else if (kind == "program") {
        os << "program: " << j["subject"].get<std::string>() << "\n";
        if (j.contains("error")) {
            os << describe_error(j["error"]) << "\n";
            return os.str();
        }
        for (const auto& r : j["regexes"]) {
            os << "regex " << quote(r["regex"].get<std::string>()) << ": " << r["verdict"].get<std::string>();
            if (!r["min_bound"].is_null()) os << ", b = " << r["min_bound"].get<std::uint64_t>();
            if (r.contains("error")) os << " (" << r["error"].get<std::string>() << ")";
            os << "\n";
        }
        for (const auto& w : j["warnings"]) {
            os << "warning: site " << w["site"].get<std::string>() << ", variable " << w["variable"].get<std::string>()
               << ", regex " << quote(w["regex"].get<std::string>()) << "\n";
            for (const auto& reason : w["reasons"]) os << "  " << reason.get<std::string>() << "\n";
            if (!w["example"].is_null()) os << "  example " << display_utf8(w["example"].get<std::string>()) << "\n";
        }
        std::size_t n = j["warnings"].size();
        os << n << (n == 1 ? " warning" : " warnings") << "\n";
    }
    if (j.contains("timings")) {
        os << "timings:";
        for (const auto& [k, v] : j["timings"].items()) os << " " << k << " " << v.get<double>() << "s";
        os << "\n";
    }
    return os.str();
}

}  // namespace redos::report
