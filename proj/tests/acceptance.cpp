// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "redos/automata.hpp"
#include "redos/dynamic.hpp"
#include "redos/matcher.hpp"
#include "redos/regex.hpp"
#include "redos/strimp.hpp"
#include "redos/utf8.hpp"
#include "redos/vulnerability.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/strimp_gen.hpp"

using namespace redos;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail.clear();
        if (!detail.empty()) detail += "; ";
        detail += why;
        pass = false;
    }
    void note(const std::string& what) {
        if (!pass) return;
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

std::string fmt(double v, int prec = 3) {
    std::ostringstream os;
    os.precision(prec);
    os << std::fixed << v;
    return os.str();
}

double slope(const std::vector<double>& x, const std::vector<double>& y) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= double(x.size());
    my /= double(y.size());
    double num = 0, den = 0;
    for (std::size_t i = 0; i < x.size(); ++i) num += (x[i] - mx) * (y[i] - my), den += (x[i] - mx) * (x[i] - mx);
    return num / den;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Linear: return "linear";
        case Verdict::SuperLinear: return "super-linear";
        case Verdict::Exponential: return "exponential";
        case Verdict::Unknown: return "unknown";
    }
    return "?";
}

std::string read_sample(const std::string& name) {
    std::ifstream in(std::string(REDOS_SOURCE_DIR) + "/samples/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome golden_classifications() {
    Outcome o;
    const std::pair<const char*, Verdict> rows[] = {
        {"(a+)+", Verdict::Exponential},
        {"(a|b)*(a|c)*", Verdict::SuperLinear},
        {".+@.+\\.[a-z]+", Verdict::SuperLinear},
        {"www\\.shoppers\\.com/.+/.+/.+/.+/", Verdict::SuperLinear},
        {"([^\\/<>])+", Verdict::Linear},
        {"(( |\\t)*(\\r?\\n)( |\\t)*)+", Verdict::Exponential},
        {"(\\p{Blank}*(\\r?\\n)\\p{Blank}*)+", Verdict::Exponential},
    };
    double worst = 0;
    for (const auto& [re, want] : rows) {
        auto t0 = Clock::now();
        Verdict got = classify(compile_regex(re)).verdict;
        double dt = seconds_since(t0);
        worst = std::max(worst, dt);
        if (got != want) o.fail(std::string(re) + " -> " + verdict_name(got) + ", expected " + verdict_name(want));
        if (dt >= 5) o.fail(std::string(re) + " took " + fmt(dt) + " s");
    }
    o.note("7 regexes, slowest " + fmt(worst) + " s");
    return o;
}

Outcome attack_membership() {
    Outcome o;
    Nfa f4 = attack_automaton_exp(fixture::hyper_vulnerable()).first;
    for (std::size_t k = 1; k <= 5; ++k)
        if (!accepts(f4, fixture::hyper_attack(k))) o.fail("hyper-vulnerable attack rejects k=" + std::to_string(k));
    for (const auto* s : {U"ab", U"b", U"aab"})
        if (accepts(f4, s)) o.fail("hyper-vulnerable attack accepts " + utf8::encode(s));
    Nfa f7 = attack_automaton_superlinear(fixture::vulnerable()).first;
    for (std::size_t k = 1; k <= 5; ++k)
        if (!accepts(f7, fixture::vulnerable_attack(k))) o.fail("vulnerable attack rejects k=" + std::to_string(k));
    for (const auto* s : {U"c", U"ab"})
        if (accepts(f7, s)) o.fail("vulnerable attack accepts " + utf8::encode(s));
    o.note("10 members accepted, 5 non-members rejected");
    return o;
}

Outcome exponential_growth() {
    Outcome o;
    auto t0 = Clock::now();
    Nfa f4 = fixture::hyper_vulnerable();
    std::vector<std::size_t> off;
    std::string last;
    for (std::size_t k = 0; k <= 10; ++k) {
        BigCount n = count_rejecting_paths(f4, fixture::hyper_attack(k));
        if (n != BigCount(1) << k) {
            off.push_back(k);
            last = "k=" + std::to_string(k) + " has " + n.str() + " vs 2^k=" + (BigCount(1) << k).str();
        }
    }
    if (!off.empty()) o.fail("path count differs from 2^k at " + std::to_string(off.size()) + " of 11 k values, " + last);
    std::string ratios;
    bool ratios_ok = true;
    for (std::size_t k = 4; k <= 10; ++k) {
        double a = double(backtrack_match(f4, fixture::hyper_attack(k)).steps);
        double b = double(backtrack_match(f4, fixture::hyper_attack(k + 1)).steps);
        double r = b / a;
        ratios += (ratios.empty() ? "" : ",") + fmt(r);
        ratios_ok = ratios_ok && r >= 1.8 && r <= 2.2;
    }
    if (!ratios_ok) o.fail("step ratios " + ratios + " outside [1.8, 2.2]");
    double dt = seconds_since(t0);
    if (dt >= 10) o.fail("took " + fmt(dt) + " s");
    o.note("ratios " + ratios + ", " + fmt(dt) + " s");
    return o;
}

Outcome superlinear_growth() {
    Outcome o;
    std::vector<double> xs, ys;
    Nfa f7 = fixture::vulnerable();
    for (std::size_t k = 8; k <= 20; ++k) {
        auto w = fixture::vulnerable_attack(k);
        xs.push_back(std::log(double(w.size())));
        ys.push_back(std::log(double(backtrack_match(f7, w).steps)));
    }
    double s7 = slope(xs, ys);
    if (s7 < 1.8) o.fail("vulnerable NFA slope " + fmt(s7));

    Nfa ab = compile_regex("(a|b)*(a|c)*");
    ComplexityClass c = classify(ab);
    if (c.patterns.empty()) {
        o.fail("no pattern for (a|b)*(a|c)*");
        return o;
    }
    xs.clear();
    ys.clear();
    for (std::size_t k = 8; k <= 20; ++k) {
        auto w = synth_attack(c.patterns.front(), k);
        xs.push_back(std::log(double(w.size())));
        ys.push_back(std::log(double(backtrack_match(ab, w).steps)));
    }
    double sab = slope(xs, ys);
    if (sab < 1.8) o.fail("(a|b)*(a|c)* slope " + fmt(sab));
    o.note("slopes " + fmt(s7) + " and " + fmt(sab));
    return o;
}

Outcome dynamic_analysis() {
    Outcome o;
    auto t0 = Clock::now();
    Nfa nfa = compile_regex("(a+)+");
    ComplexityClass c = classify(nfa);
    if (c.patterns.empty()) {
        o.fail("no pattern");
        return o;
    }
    const AttackPattern& p = c.patterns.front();
    DynamicVerdict v = infer_min_pumps(nfa, p, 1'000'000);
    if (!v.confirmed) o.fail("not confirmed");
    if (v.min_pumps > 30) o.fail("k=" + std::to_string(v.min_pumps));
    if (accepts(nfa, v.witness)) o.fail("witness accepted by the regex");
    for (std::size_t j = 1; j < v.min_pumps; ++j)
        if (accepts(v.refined, synth_attack(p, j))) o.fail("refined accepts j=" + std::to_string(j));
    if (!accepts(v.refined, v.witness)) o.fail("refined rejects the witness");
    double dt = seconds_since(t0);
    if (dt >= 10) o.fail("took " + fmt(dt) + " s");
    o.note("k=" + std::to_string(v.min_pumps) + ", b=" + std::to_string(v.min_length) + ", " + fmt(dt) + " s");
    return o;
}

std::set<std::string> warned(const std::string& source) {
    auto prog = strimp::parse_program(source);
    auto r = strimp::analyze(*prog, strimp::build_attack_env(*prog));
    std::set<std::string> out;
    for (const auto& w : r.warnings) out.insert(w.site);
    return out;
}

Outcome program_analysis() {
    Outcome o;
    auto t0 = Clock::now();
    auto guarded = warned(read_sample("shop_form.strimp"));
    if (guarded != std::set<std::string>{"valid-comment"}) {
        std::string all;
        for (const auto& s : guarded) all += " " + s;
        o.fail("guarded warnings:" + all);
    }
    auto open = warned(read_sample("shop_form_no_length_guard.strimp"));
    if (open != std::set<std::string>{"sender-email", "valid-comment"}) {
        std::string all;
        for (const auto& s : open) all += " " + s;
        o.fail("unguarded warnings:" + all);
    }
    o.note("1 warning with the guard, 2 without, " + fmt(seconds_since(t0)) + " s");
    return o;
}

Outcome algebra_oracle() {
    Outcome o;
    auto t0 = Clock::now();
    const std::vector<Label> atoms{Label::single('a'), Label::single('b'), Label::single('c')};
    std::mt19937 rng(500);
    auto strings = oracle::all_strings(U"abcd", 4);
    std::size_t checks = 0;
    for (int i = 0; i < 500 && o.pass; ++i) {
        Nfa x = oracle::random_nfa(rng, 4, atoms);
        Nfa y = oracle::random_nfa(rng, 4, atoms);
        Nfa inter = intersect(x, y), uni = unite(x, y), cat = concat(x, y), pl = plus(x), comp = complement(x);
        for (const auto& s : strings) {
            bool ax = oracle::accepts(x, s), ay = oracle::accepts(y, s);
            bool ok = accepts(x, s) == ax && accepts(inter, s) == (ax && ay) && accepts(uni, s) == (ax || ay) &&
                      accepts(cat, s) == oracle::concat_accepts(x, y, s) && accepts(pl, s) == oracle::plus_accepts(x, s) &&
                      accepts(comp, s) == !ax;
            checks += 6;
            if (!ok) {
                o.fail("pair " + std::to_string(i) + " disagrees on \"" + utf8::encode(s) + "\"");
                break;
            }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 30) o.fail("took " + fmt(dt) + " s");
    o.note("500 pairs, " + std::to_string(checks) + " membership checks, " + fmt(dt) + " s");
    return o;
}

Outcome soundness() {
    Outcome o;
    auto t0 = Clock::now();
    const auto& pool = gen::pool();
    std::mt19937 rng(8);
    gen::SoundnessStats stats;
    std::size_t runs = 0, warnings = 0, starved = 0;
    for (unsigned seed = 0; seed < 200 && o.pass; ++seed) {
        auto prog = strimp::parse_program(gen::ProgramGenerator(seed, {}).program());
        auto abs = strimp::analyze(*prog, pool.psi);
        warnings += abs.warnings.size();
        int feasible = 0;
        for (int attempt = 0; attempt < 2000 && feasible < 100; ++attempt) {
            auto st = gen::random_streams(rng, pool.attacks);
            strimp::ConcreteResult run;
            try {
                run = strimp::concrete_exec(*prog, st.inputs, st.choices, st.consts);
            } catch (const strimp::Infeasible&) {
                continue;
            }
            ++feasible;
            if (auto bad = gen::soundness_violation(abs, run, pool.psi, &stats)) {
                o.fail("program " + std::to_string(seed) + ": " + *bad);
                break;
            }
        }
        runs += std::size_t(feasible);
        if (feasible < 100) ++starved;
    }
    if (stats.vulnerable_events == 0) o.fail("no vulnerable trace was exercised");
    double dt = seconds_since(t0);
    if (dt >= 60) o.fail("took " + fmt(dt) + " s");
    o.note("200 programs, " + std::to_string(runs) + " feasible executions, " + std::to_string(starved) +
           " programs under 100, " + std::to_string(stats.vulnerable_events) +
           " vulnerable matches, " + std::to_string(warnings) + " warnings, " + fmt(dt) + " s");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"golden classifications", golden_classifications},
        {"attack automaton membership", attack_membership},
        {"exponential growth law", exponential_growth},
        {"super-linear growth law", superlinear_growth},
        {"dynamic analysis", dynamic_analysis},
        {"program analysis end to end", program_analysis},
        {"automata algebra against brute force", algebra_oracle},
        {"soundness on random programs", soundness},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        int id = int(i) + 1;
        if (!only.empty() && !only.count(id)) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << criteria[i].first << " (" << o.detail << ")"
                  << std::endl;
    }
    return failed == 0 ? 0 : 1;
}
