#pragma once

// Random STRIMP programs in concrete syntax, plus concrete-execution sampling
// for checking the abstract interpreter against real runs.

#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "redos/automata.hpp"
#include "redos/strimp.hpp"

namespace gen {

inline const std::vector<std::string>& match_pool() {
    static const std::vector<std::string> pool{"(a+)+", "(a|b)*(a|c)*", "a*b", "[abc]*", "(ab|a)*c"};
    return pool;
}

struct Names {
    std::array<std::string, 6> vars{"v0", "v1", "v2", "v3", "v4", "v5"};
    std::string site_prefix = "s";
};

/// Emits a program whose shape depends only on `seed`; `names` only changes
/// identifiers, so two calls with the same seed are alpha-equivalent.
class ProgramGenerator {
public:
    ProgramGenerator(unsigned seed, Names names, int max_depth = 4) : rng_(seed), names_(std::move(names)), depth_(max_depth) {}

    std::string program() {
        std::string out;
        for (const auto& v : names_.vars) out += coin(0.6) ? "getInput(" + v + ");\n" : v + " := ?;\n";
        out += block(depth_, 2, 5);
        return out;
    }

private:
    std::mt19937 rng_;
    Names names_;
    int depth_;
    int site_ = 0;

    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
    int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    const std::string& var() { return names_.vars[static_cast<std::size_t>(pick(0, 5))]; }

    std::string block(int depth, int lo, int hi) {
        std::string out;
        int n = pick(lo, hi);
        for (int i = 0; i < n; ++i) out += stmt(depth);
        return out;
    }

    std::string pure() {
        static const char* const pieces[] = {"a", "b", "ab", "[ab]*", "a*b", "(a+)+", "[abc]*", "c?"};
        return std::string("\"") + pieces[pick(0, 7)] + "\"";
    }

    std::string impure(int depth) {
        int k = depth <= 0 ? pick(0, 1) : pick(0, 4);
        switch (k) {
            case 0: return pure();
            case 1: return var();
            case 2: return "(" + impure(depth - 1) + ")*";
            case 3: return "(" + impure(depth - 1) + (coin(0.5) ? " | " : " + ") + impure(depth - 1) + ")";
            default: return "(" + impure(depth - 1) + " . " + impure(depth - 1) + ")";
        }
    }

    std::string int_expr() {
        switch (pick(0, 3)) {
            case 0: return std::to_string(pick(0, 8));
            case 1: return "len(" + var() + ")";
            case 2: return "len(" + var() + ") + " + std::to_string(pick(0, 3));
            default: return "len(" + var() + ") - len(" + var() + ")";
        }
    }

    std::string stmt(int depth) {
        int k = depth <= 0 ? pick(0, 7) : pick(0, 9);
        switch (k) {
            case 0: return "getInput(" + var() + ");\n";
            case 1: return var() + " := " + var() + ";\n";
            case 2: return var() + " := ?;\n";
            case 3: return "assume " + var() + " in " + impure(2) + ";\n";
            case 4: return "assume len(" + var() + ") <= " + int_expr() + ";\n";
            case 5:
            case 6: {
                const auto& pool = match_pool();
                const auto& re = pool[static_cast<std::size_t>(pick(0, static_cast<int>(pool.size()) - 1))];
                return "match(" + var() + ", \"" + re + "\", \"" + names_.site_prefix + std::to_string(site_++) + "\");\n";
            }
            case 7:
                switch (pick(0, 2)) {
                    case 0: return "builtin contains(" + var() + ", \"ab\");\n";
                    case 1: return "builtin length_le(" + var() + ", " + std::to_string(pick(0, 6)) + ");\n";
                    default: return "builtin matches(" + var() + ", \"[ab]*\");\n";
                }
            case 8: return "if * {\n" + block(depth - 1, 1, 3) + "} else {\n" + block(depth - 1, 0, 2) + "}\n";
            default: return "while * {\n" + block(depth - 1, 1, 3) + "}\n";
        }
    }
};

inline std::u32string random_string(std::mt19937& rng, const std::u32string& alphabet, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<std::size_t> ch(0, alphabet.size() - 1);
    std::u32string s;
    for (int i = len(rng); i > 0; --i) s += alphabet[ch(rng)];
    return s;
}

struct Streams {
    std::vector<std::u32string> inputs;
    std::vector<bool> choices;
    std::vector<std::u32string> consts;
};

/// Inputs mix short random strings with the supplied attack strings.
inline Streams random_streams(std::mt19937& rng, const std::vector<std::u32string>& attacks) {
    Streams s;
    std::bernoulli_distribution use_attack(0.4), branch(0.5);
    std::uniform_int_distribution<std::size_t> which(0, attacks.empty() ? 0 : attacks.size() - 1);
    for (int i = 0; i < 16; ++i)
        s.inputs.push_back(!attacks.empty() && use_attack(rng) ? attacks[which(rng)] : random_string(rng, U"abc", 6));
    for (int i = 0; i < 24; ++i) s.choices.push_back(branch(rng));
    std::bernoulli_distribution literal(0.3);
    for (int i = 0; i < 16; ++i) s.consts.push_back(literal(rng) ? U"ab" : random_string(rng, U"ab", 3));
    return s;
}

/// Attack summaries for every regex in match_pool(), computed once.
struct Pool {
    redos::strimp::AttackEnv psi;
    std::vector<std::u32string> attacks;
};

inline const Pool& pool() {
    static const Pool p = [] {
        Pool out;
        redos::strimp::PipelineOptions opts;
        opts.threshold = 10'000;
        for (const auto& re : match_pool()) {
            auto s = redos::strimp::summarize_regex(re, opts);
            out.psi[re] = s.info;
            for (const auto& d : s.dynamic) {
                if (!d.confirmed) continue;
                out.attacks.push_back(d.witness);
                out.attacks.push_back(d.witness.substr(0, d.witness.size() / 2));
            }
        }
        return out;
    }();
    return p;
}

struct SoundnessStats {
    std::size_t vulnerable_events = 0;
};

/// Checks one concrete run against the abstract result; returns a
/// description of the first violation found.
inline std::optional<std::string> soundness_violation(const redos::strimp::AnalysisResult& abs,
                                                      const redos::strimp::ConcreteResult& run,
                                                      const redos::strimp::AttackEnv& psi, SoundnessStats* stats = nullptr) {
    for (const auto& [var, value] : run.env) {
        auto it = abs.final.strings.find(var);
        if (it == abs.final.strings.end()) return "variable " + var + " missing from the abstract state";
        if (!it->second.length.contains(static_cast<std::int64_t>(value.size())))
            return "length of " + var + " outside " + it->second.length.to_string();
        if (!redos::accepts(it->second.content, value)) return "content of " + var + " not covered";
    }
    for (const auto& v : run.taint)
        if (!abs.final.taint.count(v)) return "taint of " + v + " not covered";
    std::set<std::string> warned;
    for (const auto& w : abs.warnings) warned.insert(w.site);
    for (const auto& ev : run.matches) {
        const auto& info = psi.at(ev.regex);
        if (!ev.tainted || !info.min_bound || ev.value.size() < *info.min_bound || !redos::accepts(info.attack, ev.value))
            continue;
        if (stats) ++stats->vulnerable_events;
        if (!warned.count(ev.site)) return "missed warning at site " + ev.site;
    }
    return std::nullopt;
}

}  // namespace gen
