#include "redos/dynamic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace redos {

std::u32string AttackParts::assemble(std::size_t k) const {
    std::u32string out;
    out.reserve(prefix.size() + k * core.size() + suffix.size());
    out += prefix;
    for (std::size_t i = 0; i < k; ++i) out += core;
    out += suffix;
    return out;
}

namespace {

std::u32string member_or_throw(const Nfa& a, const char* what) {
    auto m = shortest_member(a);
    if (!m) throw EmptyComponent(std::string("attack pattern has an empty ") + what);
    return *m;
}

// States the subject can occupy after prefix · core^j for some j >= 1.
std::vector<StateId> pumped_states(const Nfa& subject, const std::u32string& prefix, const std::u32string& core) {
    std::set<std::vector<StateId>> seen;
    std::vector<StateId> current = step_set(subject, {subject.initial()}, prefix);
    std::vector<char> in_union(subject.num_states(), 0);
    while (true) {
        current = step_set(subject, current, core);
        if (!seen.insert(current).second) break;
        for (StateId q : current) in_union[q] = 1;
    }
    std::vector<StateId> out;
    for (StateId q = 0; q < subject.num_states(); ++q) {
        if (in_union[q]) out.push_back(q);
    }
    return out;
}

}  // namespace

AttackParts attack_parts(const AttackPattern& p) {
    AttackParts parts;
    parts.prefix = member_or_throw(p.prefix, "prefix");
    parts.core = member_or_throw(p.core, "core");
    parts.suffix = member_or_throw(p.suffix_acceptor, "suffix");
    if (p.subject) {
        auto states = pumped_states(*p.subject, parts.prefix, parts.core);
        try {
            Nfa rejected_everywhere = intersect(p.suffix_acceptor, complement(from_state_set(*p.subject, states)));
            if (auto m = shortest_member(rejected_everywhere)) parts.suffix = *m;
        } catch (const BudgetExceeded&) {
        }
    }
    return parts;
}

std::u32string synth_attack(const AttackPattern& p, std::size_t k) { return attack_parts(p).assemble(k); }

Nfa refine(const AttackPattern& p, std::size_t k) {
    return concat(concat(concat(p.prefix, power(p.core, k)), star(p.core)), p.suffix_acceptor);
}

std::vector<std::pair<std::size_t, std::uint64_t>> step_curve(const Nfa& nfa, const AttackPattern& p,
                                                              const std::vector<std::size_t>& pumps,
                                                              std::uint64_t budget) {
    AttackParts parts = attack_parts(p);
    std::vector<std::pair<std::size_t, std::uint64_t>> out;
    for (std::size_t k : pumps) out.emplace_back(k, backtrack_match(nfa, parts.assemble(k), budget).steps);
    return out;
}

DynamicVerdict infer_min_pumps(const Nfa& nfa, const AttackPattern& p, std::uint64_t threshold,
                               const DynamicOptions& opts) {
    if (threshold == 0) threshold = 1;
    AttackParts parts = attack_parts(p);
    std::map<std::size_t, std::uint64_t> cache;
    auto cost = [&](std::size_t k) {
        auto it = cache.find(k);
        if (it != cache.end()) return it->second;
        std::uint64_t steps = backtrack_match(nfa, parts.assemble(k), threshold).steps;
        cache.emplace(k, steps);
        return steps;
    };
    auto crosses = [&](std::size_t k) { return cost(k) >= threshold; };

    DynamicVerdict v;
    v.pattern = p;
    std::size_t lo = 0, hi = 0;  // crosses(lo) is false (lo = 0 means no probe yet), crosses(hi) true
    for (std::size_t k = 1;; k *= 2) {
        std::size_t probe = std::min(k, opts.probe_cap);
        if (crosses(probe)) {
            hi = probe;
            break;
        }
        lo = probe;
        if (probe == opts.probe_cap) break;
    }

    if (hi == 0) {
        v.min_pumps = opts.probe_cap;
        v.witness = parts.assemble(v.min_pumps);
        v.min_length = v.witness.size();
        v.steps = cost(v.min_pumps);
        v.refined = Nfa::empty_language();
        v.confirmed = false;
        return v;
    }

    // Model-guided probe inside (lo, hi), then gallop outwards from it so a
    // good guess costs only a few matcher runs.
    if (lo >= 1 && hi - lo > 2) {
        // Fit steps ~ c*r^k (exponential) or c*k^e (super-linear) through the
        // last two probes below the threshold.
        double c_lo = static_cast<double>(std::max<std::uint64_t>(cost(lo), 1));
        double t = static_cast<double>(threshold);
        double guess;
        std::size_t prev = lo / 2;
        double c_prev = prev >= 1 ? static_cast<double>(std::max<std::uint64_t>(cost(prev), 1)) : 0.0;
        if (p.kind == PatternKind::Exponential) {
            double rate = prev >= 1 && c_lo > c_prev ? std::pow(c_lo / c_prev, 1.0 / static_cast<double>(lo - prev)) : 2.0;
            guess = static_cast<double>(lo) + std::log(t / c_lo) / std::log(rate);
        } else {
            double e = prev >= 1 && c_lo > c_prev ? std::log2(c_lo / c_prev) : 2.0;
            guess = static_cast<double>(lo) * std::pow(t / c_lo, 1.0 / std::max(e, 0.5));
        }
        auto g = std::clamp<std::size_t>(static_cast<std::size_t>(std::ceil(guess)), lo + 1, hi - 1);
        if (crosses(g)) {
            hi = g;
            for (std::size_t d = 1; hi - lo > 1; d *= 2) {
                std::size_t probe = hi - std::min(d, hi - lo - 1);
                if (!crosses(probe)) {
                    lo = probe;
                    break;
                }
                hi = probe;
            }
        } else {
            lo = g;
            for (std::size_t d = 1; hi - lo > 1; d *= 2) {
                std::size_t probe = lo + std::min(d, hi - lo - 1);
                if (crosses(probe)) {
                    hi = probe;
                    break;
                }
                lo = probe;
            }
        }
    }
    while (hi - lo > 1) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (crosses(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    v.min_pumps = hi;
    v.witness = parts.assemble(hi);
    v.min_length = v.witness.size();
    v.steps = cost(hi);
    v.refined = refine(p, hi);
    v.confirmed = true;
    return v;
}

}  // namespace redos
