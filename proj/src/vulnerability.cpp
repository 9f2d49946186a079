#include "redos/vulnerability.hpp"

#include <algorithm>
#include <cassert>

namespace redos {

Nfa AttackPattern::flatten() const { return concat(concat(prefix, plus(core)), suffix_acceptor); }

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Linear: return "linear";
        case Verdict::SuperLinear: return "super-linear";
        case Verdict::Exponential: return "exponential";
        case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

const char* to_string(PatternKind k) { return k == PatternKind::Exponential ? "exponential" : "super-linear"; }

Nfa loop_back(const Nfa& a, StateId q, const Label& l, StateId q1) {
    Nfa out = a;
    for (StateId s = 0; s < out.num_states(); ++s) out.set_accepting(s, s == q);
    StateId star = out.add_state();
    out.add_transition(star, l, q1);
    out.set_initial(star);
    return trim(out);
}

Nfa any_loop_back(const Nfa& a, StateId q_prime) {
    Nfa out = a;
    for (StateId s = 0; s < out.num_states(); ++s) out.set_accepting(s, s == q_prime);
    StateId star = out.add_state();
    for (const auto& e : a.out(q_prime)) out.add_transition(star, e.label, e.to);
    out.set_initial(star);
    return trim(out);
}

namespace {

// Shared per-analysis state: the subject automaton, lazily built suffix
// acceptors and the deadline.
class Context {
public:
    Context(const Nfa& a, const AnalysisOptions& opts)
        : subject_(std::make_shared<const Nfa>(a)),
          opts_(opts),
          deadline_(std::chrono::steady_clock::now() + opts.deadline),
          suffix_(a.num_states()),
          prefix_(a.num_states()),
          cycles_(a.num_states()) {
        assert(!a.has_epsilon());
    }

    const Nfa& nfa() const { return *subject_; }
    const std::shared_ptr<const Nfa>& subject() const { return subject_; }

    void check_deadline() const {
        if (std::chrono::steady_clock::now() > deadline_) throw DeadlineExceeded();
    }

    const Nfa& prefix(StateId q) {
        if (!prefix_[q]) {
            StateId acc[] = {q};
            prefix_[q] = trim(with_accepting(nfa(), acc));
        }
        return *prefix_[q];
    }

    const Nfa& suffix(StateId q) {
        if (!suffix_[q]) suffix_[q] = complement(with_initial(nfa(), q), opts_.complement_budget);
        return *suffix_[q];
    }

    const Nfa& cycles(StateId q) {
        if (!cycles_[q]) cycles_[q] = any_loop_back(nfa(), q);
        return *cycles_[q];
    }

    // Same-label pairs of distinct out-edges of q, as index pairs into out(q).
    std::vector<std::pair<std::size_t, std::size_t>> same_label_pairs(StateId q, bool ordered) const {
        const auto& edges = nfa().out(q);
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = ordered ? 0 : i + 1; j < edges.size(); ++j) {
                if (i == j || edges[i].label != edges[j].label || edges[i].to == edges[j].to) continue;
                out.emplace_back(i, j);
            }
        }
        return out;
    }

private:
    std::shared_ptr<const Nfa> subject_;
    AnalysisOptions opts_;
    std::chrono::steady_clock::time_point deadline_;
    std::vector<std::optional<Nfa>> suffix_;
    std::vector<std::optional<Nfa>> prefix_;
    std::vector<std::optional<Nfa>> cycles_;
};

bool pattern_less(const AttackPattern& x, const AttackPattern& y) {
    auto key = [](const AttackPattern& p) {
        return std::make_tuple(p.pivot, p.partner.value_or(0), p.partner.has_value(), p.label, p.first, p.second);
    };
    return key(x) < key(y);
}

std::vector<AttackPattern> exp_for_pivot(Context& ctx, StateId q) {
    std::vector<AttackPattern> out;
    const auto& edges = ctx.nfa().out(q);
    for (auto [i, j] : ctx.same_label_pairs(q, false)) {
        ctx.check_deadline();
        const Label& l = edges[i].label;
        Nfa core = intersect(loop_back(ctx.nfa(), q, l, edges[i].to), loop_back(ctx.nfa(), q, l, edges[j].to));
        if (is_empty(core)) continue;
        const Nfa& prefix = ctx.prefix(q);
        if (is_empty(prefix)) continue;
        const Nfa& suffix = ctx.suffix(q);
        if (is_empty(suffix)) continue;
        assert(!accepts(core, U""));
        AttackPattern p;
        p.kind = PatternKind::Exponential;
        p.pivot = q;
        p.label = l;
        p.first = edges[i].to;
        p.second = edges[j].to;
        p.prefix = prefix;
        p.core = std::move(core);
        p.suffix_acceptor = suffix;
        p.subject = ctx.subject();
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), pattern_less);
    return out;
}

std::vector<AttackPattern> superlinear_for_pivot(Context& ctx, StateId q) {
    std::vector<AttackPattern> out;
    const Nfa& a = ctx.nfa();
    const auto& edges = a.out(q);
    auto pairs = ctx.same_label_pairs(q, true);
    if (pairs.empty()) return out;
    const Nfa& prefix = ctx.prefix(q);
    if (is_empty(prefix)) return out;
    for (auto [i, j] : pairs) {
        const Label& l = edges[i].label;
        Nfa first_loop = loop_back(a, q, l, edges[i].to);
        if (is_empty(first_loop)) continue;
        std::vector<StateId> start{edges[j].to};
        auto after_second = reachable(a, start);
        for (StateId qp : after_second) {
            ctx.check_deadline();
            const Nfa& cyc = ctx.cycles(qp);
            if (is_empty(cyc)) continue;
            Nfa to_partner = a;
            for (StateId s = 0; s < to_partner.num_states(); ++s) to_partner.set_accepting(s, s == qp);
            StateId fresh = to_partner.add_state();
            to_partner.add_transition(fresh, l, edges[j].to);
            to_partner.set_initial(fresh);
            Nfa core = intersect(intersect(first_loop, trim(to_partner)), cyc);
            if (is_empty(core)) continue;
            const Nfa& suffix = ctx.suffix(qp);
            if (is_empty(suffix)) continue;
            assert(!accepts(core, U""));
            AttackPattern p;
            p.kind = PatternKind::SuperLinear;
            p.pivot = q;
            p.partner = qp;
            p.label = l;
            p.first = edges[i].to;
            p.second = edges[j].to;
            p.prefix = prefix;
            p.core = std::move(core);
            p.suffix_acceptor = suffix;
            p.subject = ctx.subject();
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), pattern_less);
    return out;
}

Nfa union_of(const std::vector<AttackPattern>& patterns) {
    Nfa acc = Nfa::empty_language();
    for (const auto& p : patterns) acc = unite(acc, p.flatten());
    return acc;
}

template <typename PerPivot>
std::pair<Nfa, std::vector<AttackPattern>> collect(Context& ctx, PerPivot per_pivot) {
    std::vector<AttackPattern> all;
    for (StateId q = 0; q < ctx.nfa().num_states(); ++q) {
        auto ps = per_pivot(ctx, q);
        std::move(ps.begin(), ps.end(), std::back_inserter(all));
    }
    Nfa evil = union_of(all);
    return {std::move(evil), std::move(all)};
}

}  // namespace

std::vector<AttackPattern> attack_for_pivot_exp(const Nfa& a, StateId q, const AnalysisOptions& opts) {
    Context ctx(a, opts);
    return exp_for_pivot(ctx, q);
}

std::pair<Nfa, std::vector<AttackPattern>> attack_automaton_exp(const Nfa& a, const AnalysisOptions& opts) {
    Context ctx(a, opts);
    return collect(ctx, exp_for_pivot);
}

std::vector<AttackPattern> attack_for_pivot_superlinear(const Nfa& a, StateId q, const AnalysisOptions& opts) {
    Context ctx(a, opts);
    return superlinear_for_pivot(ctx, q);
}

std::pair<Nfa, std::vector<AttackPattern>> attack_automaton_superlinear(const Nfa& a, const AnalysisOptions& opts) {
    Context ctx(a, opts);
    return collect(ctx, superlinear_for_pivot);
}

ComplexityClass classify(const Nfa& a, const AnalysisOptions& opts) {
    ComplexityClass out;
    try {
        Context ctx(a, opts);
        auto [evil, patterns] = collect(ctx, exp_for_pivot);
        if (!patterns.empty()) {
            out.verdict = Verdict::Exponential;
            out.patterns = std::move(patterns);
            out.attack_automaton = std::move(evil);
            return out;
        }
        auto [evil2, patterns2] = collect(ctx, superlinear_for_pivot);
        if (!patterns2.empty()) {
            out.verdict = Verdict::SuperLinear;
            out.patterns = std::move(patterns2);
            out.attack_automaton = std::move(evil2);
            return out;
        }
        out.verdict = Verdict::Linear;
    } catch (const BudgetExceeded& e) {
        out = {};
        out.verdict = Verdict::Unknown;
        out.reason = e.what();
    } catch (const DeadlineExceeded& e) {
        out = {};
        out.verdict = Verdict::Unknown;
        out.reason = e.what();
    }
    return out;
}

}  // namespace redos
