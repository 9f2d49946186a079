#include <algorithm>

#include "redos/strimp.hpp"

namespace redos::strimp {

// ---------------------------------------------------------------- intervals

namespace {

bool infinite(std::int64_t v) { return v == kInf || v == -kInf; }

// Extended addition; `upper` selects which infinity wins on inf + -inf.
std::int64_t ext_add(std::int64_t a, std::int64_t b, bool upper) {
    if (infinite(a) || infinite(b)) {
        if (a == kInf || b == kInf) return (upper || !(a == -kInf || b == -kInf)) ? kInf : -kInf;
        return -kInf;
    }
    __int128 r = static_cast<__int128>(a) + b;
    if (r >= kInf) return kInf;
    if (r <= -kInf) return -kInf;
    return static_cast<std::int64_t>(r);
}

std::int64_t ext_neg(std::int64_t v) { return v == kInf ? -kInf : (v == -kInf ? kInf : -v); }

std::string bound_text(std::int64_t v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    return std::to_string(v);
}

}  // namespace

Interval Interval::join(const Interval& o) const {
    if (empty()) return o;
    if (o.empty()) return *this;
    return {std::min(lo, o.lo), std::max(hi, o.hi)};
}

Interval Interval::add(const Interval& o) const {
    if (empty() || o.empty()) return bottom();
    return {ext_add(lo, o.lo, false), ext_add(hi, o.hi, true)};
}

// Every difference x - y with x in this and y in o.
Interval Interval::sub(const Interval& o) const {
    if (empty() || o.empty()) return bottom();
    return {ext_add(lo, ext_neg(o.hi), false), ext_add(hi, ext_neg(o.lo), true)};
}

std::string Interval::to_string() const {
    if (empty()) return "[]";
    return "[" + bound_text(lo) + "," + bound_text(hi) + "]";
}

// ---------------------------------------------------------------- helpers

namespace {

Nfa join_content(const Nfa& a, const Nfa& b) {
    if (a == b) return a;
    if (is_empty(a)) return b;
    if (is_empty(b)) return a;
    return normalize_atoms(unite(a, b));
}

StringAbs join_abs(const StringAbs& a, const StringAbs& b) {
    return {a.length.join(b.length), join_content(a.content, b.content)};
}

const StringAbs& lookup(const std::map<std::string, StringAbs>& lam, const std::string& x) {
    auto it = lam.find(x);
    if (it == lam.end()) throw UnboundVariable(x);
    return it->second;
}

}  // namespace

std::map<std::string, StringAbs> join(const std::map<std::string, StringAbs>& a,
                                      const std::map<std::string, StringAbs>& b) {
    std::map<std::string, StringAbs> out;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        out[k] = it == b.end() ? StringAbs::top() : join_abs(v, it->second);
    }
    for (const auto& [k, v] : b) {
        if (!a.count(k)) out[k] = StringAbs::top();
    }
    return out;
}

Nfa eval_impure_regex(const ImpureRegex& r, const std::map<std::string, StringAbs>& lam, const CompileOptions& opts) {
    switch (r.kind) {
        case ImpureRegex::Kind::Pure: return compile(*r.pure, opts);
        case ImpureRegex::Kind::VarRef: return lookup(lam, r.var).content;
        case ImpureRegex::Kind::Star: return normalize_atoms(star(eval_impure_regex(*r.children.front(), lam, opts)));
        case ImpureRegex::Kind::Alt: {
            Nfa acc = Nfa::empty_language();
            for (const auto& c : r.children) acc = unite(acc, eval_impure_regex(*c, lam, opts));
            return normalize_atoms(acc);
        }
        case ImpureRegex::Kind::Concat: {
            Nfa acc = Nfa::epsilon();
            for (const auto& c : r.children) acc = concat(acc, eval_impure_regex(*c, lam, opts));
            return normalize_atoms(acc);
        }
    }
    return Nfa::universal();
}

Interval eval_int(const IntExpr& e, const std::map<std::string, StringAbs>& lam) {
    switch (e.kind) {
        case IntExpr::Kind::Const: return Interval::point(e.value);
        case IntExpr::Kind::Len: return lookup(lam, e.var).length;
        case IntExpr::Kind::Add: return eval_int(*e.lhs, lam).add(eval_int(*e.rhs, lam));
        case IntExpr::Kind::Sub: return eval_int(*e.lhs, lam).sub(eval_int(*e.rhs, lam));
    }
    return Interval::top();
}

// ---------------------------------------------------------------- analyzer

namespace {

void assigned_vars(const Stmt& s, std::set<std::string>& out) {
    switch (s.kind) {
        case Stmt::Kind::Assign:
        case Stmt::Kind::Havoc:
        case Stmt::Kind::GetInput: out.insert(s.var); break;
        default: break;
    }
    for (const auto& c : s.body) assigned_vars(*c, out);
    for (const auto& c : s.otherwise) assigned_vars(*c, out);
}

class Analyzer {
public:
    Analyzer(const AttackEnv& psi, const AnalyzeOptions& opts) : psi_(psi), opts_(opts) {}

    std::map<std::string, Warning> warnings;
    std::size_t max_passes = 0;

    void exec(const Stmt& s, AnalysisState& st, bool report) {
        switch (s.kind) {
            case Stmt::Kind::Skip: return;
            case Stmt::Kind::GetInput:
                st.taint.insert(s.var);
                st.strings[s.var] = StringAbs::top();
                return;
            case Stmt::Kind::Assign: {
                StringAbs v = lookup(st.strings, s.source);
                bool tainted = st.taint.count(s.source) > 0;
                st.strings[s.var] = std::move(v);
                if (tainted) {
                    st.taint.insert(s.var);
                } else {
                    st.taint.erase(s.var);
                }
                return;
            }
            case Stmt::Kind::Havoc:
                st.taint.erase(s.var);
                st.strings[s.var] = StringAbs::top();
                return;
            case Stmt::Kind::AssumeRegex: {
                lookup(st.strings, s.var);
                Nfa r;
                try {
                    r = eval_impure_regex(*s.re, st.strings);
                } catch (const SizeExceeded&) {
                    return;
                }
                auto& abs = st.strings[s.var];
                abs.content = intersect(abs.content, r);
                return;
            }
            case Stmt::Kind::AssumeLen: {
                lookup(st.strings, s.var);
                Interval bound = eval_int(*s.bound, st.strings);
                auto& abs = st.strings[s.var];
                if (bound.empty()) {
                    abs.length = Interval::bottom();
                } else {
                    abs.length.hi = std::min(abs.length.hi, bound.hi);
                }
                return;
            }
            case Stmt::Kind::Match: check_match(s, st, report); return;
            case Stmt::Kind::Seq:
                for (const auto& c : s.body) exec(*c, st, report);
                return;
            case Stmt::Kind::If: {
                AnalysisState other = st;
                for (const auto& c : s.body) exec(*c, st, report);
                for (const auto& c : s.otherwise) exec(*c, other, report);
                st = join_state(st, other);
                return;
            }
            case Stmt::Kind::While: exec_loop(s, st, report); return;
        }
    }

private:
    const AttackEnv& psi_;
    AnalyzeOptions opts_;

    static AnalysisState join_state(const AnalysisState& a, const AnalysisState& b) {
        AnalysisState out;
        out.taint = a.taint;
        out.taint.insert(b.taint.begin(), b.taint.end());
        out.strings = join(a.strings, b.strings);
        return out;
    }

    void check_match(const Stmt& s, AnalysisState& st, bool report) {
        const StringAbs& abs = lookup(st.strings, s.var);
        auto it = psi_.find(s.regex);
        if (it == psi_.end()) throw MissingAttackInfo(s.regex);
        const AttackInfo& info = it->second;
        bool tainted = st.taint.count(s.var) > 0;
        if (!tainted) return;
        if (!info.min_bound || abs.length.empty()) return;
        if (static_cast<std::uint64_t>(abs.length.hi) < *info.min_bound) return;
        Nfa common = intersect(info.attack, abs.content);
        if (is_empty(common)) return;
        if (!report) return;
        Warning w;
        w.site = s.site;
        w.variable = s.var;
        w.regex = s.regex;
        w.reasons = {"'" + s.var + "' is tainted", "its content intersects the attack language",
                     "its length interval " + abs.length.to_string() + " contains the attack bound " +
                         std::to_string(*info.min_bound)};
        w.example = shortest_member(common);
        warnings.emplace(w.site, std::move(w));
    }

    // Returns the variables of `next` that are not covered by `cur`. Content
    // checks that overflow the budget land in `overflow`.
    std::set<std::string> unstable(const AnalysisState& cur, const AnalysisState& next,
                                   std::set<std::string>& overflow, bool& taint_grew) const {
        taint_grew = !std::includes(cur.taint.begin(), cur.taint.end(), next.taint.begin(), next.taint.end());
        std::set<std::string> out;
        for (const auto& [v, abs] : next.strings) {
            auto it = cur.strings.find(v);
            if (it == cur.strings.end()) {
                out.insert(v);
                continue;
            }
            if (!it->second.length.includes(abs.length)) out.insert(v);
            if (it->second.content == abs.content) continue;
            try {
                if (!is_subset(abs.content, it->second.content, opts_.complement_budget)) out.insert(v);
            } catch (const BudgetExceeded&) {
                out.insert(v);
                overflow.insert(v);
            }
        }
        return out;
    }

    void exec_loop(const Stmt& s, AnalysisState& st, bool report) {
        const AnalysisState entry = st;
        AnalysisState cur = entry;
        std::size_t pass = 0;
        std::size_t growing = 0;
        while (true) {
            ++pass;
            AnalysisState next = cur;
            for (const auto& c : s.body) exec(*c, next, false);
            next = join_state(cur, next);
            std::set<std::string> overflow;
            bool taint_grew = false;
            auto moving = unstable(cur, next, overflow, taint_grew);
            if (moving.empty() && !taint_grew) break;
            if (pass >= opts_.max_loop_passes) {
                std::set<std::string> vars;
                assigned_vars(s, vars);
                for (const auto& [v, abs] : next.strings) vars.insert(v);
                for (const auto& v : vars) {
                    next.strings[v] = StringAbs::top();
                    next.taint.insert(v);
                }
                cur = std::move(next);
                break;
            }
            ++growing;
            for (const auto& v : overflow) next.strings[v].content = Nfa::universal();
            if (growing >= opts_.widen_after) {
                for (const auto& v : moving) {
                    auto& abs = next.strings[v];
                    auto it = cur.strings.find(v);
                    if (it == cur.strings.end()) {
                        abs = StringAbs::top();
                        continue;
                    }
                    const StringAbs& old = it->second;
                    if (abs.length.lo < old.length.lo) abs.length.lo = 0;
                    if (abs.length.hi > old.length.hi) abs.length.hi = kInf;
                    if (!(abs.content == old.content)) abs.content = Nfa::universal();
                }
            }
            cur = std::move(next);
        }
        max_passes = std::max(max_passes, pass);
        if (report) {
            AnalysisState probe = cur;
            for (const auto& c : s.body) exec(*c, probe, true);
        }
        st = std::move(cur);
    }
};

}  // namespace

AnalysisResult analyze(const Stmt& prog, const AttackEnv& psi, const AnalyzeOptions& opts) {
    Analyzer a(psi, opts);
    AnalysisResult out;
    a.exec(prog, out.final, true);
    for (auto& [site, w] : a.warnings) out.warnings.push_back(std::move(w));
    out.max_loop_passes = a.max_passes;
    return out;
}

// ---------------------------------------------------------------- pipeline

RegexSummary summarize_regex(const std::string& regex, const PipelineOptions& opts) {
    RegexSummary s;
    s.regex = regex;
    Nfa nfa;
    try {
        nfa = compile_regex(regex);
    } catch (const std::exception& e) {
        s.verdict = Verdict::Unknown;
        s.error = e.what();
        s.info = {0, Nfa::universal()};
        return s;
    }
    ComplexityClass c = classify(nfa, opts.analysis);
    s.verdict = c.verdict;
    if (c.verdict == Verdict::Unknown) {
        s.error = c.reason;
        s.info = {0, Nfa::universal()};
        return s;
    }
    if (c.verdict == Verdict::Linear) {
        s.info = {std::nullopt, Nfa::empty_language()};
        return s;
    }
    if (!opts.dynamic) {
        s.info = {0, *c.attack_automaton};
        return s;
    }
    s.info = {std::nullopt, Nfa::empty_language()};
    for (const auto& p : c.patterns) {
        DynamicVerdict v = infer_min_pumps(nfa, p, opts.threshold);
        if (v.confirmed) {
            if (!s.info.min_bound || v.min_length < *s.info.min_bound) s.info.min_bound = v.min_length;
            s.info.attack = normalize_atoms(unite(s.info.attack, v.refined));
        }
        s.dynamic.push_back(std::move(v));
    }
    return s;
}

AttackEnv build_attack_env(const Stmt& prog, const PipelineOptions& opts, std::vector<RegexSummary>* summaries) {
    AttackEnv env;
    for (const auto& re : match_regexes(prog)) {
        if (env.count(re)) continue;
        RegexSummary s = summarize_regex(re, opts);
        env[re] = s.info;
        if (summaries) summaries->push_back(std::move(s));
    }
    return env;
}

}  // namespace redos::strimp
