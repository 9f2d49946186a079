#include "redos/automata.hpp"
#include "redos/regex.hpp"

namespace redos {

namespace {

struct Fragment {
    StateId start;
    StateId end;
};

class Builder {
public:
    explicit Builder(std::size_t cap) : cap_(cap) {}

    Nfa finish(const RegexNode& root) {
        Fragment f = build(root);
        nfa_.set_initial(f.start);
        nfa_.set_accepting(f.end);
        return std::move(nfa_);
    }

private:
    Nfa nfa_{1};
    bool first_ = true;
    std::size_t cap_;

    StateId fresh() {
        if (first_) {
            first_ = false;
            return 0;
        }
        if (nfa_.num_states() >= cap_) throw SizeExceeded(cap_);
        return nfa_.add_state();
    }

    Fragment symbol(const Label& l) {
        StateId s = fresh(), t = fresh();
        nfa_.add_transition(s, l, t);
        return {s, t};
    }

    Fragment epsilon() {
        StateId s = fresh();
        return {s, s};
    }

    Fragment seq(Fragment a, Fragment b) {
        nfa_.add_epsilon(a.end, b.start);
        return {a.start, b.end};
    }

    Fragment alt(const std::vector<Fragment>& parts) {
        StateId s = fresh(), t = fresh();
        for (const auto& p : parts) {
            nfa_.add_epsilon(s, p.start);
            nfa_.add_epsilon(p.end, t);
        }
        return {s, t};
    }

    Fragment raw_star(Fragment a) {
        StateId s = fresh();
        nfa_.add_epsilon(s, a.start);
        nfa_.add_epsilon(a.end, s);
        return {s, s};
    }

    Fragment opt(Fragment a) {
        StateId s = fresh(), t = fresh();
        nfa_.add_epsilon(s, a.start);
        nfa_.add_epsilon(s, t);
        nfa_.add_epsilon(a.end, t);
        return {s, t};
    }

    // E+ = E E*, E* = (E E*)?  with every occurrence of E built afresh.
    Fragment plus_of(const RegexNode& e) { return seq(build(e), raw_star(build(e))); }
    Fragment star_of(const RegexNode& e) { return opt(plus_of(e)); }

    Fragment build(const RegexNode& n) {
        switch (n.kind) {
            case RegexKind::Empty: return epsilon();
            case RegexKind::Literal:
            case RegexKind::Dot:
            case RegexKind::Class: return symbol(n.label);
            case RegexKind::Concat: {
                Fragment f = build(*n.children.front());
                for (std::size_t i = 1; i < n.children.size(); ++i) f = seq(f, build(*n.children[i]));
                return f;
            }
            case RegexKind::Alternation: {
                std::vector<Fragment> parts;
                for (const auto& c : n.children) parts.push_back(build(*c));
                return alt(parts);
            }
            case RegexKind::Star: return star_of(*n.children.front());
            case RegexKind::Plus: return plus_of(*n.children.front());
            case RegexKind::Optional: return opt(build(*n.children.front()));
            case RegexKind::BoundedRepeat: {
                const RegexNode& e = *n.children.front();
                Fragment f = epsilon();
                for (int i = 0; i < n.min; ++i) f = seq(f, build(e));
                if (n.max == kUnbounded) return seq(f, star_of(e));
                // E{m,n}: the optional tail nests as (E(E(...)?)?)?
                if (n.max > n.min) {
                    Fragment tail = opt(build(e));
                    for (int i = n.min + 1; i < n.max; ++i) tail = opt(seq(build(e), tail));
                    f = seq(f, tail);
                }
                return f;
            }
        }
        return epsilon();
    }
};

}  // namespace

Nfa compile(const RegexNode& ast, const CompileOptions& opts) {
    Nfa raw = Builder(opts.max_states).finish(ast);
    return normalize_atoms(trim(eliminate_epsilon(raw)));
}

Nfa compile_regex(std::string_view src, const CompileOptions& opts) { return compile(*parse_regex(src), opts); }

}  // namespace redos
