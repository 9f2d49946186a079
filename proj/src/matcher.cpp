#include "redos/matcher.hpp"

#include <algorithm>
#include <vector>

namespace redos {

namespace {

// Input characters mapped to minterm ids, plus per-(state, minterm) target
// lists that keep the (label, target) edge order.
struct Table {
    std::size_t atoms = 0;
    std::vector<std::uint32_t> symbol;              // per input position; atoms = no edge
    std::vector<std::vector<StateId>> targets;      // index state * atoms + atom

    Table(const Nfa& a, std::u32string_view s) {
        auto ms = minterms(a.labels());
        atoms = ms.size();
        targets.resize(a.num_states() * atoms);
        for (StateId q = 0; q < a.num_states(); ++q) {
            for (const auto& e : a.out(q)) {
                for (std::size_t i = 0; i < atoms; ++i) {
                    if (e.label.contains(ms[i].min())) targets[q * atoms + i].push_back(e.to);
                }
            }
        }
        symbol.reserve(s.size());
        for (CodePoint c : s) {
            auto it = std::find_if(ms.begin(), ms.end(), [&](const Label& l) { return l.contains(c); });
            symbol.push_back(static_cast<std::uint32_t>(it - ms.begin()));
        }
    }

    const std::vector<StateId>* at(StateId q, std::uint32_t atom) const {
        if (atom == atoms) return nullptr;
        return &targets[q * atoms + atom];
    }
};

}  // namespace

MatchResult backtrack_match(const Nfa& a, std::u32string_view s, std::uint64_t budget) {
    struct Frame {
        const StateId* next;
        const StateId* end;
    };
    Table table(a, s);
    auto frame_for = [&](StateId q, std::size_t pos) -> Frame {
        if (pos == s.size()) return {nullptr, nullptr};
        const auto* v = table.at(q, table.symbol[pos]);
        if (!v || v->empty()) return {nullptr, nullptr};
        return {v->data(), v->data() + v->size()};
    };
    MatchResult r;
    if (s.empty()) {
        r.accepted = a.is_accepting(a.initial());
        return r;
    }
    std::vector<Frame> stack;
    stack.reserve(s.size());
    stack.push_back(frame_for(a.initial(), 0));
    while (!stack.empty()) {
        Frame& top = stack.back();
        if (top.next == top.end) {
            stack.pop_back();
            continue;
        }
        if (r.steps == budget) {
            r.exhausted = true;
            return r;
        }
        ++r.steps;
        StateId to = *top.next++;
        if (stack.size() == s.size()) {
            if (a.is_accepting(to)) {
                r.accepted = true;
                return r;
            }
            continue;
        }
        stack.push_back(frame_for(to, stack.size()));
    }
    return r;
}

BigCount count_rejecting_paths(const Nfa& a, std::u32string_view s) {
    std::vector<BigCount> cur(a.num_states()), next(a.num_states());
    cur[a.initial()] = 1;
    for (CodePoint c : s) {
        for (auto& v : next) v = 0;
        for (StateId q = 0; q < a.num_states(); ++q) {
            if (cur[q] == 0) continue;
            for (const auto& e : a.out(q)) {
                if (e.label.contains(c)) next[e.to] += cur[q];
            }
        }
        cur.swap(next);
    }
    BigCount total = 0;
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (!a.is_accepting(q)) total += cur[q];
    }
    return total;
}

}  // namespace redos
