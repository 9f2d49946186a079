#include "redos/automata.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <unordered_map>

namespace redos {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void copy_into(Nfa& dst, const Nfa& src, StateId offset) {
    for (StateId q = 0; q < src.num_states(); ++q) {
        for (const auto& e : src.out(q)) dst.add_transition(q + offset, e.label, e.to + offset);
        for (StateId t : src.epsilon_out(q)) dst.add_epsilon(q + offset, t + offset);
        if (src.is_accepting(q)) dst.set_accepting(q + offset);
    }
}

std::vector<std::vector<StateId>> reverse_adjacency(const Nfa& a) {
    std::vector<std::vector<StateId>> rev(a.num_states());
    for (StateId q = 0; q < a.num_states(); ++q) {
        for (const auto& e : a.out(q)) rev[e.to].push_back(q);
        for (StateId t : a.epsilon_out(q)) rev[t].push_back(q);
    }
    return rev;
}

// Length of the shortest accepted suffix from every state.
std::vector<std::size_t> distance_to_accept(const Nfa& a) {
    auto rev = reverse_adjacency(a);
    std::vector<std::size_t> dist(a.num_states(), kUnreached);
    std::deque<StateId> queue;
    for (StateId q : a.accepting_states()) {
        dist[q] = 0;
        queue.push_back(q);
    }
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        for (StateId p : rev[q]) {
            if (dist[p] == kUnreached) {
                dist[p] = dist[q] + 1;
                queue.push_back(p);
            }
        }
    }
    return dist;
}

std::vector<StateId> epsilon_closure(const Nfa& a, StateId q) {
    std::vector<char> seen(a.num_states(), 0);
    std::vector<StateId> stack{q}, out;
    seen[q] = 1;
    while (!stack.empty()) {
        StateId p = stack.back();
        stack.pop_back();
        out.push_back(p);
        for (StateId t : a.epsilon_out(p)) {
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Nfa eliminate_epsilon(const Nfa& a) {
    if (!a.has_epsilon()) return a;
    Nfa out(a.num_states());
    out.set_initial(a.initial());
    for (StateId p = 0; p < a.num_states(); ++p) {
        for (StateId q : epsilon_closure(a, p)) {
            if (a.is_accepting(q)) out.set_accepting(p);
            for (const auto& e : a.out(q)) out.add_transition(p, e.label, e.to);
        }
    }
    return trim(out);
}

Nfa normalize_atoms(const Nfa& a) {
    auto atoms = minterms(a.labels());
    Nfa out(a.num_states());
    out.set_initial(a.initial());
    for (StateId q = 0; q < a.num_states(); ++q) {
        if (a.is_accepting(q)) out.set_accepting(q);
        for (StateId t : a.epsilon_out(q)) out.add_epsilon(q, t);
        for (const auto& e : a.out(q)) {
            for (const auto& atom : atoms) {
                if (e.label.contains(atom.min())) out.add_transition(q, atom, e.to);
            }
        }
    }
    return out;
}

Nfa trim(const Nfa& a) {
    auto dist = distance_to_accept(a);
    if (dist[a.initial()] == kUnreached) return Nfa::empty_language();
    std::vector<StateId> id(a.num_states(), std::numeric_limits<StateId>::max());
    std::vector<StateId> order{a.initial()};
    id[a.initial()] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        StateId q = order[i];
        auto visit = [&](StateId t) {
            if (dist[t] != kUnreached && id[t] == std::numeric_limits<StateId>::max()) {
                id[t] = static_cast<StateId>(order.size());
                order.push_back(t);
            }
        };
        for (const auto& e : a.out(q)) visit(e.to);
        for (StateId t : a.epsilon_out(q)) visit(t);
    }
    Nfa out(order.size());
    for (StateId q : order) {
        StateId nq = id[q];
        if (a.is_accepting(q)) out.set_accepting(nq);
        for (const auto& e : a.out(q)) {
            if (dist[e.to] != kUnreached) out.add_transition(nq, e.label, id[e.to]);
        }
        for (StateId t : a.epsilon_out(q)) {
            if (dist[t] != kUnreached) out.add_epsilon(nq, id[t]);
        }
    }
    return out;
}

Nfa intersect(const Nfa& a, const Nfa& b) {
    std::unordered_map<std::uint64_t, StateId> ids;
    std::vector<std::pair<StateId, StateId>> pairs;
    auto key = [](StateId p, StateId q) { return (std::uint64_t{p} << 32) | q; };
    Nfa out(1);
    pairs.emplace_back(a.initial(), b.initial());
    ids.emplace(key(a.initial(), b.initial()), 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto [p, q] = pairs[i];
        auto from = static_cast<StateId>(i);
        if (a.is_accepting(p) && b.is_accepting(q)) out.set_accepting(from);
        for (const auto& e1 : a.out(p)) {
            for (const auto& e2 : b.out(q)) {
                Label l = e1.label.intersect(e2.label);
                if (l.empty()) continue;
                auto [it, inserted] = ids.emplace(key(e1.to, e2.to), static_cast<StateId>(pairs.size()));
                if (inserted) {
                    pairs.emplace_back(e1.to, e2.to);
                    out.add_state();
                }
                out.add_transition(from, l, it->second);
            }
        }
    }
    return trim(out);
}

Nfa unite(const Nfa& a, const Nfa& b) {
    auto na = static_cast<StateId>(a.num_states());
    Nfa out(1 + a.num_states() + b.num_states());
    copy_into(out, a, 1);
    copy_into(out, b, 1 + na);
    for (const auto& e : a.out(a.initial())) out.add_transition(0, e.label, e.to + 1);
    for (const auto& e : b.out(b.initial())) out.add_transition(0, e.label, e.to + 1 + na);
    if (a.is_accepting(a.initial()) || b.is_accepting(b.initial())) out.set_accepting(0);
    return trim(out);
}

Nfa concat(const Nfa& a, const Nfa& b) {
    auto na = static_cast<StateId>(a.num_states());
    Nfa out(a.num_states() + b.num_states());
    out.set_initial(a.initial());
    for (StateId q = 0; q < na; ++q) {
        for (const auto& e : a.out(q)) out.add_transition(q, e.label, e.to);
    }
    copy_into(out, b, na);
    bool b_nullable = b.is_accepting(b.initial());
    for (StateId f : a.accepting_states()) {
        for (const auto& e : b.out(b.initial())) out.add_transition(f, e.label, e.to + na);
        if (b_nullable) out.set_accepting(f);
    }
    return trim(out);
}

Nfa plus(const Nfa& a) {
    Nfa out = a;
    for (StateId f : a.accepting_states()) {
        for (const auto& e : a.out(a.initial())) out.add_transition(f, e.label, e.to);
    }
    return trim(out);
}

Nfa star(const Nfa& a) { return unite(Nfa::epsilon(), plus(a)); }

Nfa power(const Nfa& a, std::size_t k) {
    if (k == 0) return Nfa::epsilon();
    if (k == 1) return trim(a);
    // Copy i occupies ids [i*n, (i+1)*n); copy k-1 carries the accepting set.
    auto n = static_cast<StateId>(a.num_states());
    bool nullable = a.is_accepting(a.initial());
    Nfa out(a.num_states() * k);
    out.set_initial(a.initial());
    for (std::size_t i = 0; i < k; ++i) {
        auto base = static_cast<StateId>(i * n);
        for (StateId q = 0; q < n; ++q) {
            for (const auto& e : a.out(q)) out.add_transition(base + q, e.label, base + e.to);
        }
    }
    // A state of copy i is final for the first i+1 factors; it may jump into
    // copy i+1, and is accepting if every remaining factor can be empty.
    for (std::size_t i = 0; i < k; ++i) {
        auto base = static_cast<StateId>(i * n);
        bool rest_nullable = i + 1 == k || nullable;
        for (StateId f : a.accepting_states()) {
            if (rest_nullable) out.set_accepting(base + f);
            for (std::size_t j = i + 1; j < k; ++j) {
                for (const auto& e : a.out(a.initial())) {
                    out.add_transition(base + f, e.label, static_cast<StateId>(j * n) + e.to);
                }
                if (!nullable) break;
            }
        }
    }
    return trim(out);
}

Nfa complement(const Nfa& a, std::size_t budget) {
    auto atoms = minterms(a.labels());
    Label covered;
    for (const auto& atom : atoms) covered = covered.unite(atom);
    Label other = covered.complement();
    if (!other.empty()) atoms.push_back(other);

    std::map<std::vector<StateId>, StateId> ids;
    std::vector<std::vector<StateId>> sets{{a.initial()}};
    ids.emplace(sets[0], 0);
    Nfa out(1);
    std::vector<char> mark(a.num_states(), 0);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto from = static_cast<StateId>(i);
        std::vector<StateId> current = sets[i];
        bool any_accepting = std::any_of(current.begin(), current.end(), [&](StateId q) { return a.is_accepting(q); });
        out.set_accepting(from, !any_accepting);
        for (const auto& atom : atoms) {
            CodePoint c = atom.min();
            std::vector<StateId> next;
            for (StateId q : current) {
                for (const auto& e : a.out(q)) {
                    if (!mark[e.to] && e.label.contains(c)) {
                        mark[e.to] = 1;
                        next.push_back(e.to);
                    }
                }
            }
            for (StateId t : next) mark[t] = 0;
            std::sort(next.begin(), next.end());
            auto [it, inserted] = ids.emplace(next, static_cast<StateId>(sets.size()));
            if (inserted) {
                if (sets.size() >= budget) throw BudgetExceeded(budget);
                sets.push_back(std::move(next));
                out.add_state();
            }
            out.add_transition(from, atom, it->second);
        }
    }
    return trim(out);
}

Nfa with_initial(const Nfa& a, StateId q) {
    Nfa out = a;
    out.set_initial(q);
    return out;
}

Nfa with_accepting(const Nfa& a, std::span<const StateId> accepting) {
    Nfa out = a;
    for (StateId q = 0; q < out.num_states(); ++q) out.set_accepting(q, false);
    for (StateId q : accepting) out.set_accepting(q);
    return out;
}

Nfa from_state_set(const Nfa& a, std::span<const StateId> states) {
    Nfa out = a;
    StateId s = out.add_state();
    for (StateId q : states) {
        if (a.is_accepting(q)) out.set_accepting(s);
        for (const auto& e : a.out(q)) out.add_transition(s, e.label, e.to);
    }
    out.set_initial(s);
    return trim(out);
}

bool is_empty(const Nfa& a) {
    std::vector<StateId> start{a.initial()};
    for (StateId q : reachable(a, start)) {
        if (a.is_accepting(q)) return false;
    }
    return true;
}

std::vector<StateId> reachable(const Nfa& a, std::span<const StateId> from) {
    std::vector<char> seen(a.num_states(), 0);
    std::vector<StateId> stack, out;
    for (StateId q : from) {
        if (!seen[q]) {
            seen[q] = 1;
            stack.push_back(q);
        }
    }
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        out.push_back(q);
        auto visit = [&](StateId t) {
            if (!seen[t]) {
                seen[t] = 1;
                stack.push_back(t);
            }
        };
        for (const auto& e : a.out(q)) visit(e.to);
        for (StateId t : a.epsilon_out(q)) visit(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<StateId> step_set(const Nfa& a, std::vector<StateId> current, std::u32string_view s) {
    std::vector<char> mark(a.num_states(), 0);
    std::sort(current.begin(), current.end());
    current.erase(std::unique(current.begin(), current.end()), current.end());
    std::vector<StateId> next;
    for (CodePoint c : s) {
        next.clear();
        for (StateId q : current) {
            for (const auto& e : a.out(q)) {
                if (!mark[e.to] && e.label.contains(c)) {
                    mark[e.to] = 1;
                    next.push_back(e.to);
                }
            }
        }
        for (StateId t : next) mark[t] = 0;
        std::sort(next.begin(), next.end());
        current.swap(next);
        if (current.empty()) break;
    }
    return current;
}

bool accepts(const Nfa& a, std::u32string_view s) {
    for (StateId q : step_set(a, {a.initial()}, s)) {
        if (a.is_accepting(q)) return true;
    }
    return false;
}

std::optional<std::u32string> shortest_member(const Nfa& a) {
    auto dist = distance_to_accept(a);
    std::size_t remaining = dist[a.initial()];
    if (remaining == kUnreached) return std::nullopt;
    std::u32string out;
    std::vector<StateId> current{a.initial()};
    std::vector<char> mark(a.num_states(), 0);
    while (remaining > 0) {
        std::optional<WitnessKey> best;
        for (StateId q : current) {
            for (const auto& e : a.out(q)) {
                if (dist[e.to] != remaining - 1) continue;
                auto k = witness_key(e.label);
                if (!best || k < *best) best = k;
            }
        }
        CodePoint c = best->witness;
        out.push_back(c);
        std::vector<StateId> next;
        for (StateId q : current) {
            for (const auto& e : a.out(q)) {
                if (dist[e.to] == remaining - 1 && !mark[e.to] && e.label.contains(c)) {
                    mark[e.to] = 1;
                    next.push_back(e.to);
                }
            }
        }
        for (StateId t : next) mark[t] = 0;
        current.swap(next);
        --remaining;
    }
    return out;
}

bool is_subset(const Nfa& a, const Nfa& b, std::size_t budget) {
    return is_empty(intersect(a, complement(b, budget)));
}

}  // namespace redos
