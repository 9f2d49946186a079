#include "redos/nfa.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace redos {

Nfa::Nfa() : Nfa(1) {}

Nfa::Nfa(std::size_t num_states) : out_(num_states), eps_(num_states), accepting_(num_states, 0) {
    assert(num_states > 0);
}

Nfa Nfa::empty_language() { return Nfa(); }

Nfa Nfa::universal() {
    Nfa a(1);
    a.set_accepting(0);
    a.add_transition(0, Label::any(), 0);
    return a;
}

Nfa Nfa::epsilon() {
    Nfa a(1);
    a.set_accepting(0);
    return a;
}

Nfa Nfa::symbol(const Label& label) {
    Nfa a(2);
    a.set_accepting(1);
    a.add_transition(0, label, 1);
    return a;
}

Nfa Nfa::literal(std::u32string_view text) {
    Nfa a(text.size() + 1);
    for (std::size_t i = 0; i < text.size(); ++i) {
        a.add_transition(static_cast<StateId>(i), Label::single(text[i]), static_cast<StateId>(i + 1));
    }
    a.set_accepting(static_cast<StateId>(text.size()));
    return a;
}

std::vector<StateId> Nfa::accepting_states() const {
    std::vector<StateId> out;
    for (StateId q = 0; q < num_states(); ++q) {
        if (accepting_[q]) out.push_back(q);
    }
    return out;
}

StateId Nfa::add_state(bool accepting) {
    out_.emplace_back();
    eps_.emplace_back();
    accepting_.push_back(accepting ? 1 : 0);
    return static_cast<StateId>(out_.size() - 1);
}

void Nfa::add_transition(StateId from, const Label& label, StateId to) {
    assert(from < num_states() && to < num_states());
    if (label.empty()) return;
    auto& edges = out_[from];
    Edge e{label, to};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return;
    edges.insert(it, std::move(e));
}

void Nfa::add_epsilon(StateId from, StateId to) {
    assert(from < num_states() && to < num_states());
    auto& targets = eps_[from];
    auto it = std::lower_bound(targets.begin(), targets.end(), to);
    if (it != targets.end() && *it == to) return;
    targets.insert(it, to);
}

bool Nfa::has_epsilon() const {
    return std::any_of(eps_.begin(), eps_.end(), [](const auto& v) { return !v.empty(); });
}

std::size_t Nfa::num_transitions() const {
    std::size_t n = 0;
    for (const auto& edges : out_) n += edges.size();
    return n;
}

std::vector<Transition> Nfa::transitions() const {
    std::vector<Transition> out;
    for (StateId q = 0; q < num_states(); ++q) {
        for (const auto& e : out_[q]) out.push_back({q, e.label, e.to});
    }
    return out;
}

std::vector<Label> Nfa::labels() const {
    std::set<Label> seen;
    for (const auto& edges : out_) {
        for (const auto& e : edges) seen.insert(e.label);
    }
    return {seen.begin(), seen.end()};
}

bool Nfa::is_atom_normalized() const {
    auto ls = labels();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        for (std::size_t j = i + 1; j < ls.size(); ++j) {
            if (!ls[i].disjoint(ls[j])) return false;
        }
    }
    return true;
}

std::string Nfa::to_string() const {
    std::ostringstream os;
    os << "states=" << num_states() << " initial=" << initial_ << " accepting={";
    bool first = true;
    for (StateId q : accepting_states()) {
        os << (first ? "" : ",") << q;
        first = false;
    }
    os << "}\n";
    for (StateId q = 0; q < num_states(); ++q) {
        for (const auto& e : out_[q]) os << "  " << q << " -" << e.label.to_string() << "-> " << e.to << "\n";
        for (StateId t : eps_[q]) os << "  " << q << " -eps-> " << t << "\n";
    }
    return os.str();
}

}  // namespace redos
