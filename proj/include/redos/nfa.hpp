#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "redos/label.hpp"

namespace redos {

using StateId = std::uint32_t;

struct Edge {
    Label label;
    StateId to;

    auto operator<=>(const Edge&) const = default;
};

struct Transition {
    StateId from;
    Label label;
    StateId to;

    auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic finite automaton over character-class labels.
///
/// States are dense ids `0..num_states()-1`. Outgoing edges of a state are
/// kept sorted by (label, target) and free of duplicates; this ordering is
/// also the exploration order of the backtracking matcher. Epsilon edges are
/// only meant to exist transiently while compiling regexes.
class Nfa {
public:
    /// One non-accepting state: the empty language.
    Nfa();
    explicit Nfa(std::size_t num_states);

    static Nfa empty_language();
    static Nfa universal();
    static Nfa epsilon();
    static Nfa symbol(const Label& label);
    static Nfa literal(std::u32string_view text);

    std::size_t num_states() const { return out_.size(); }
    StateId initial() const { return initial_; }
    void set_initial(StateId q) { initial_ = q; }

    bool is_accepting(StateId q) const { return accepting_[q] != 0; }
    void set_accepting(StateId q, bool value = true) { accepting_[q] = value ? 1 : 0; }
    std::vector<StateId> accepting_states() const;

    StateId add_state(bool accepting = false);
    /// Empty labels are dropped; duplicates are ignored.
    void add_transition(StateId from, const Label& label, StateId to);
    void add_epsilon(StateId from, StateId to);

    const std::vector<Edge>& out(StateId q) const { return out_[q]; }
    const std::vector<StateId>& epsilon_out(StateId q) const { return eps_[q]; }

    bool has_epsilon() const;
    std::size_t num_transitions() const;
    std::vector<Transition> transitions() const;
    /// Distinct labels, sorted.
    std::vector<Label> labels() const;
    /// Every pair of labels is either equal or disjoint.
    bool is_atom_normalized() const;

    std::string to_string() const;

    /// Structural equality (same numbering), not language equality.
    bool operator==(const Nfa&) const = default;

private:
    StateId initial_ = 0;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<StateId>> eps_;
    std::vector<char> accepting_;
};

}  // namespace redos
