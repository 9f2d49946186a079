#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "redos/nfa.hpp"

namespace redos {

inline constexpr std::size_t kDefaultComplementBudget = 10000;

struct BudgetExceeded : std::runtime_error {
    std::size_t budget;
    explicit BudgetExceeded(std::size_t b)
        : std::runtime_error("subset construction exceeded " + std::to_string(b) + " states"), budget(b) {}
};

Nfa eliminate_epsilon(const Nfa& a);

/// Relabels every transition over the minterms of the automaton's labels.
Nfa normalize_atoms(const Nfa& a);

/// Keeps only states that are reachable and co-reachable, renumbered in
/// breadth-first order from the initial state.
Nfa trim(const Nfa& a);

Nfa intersect(const Nfa& a, const Nfa& b);
Nfa unite(const Nfa& a, const Nfa& b);
Nfa concat(const Nfa& a, const Nfa& b);
/// Kleene plus: one or more concatenated members.
Nfa plus(const Nfa& a);
Nfa star(const Nfa& a);
/// k-fold concatenation; power(a, 0) accepts only the empty string.
Nfa power(const Nfa& a, std::size_t k);

/// Complement over the atoms of `a` plus one atom for every other character.
/// Throws BudgetExceeded once the subset construction needs more than
/// `budget` DFA states.
Nfa complement(const Nfa& a, std::size_t budget = kDefaultComplementBudget);

/// Same transitions, different initial state.
Nfa with_initial(const Nfa& a, StateId q);
Nfa with_accepting(const Nfa& a, std::span<const StateId> accepting);
/// Fresh initial state that behaves like the union of `states`.
Nfa from_state_set(const Nfa& a, std::span<const StateId> states);

bool is_empty(const Nfa& a);
bool accepts(const Nfa& a, std::u32string_view s);
std::optional<std::u32string> shortest_member(const Nfa& a);
/// L(a) ⊆ L(b).
bool is_subset(const Nfa& a, const Nfa& b, std::size_t budget = kDefaultComplementBudget);

/// States occupied after reading `s` from `start` (sorted, no duplicates).
std::vector<StateId> step_set(const Nfa& a, std::vector<StateId> start, std::u32string_view s);
std::vector<StateId> reachable(const Nfa& a, std::span<const StateId> from);

}  // namespace redos
