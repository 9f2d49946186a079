#pragma once

#include <chrono>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redos/automata.hpp"
#include "redos/nfa.hpp"

namespace redos {

enum class PatternKind { Exponential, SuperLinear };

/// One pumpable attack shape: strings prefix · core^k · suffix_acceptor with
/// k >= 1 drive the subject automaton into worst-case backtracking.
struct AttackPattern {
    PatternKind kind = PatternKind::Exponential;
    StateId pivot = 0;
    std::optional<StateId> partner;  // q' for super-linear patterns
    Label label;                     // shared label of the two pivot edges
    StateId first = 0;               // targets of the two pivot edges
    StateId second = 0;
    Nfa prefix;
    Nfa core;
    Nfa suffix_acceptor;  // already complemented
    std::shared_ptr<const Nfa> subject;

    Nfa flatten() const;
};

enum class Verdict { Linear, SuperLinear, Exponential, Unknown };

const char* to_string(Verdict v);
const char* to_string(PatternKind k);

struct ComplexityClass {
    Verdict verdict = Verdict::Linear;
    std::vector<AttackPattern> patterns;
    std::optional<Nfa> attack_automaton;
    std::string reason;  // set for Unknown
};

struct DeadlineExceeded : std::runtime_error {
    DeadlineExceeded() : std::runtime_error("analysis deadline exceeded") {}
};

struct AnalysisOptions {
    std::size_t complement_budget = kDefaultComplementBudget;
    std::chrono::milliseconds deadline{10'000};
};

/// Paths leaving q through (q, l, q1) and returning to q.
Nfa loop_back(const Nfa& a, StateId q, const Label& l, StateId q1);
/// Non-empty paths from q' back to q'.
Nfa any_loop_back(const Nfa& a, StateId q_prime);

std::vector<AttackPattern> attack_for_pivot_exp(const Nfa& a, StateId q, const AnalysisOptions& opts = {});
std::pair<Nfa, std::vector<AttackPattern>> attack_automaton_exp(const Nfa& a, const AnalysisOptions& opts = {});

std::vector<AttackPattern> attack_for_pivot_superlinear(const Nfa& a, StateId q, const AnalysisOptions& opts = {});
std::pair<Nfa, std::vector<AttackPattern>> attack_automaton_superlinear(const Nfa& a,
                                                                        const AnalysisOptions& opts = {});

/// Never throws on budget or deadline overflow; those yield Verdict::Unknown.
ComplexityClass classify(const Nfa& a, const AnalysisOptions& opts = {});

}  // namespace redos
