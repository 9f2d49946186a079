#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redos/matcher.hpp"
#include "redos/vulnerability.hpp"

namespace redos {

struct EmptyComponent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultThreshold = 10'000'000;
inline constexpr std::size_t kDefaultProbeCap = std::size_t{1} << 16;

/// The three strings an attack is assembled from: prefix · core^k · suffix.
struct AttackParts {
    std::u32string prefix;
    std::u32string core;
    std::u32string suffix;

    std::u32string assemble(std::size_t k) const;
};

/// Shortest members of the pattern components. When the pattern knows its
/// subject automaton the suffix is additionally chosen so that it is rejected
/// from every state reachable after the prefix and one or more cores.
AttackParts attack_parts(const AttackPattern& p);

std::u32string synth_attack(const AttackPattern& p, std::size_t k);

/// prefix · core^k · core* · suffix_acceptor
Nfa refine(const AttackPattern& p, std::size_t k);

struct DynamicVerdict {
    AttackPattern pattern;
    std::size_t min_pumps = 0;
    std::size_t min_length = 0;
    std::u32string witness;
    std::uint64_t steps = 0;
    Nfa refined;
    bool confirmed = false;
};

struct DynamicOptions {
    std::size_t probe_cap = kDefaultProbeCap;
};

/// Smallest pump count whose attack string costs at least `threshold`
/// matcher steps on `nfa`.
DynamicVerdict infer_min_pumps(const Nfa& nfa, const AttackPattern& p, std::uint64_t threshold,
                               const DynamicOptions& opts = {});

/// (k, steps) samples of the matcher on synthesized attacks.
std::vector<std::pair<std::size_t, std::uint64_t>> step_curve(const Nfa& nfa, const AttackPattern& p,
                                                              const std::vector<std::size_t>& pumps,
                                                              std::uint64_t budget = kUnlimitedSteps);

}  // namespace redos
