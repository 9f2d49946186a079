#pragma once

#include <cstdint>
#include <limits>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "redos/nfa.hpp"

namespace redos {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr std::uint64_t kUnlimitedSteps = std::numeric_limits<std::uint64_t>::max();

struct MatchResult {
    bool accepted = false;   // meaningless when exhausted
    std::uint64_t steps = 0;
    bool exhausted = false;
};

/// Depth-first backtracking over all runs, trying the edges of a state in
/// (label, target) order. One step is counted per transition followed. The
/// search stops at the first run that consumes the whole input in an
/// accepting state, or once `budget` steps have been taken.
MatchResult backtrack_match(const Nfa& a, std::u32string_view s, std::uint64_t budget = kUnlimitedSteps);

/// Number of distinct runs consuming all of `s` from the initial state and
/// ending in a non-accepting state.
BigCount count_rejecting_paths(const Nfa& a, std::u32string_view s);

}  // namespace redos
