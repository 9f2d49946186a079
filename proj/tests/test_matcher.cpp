#include <doctest.h>

#include <random>

#include "redos/automata.hpp"
#include "redos/matcher.hpp"
#include "redos/regex.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace redos;

namespace {

const std::vector<Label> kAtoms{Label::single('a'), Label::single('b'), Label::single('c')};

BigCount fib(unsigned n) {
    BigCount a = 0, b = 1;
    for (unsigned i = 0; i < n; ++i) {
        BigCount t = a + b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

TEST_CASE("backtrack_match on the hyper-vulnerable NFA") {
    Nfa f4 = fixture::hyper_vulnerable();
    MatchResult r = backtrack_match(f4, U"ab");
    CHECK_FALSE(r.accepted);
    CHECK_FALSE(r.exhausted);
    CHECK(r.steps <= 10);
    CHECK(backtrack_match(f4, U"aaa").accepted);
}

TEST_CASE("empty input on an accepting initial state") {
    MatchResult r = backtrack_match(Nfa::universal(), U"");
    CHECK(r.accepted);
    CHECK(r.steps == 0);
}

TEST_CASE("step budget") {
    Nfa f4 = fixture::hyper_vulnerable();
    MatchResult r = backtrack_match(f4, fixture::hyper_attack(20), 1000);
    CHECK(r.exhausted);
    CHECK(r.steps == 1000);
}

TEST_CASE("long inputs use an explicit stack") {
    std::u32string s(1'000'000, U'a');
    MatchResult r = backtrack_match(compile_regex("a*"), s);
    CHECK(r.accepted);
    CHECK(r.steps >= s.size());
    s.back() = U'b';
    CHECK_FALSE(backtrack_match(compile_regex("a*b"), s.substr(0, 200'000) + U"c").accepted);
}

TEST_CASE("rejecting paths on the hyper-vulnerable NFA follow the Fibonacci numbers") {
    Nfa f4 = fixture::hyper_vulnerable();
    for (unsigned k = 0; k <= 10; ++k) {
        std::u32string s = fixture::hyper_attack(k);
        BigCount n = count_rejecting_paths(f4, s);
        CHECK(n == fib(2 * k + 2));
        CHECK(n >= BigCount(1) << k);
        if (k <= 5) CHECK(n == oracle::enumerate_rejecting_paths(f4, s));
    }
}

TEST_CASE("rejecting paths on the vulnerable NFA grow linearly") {
    Nfa f7 = fixture::vulnerable();
    std::vector<BigCount> counts;
    for (std::size_t k = 1; k <= 10; ++k) counts.push_back(count_rejecting_paths(f7, fixture::vulnerable_attack(k)));
    for (std::size_t i = 2; i < counts.size(); ++i) CHECK(counts[i] - counts[i - 1] == counts[1] - counts[0]);
    CHECK(counts.back() > counts.front());
}

TEST_CASE("a DFA has at most one run per string") {
    Nfa d = compile_regex("a(bc|d)|b*");
    for (const auto& s : oracle::all_strings(U"abcd", 4)) CHECK(count_rejecting_paths(d, s) <= 1);
}

TEST_CASE("matcher agrees with subset simulation on random NFAs") {
    std::mt19937 rng(31);
    auto strings = oracle::all_strings(U"abc", 6);
    for (int i = 0; i < 150; ++i) {
        Nfa a = oracle::random_nfa(rng, 4, kAtoms);
        for (std::size_t j = 0; j < strings.size(); j += 3) {
            const auto& s = strings[j];
            MatchResult r = backtrack_match(a, s, 1'000'000);
            REQUIRE_FALSE(r.exhausted);
            REQUIRE(r.accepted == accepts(a, s));
            if (!r.accepted && !s.empty()) REQUIRE(BigCount(r.steps) >= count_rejecting_paths(a, s));
        }
    }
}

TEST_CASE("count_rejecting_paths agrees with explicit enumeration") {
    std::mt19937 rng(8);
    auto strings = oracle::all_strings(U"abc", 6);
    for (int i = 0; i < 100; ++i) {
        Nfa a = oracle::random_nfa(rng, 4, kAtoms, 0.3);
        for (const auto& s : strings) REQUIRE(count_rejecting_paths(a, s) == oracle::enumerate_rejecting_paths(a, s));
    }
}
