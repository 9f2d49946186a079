#include <doctest.h>

#include <random>

#include "redos/automata.hpp"
#include "redos/regex.hpp"
#include "redos/utf8.hpp"
#include "support/oracles.hpp"

using namespace redos;

namespace {

bool compiled_accepts(std::string_view re, std::u32string_view s) { return accepts(compile_regex(re), s); }

template <typename E>
std::size_t error_position(std::string_view re) {
    try {
        parse_regex(re);
    } catch (const E& e) {
        return e.position;
    }
    FAIL("expected an error for " << re);
    return 0;
}

}  // namespace

TEST_CASE("parse_regex shapes") {
    CHECK(to_string(*parse_regex("(a+)+")) == "Plus(Plus(Literal a))");
    CHECK(to_string(*parse_regex("a")) == "Literal a");
    CHECK(to_string(*parse_regex("(a|b)*(a|c)*")) ==
          "Concat(Star(Alt(Literal a,Literal b)),Star(Alt(Literal a,Literal c)))");
    CHECK(to_string(*parse_regex("a{2,3}")) == "Repeat(Literal a){2,3}");
    CHECK(to_string(*parse_regex("[^a-c]?")) == "Optional(Class [^a-c])");
    CHECK(to_string(*parse_regex("")) == "Empty");
}

TEST_CASE("parse_regex rejects unsupported features") {
    for (const char* re : {"(a)\\1", "(?=a)b", "(?<=a)b", "(?!a)", "a*?", "a++", "(?>a)", "(?i)a", "\\bword", "\\k<n>"})
        CHECK_THROWS_AS(parse_regex(re), UnsupportedFeature);
    CHECK(error_position<UnsupportedFeature>("ab(?<=a)") == 2);
}

TEST_CASE("parse_regex syntax errors carry positions") {
    CHECK(error_position<SyntaxError>("x(ab") == 1);
    CHECK(error_position<SyntaxError>("ab)") == 2);
    CHECK(error_position<SyntaxError>("ab[abc") == 2);
    CHECK(error_position<SyntaxError>("*a") == 0);
    CHECK_THROWS_AS(parse_regex("a{3,2}"), SyntaxError);
    CHECK_THROWS_AS(parse_regex("a{65}"), UnsupportedFeature);
}

TEST_CASE("escapes and classes") {
    CHECK(compiled_accepts("\\p{Blank}", U" "));
    CHECK(compiled_accepts("\\p{Blank}", U"\t"));
    CHECK_FALSE(compiled_accepts("\\p{Blank}", U"\n"));
    CHECK(compiled_accepts("\\d+", U"0129"));
    CHECK(compiled_accepts("\\w\\s\\W", U"a ."));
    CHECK(compiled_accepts("[\\/<>]", U"/"));
    CHECK(compiled_accepts("[^\\/<>]", U"a"));
    CHECK_FALSE(compiled_accepts("[^\\/<>]", U"<"));
    CHECK(compiled_accepts("\\x41\\u00e9", U"Aé"));
    CHECK(compiled_accepts("\\Qa.b\\E", U"a.b"));
    CHECK_FALSE(compiled_accepts("\\Qa.b\\E", U"axb"));
    CHECK(compiled_accepts("^ab$", U"ab"));
    CHECK(compiled_accepts("(?:ab)+", U"abab"));
    CHECK(compiled_accepts("(?<x>ab)", U"ab"));
    CHECK(compiled_accepts(".", U"x"));
    CHECK_FALSE(compiled_accepts(".", U"\n"));
}

TEST_CASE("compile basic languages") {
    Nfa a = compile_regex("a");
    CHECK(accepts(a, U"a"));
    CHECK_FALSE(accepts(a, U""));
    CHECK_FALSE(accepts(a, U"b"));
    Nfa mail = compile_regex(".+@.+\\.[a-z]+");
    CHECK(accepts(mail, U"x@y.z"));
    CHECK_FALSE(accepts(mail, U"x@y"));
}

TEST_CASE("email regex agrees with the reference evaluator") {
    auto ast = parse_regex(".+@.+\\.[a-z]+");
    Nfa nfa = compile(*ast);
    const char* samples[] = {"x@y.z",   "x@y",       "@y.z",     "x@.z",    "x@y.",     "a@b.cd",  "a@b.c1",
                             "a@b@c.d", "ab@cd.ef",  "a.b@c.d",  "a@b..c",  "@@.a",     "a@@b.c",  "a@b.C",
                             "",        "@",         "a@b.cz",   "a b@c.d", "a@b\n.c",  "a@b.c.d", "x@y.zz9",
                             "é@y.z",   "x@y.\xc3\xa9", "x@y.abc", "...@..a", "q@w.e", "q@w.e ", " q@w.e", "1@2.3", "1@2.a"};
    int n = 0;
    for (const char* sample : samples) {
        std::u32string s = utf8::decode(sample);
        CHECK_MESSAGE(accepts(nfa, s) == oracle::regex_matches(*ast, s), sample);
        ++n;
    }
    CHECK(n == 30);
}

TEST_CASE("random regexes agree with the reference evaluator") {
    std::mt19937 rng(99);
    auto strings = oracle::all_strings(U"abc", 5);
    for (int i = 0; i < 300; ++i) {
        auto ast = oracle::random_regex(rng, 4, U"abc");
        Nfa nfa = compile(*ast);
        REQUIRE_FALSE(nfa.has_epsilon());
        REQUIRE(nfa.is_atom_normalized());
        for (const auto& s : strings) REQUIRE_MESSAGE(accepts(nfa, s) == oracle::regex_matches(*ast, s), to_string(*ast));
    }
}

TEST_CASE("bounded repetition expands exactly") {
    Nfa r = compile_regex("(ab|c){2,3}");
    Nfa e = compile_regex("(ab|c)(ab|c)((ab|c)?)");
    for (const auto& s : oracle::all_strings(U"abc", 7)) REQUIRE(accepts(r, s) == accepts(e, s));
    Nfa open = compile_regex("a{2,}");
    CHECK_FALSE(accepts(open, U"a"));
    CHECK(accepts(open, U"aaaaa"));
}

TEST_CASE("compile enforces the state cap") {
    CompileOptions small;
    small.max_states = 40;
    CHECK_THROWS_AS(compile_regex("(abcdef){10}", small), SizeExceeded);
    CHECK_NOTHROW(compile_regex("(abcdef){2}", small));
    CHECK_THROWS_AS(compile_regex("((a|b){64}){64}"), SizeExceeded);
}
