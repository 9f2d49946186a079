#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "redos/label.hpp"
#include "redos/nfa.hpp"

namespace redos {

struct RegexError : std::runtime_error {
    std::size_t position;  // code-point offset into the source
    RegexError(const std::string& what, std::size_t pos) : std::runtime_error(what), position(pos) {}
};

struct SyntaxError : RegexError {
    using RegexError::RegexError;
};

struct UnsupportedFeature : RegexError {
    using RegexError::RegexError;
};

struct SizeExceeded : std::runtime_error {
    std::size_t limit;
    explicit SizeExceeded(std::size_t cap)
        : std::runtime_error("compiled automaton would exceed " + std::to_string(cap) + " states"), limit(cap) {}
};

inline constexpr int kMaxRepeat = 64;
inline constexpr int kUnbounded = -1;
inline constexpr std::size_t kDefaultMaxStates = 5000;

enum class RegexKind { Empty, Literal, Dot, Class, Concat, Alternation, Star, Plus, Optional, BoundedRepeat };

struct RegexNode;
using RegexPtr = std::shared_ptr<const RegexNode>;

struct RegexNode {
    RegexKind kind = RegexKind::Empty;
    Label label;                   // Literal, Dot, Class
    std::vector<RegexPtr> children;
    int min = 0;                   // BoundedRepeat
    int max = 0;                   // BoundedRepeat; kUnbounded for {m,}

    static RegexPtr empty();
    static RegexPtr literal(CodePoint c);
    static RegexPtr dot();
    static RegexPtr cls(Label l);
    static RegexPtr concat(std::vector<RegexPtr> parts);
    static RegexPtr alternation(std::vector<RegexPtr> parts);
    static RegexPtr star(RegexPtr child);
    static RegexPtr plus(RegexPtr child);
    static RegexPtr optional(RegexPtr child);
    static RegexPtr repeat(RegexPtr child, int min, int max);
};

/// Characters matched by `.`: everything except line terminators.
Label dot_label();

/// Parses UTF-8 regex source. Throws SyntaxError or UnsupportedFeature.
RegexPtr parse_regex(std::string_view src);
RegexPtr parse_regex(std::u32string_view src);

/// e.g. `Plus(Plus(Literal a))`.
std::string to_string(const RegexNode& node);

struct CompileOptions {
    std::size_t max_states = kDefaultMaxStates;
};

/// Anchored (whole-string) semantics. The result is epsilon-free and atom
/// normalized. Quantified subexpressions are unfolded into separate copies
/// per iteration role so that the automaton keeps the ambiguity a
/// backtracking engine exhibits.
Nfa compile(const RegexNode& ast, const CompileOptions& opts = {});
Nfa compile_regex(std::string_view src, const CompileOptions& opts = {});

}  // namespace redos
