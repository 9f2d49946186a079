#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace redos {

using CodePoint = char32_t;

inline constexpr CodePoint kMaxCodePoint = 0x10FFFF;

struct CharRange {
    CodePoint lo;
    CodePoint hi;  // inclusive

    auto operator<=>(const CharRange&) const = default;
};

/// A set of Unicode scalar values stored as sorted, disjoint, non-adjacent
/// inclusive ranges. Two labels compare equal iff they denote the same set.
class Label {
public:
    Label() = default;

    static Label single(CodePoint c);
    static Label range(CodePoint lo, CodePoint hi);
    static Label any();
    static Label from_ranges(std::vector<CharRange> ranges);

    bool empty() const { return ranges_.empty(); }
    bool contains(CodePoint c) const;
    const std::vector<CharRange>& ranges() const { return ranges_; }

    Label unite(const Label& other) const;
    Label intersect(const Label& other) const;
    Label minus(const Label& other) const;
    Label complement() const;
    bool disjoint(const Label& other) const;

    CodePoint min() const { return ranges_.front().lo; }

    // Characters used when a label has to be rendered as a concrete string.
    // Printable ASCII is preferred so generated attack strings stay readable.
    CodePoint witness() const;

    // False when the set reaches the top of the code space, which is the case
    // for negated classes, `.`, and the synthetic "any other character" atom.
    bool bounded() const { return !ranges_.empty() && ranges_.back().hi != kMaxCodePoint; }

    std::string to_string() const;

    auto operator<=>(const Label&) const = default;

private:
    std::vector<CharRange> ranges_;
};

/// Ordering used wherever the tools must pick "the smallest" symbol: bounded
/// labels first, then by witness character.
struct WitnessKey {
    bool unbounded;
    CodePoint witness;
    auto operator<=>(const WitnessKey&) const = default;
};

WitnessKey witness_key(const Label& label);

/// Refines `labels` into a minterm partition: every input label is a disjoint
/// union of returned atoms, and returned atoms are pairwise disjoint. Atoms are
/// sorted by their canonical range ordering.
std::vector<Label> minterms(const std::vector<Label>& labels);

std::string describe_codepoint(CodePoint c);

}  // namespace redos
