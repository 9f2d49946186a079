#include "redos/label.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "redos/utf8.hpp"

namespace redos {

Label Label::single(CodePoint c) { return range(c, c); }

Label Label::range(CodePoint lo, CodePoint hi) {
    Label l;
    if (lo <= hi) l.ranges_.push_back({lo, hi});
    return l;
}

Label Label::any() { return range(0, kMaxCodePoint); }

Label Label::from_ranges(std::vector<CharRange> ranges) {
    std::erase_if(ranges, [](const CharRange& r) { return r.lo > r.hi; });
    std::sort(ranges.begin(), ranges.end());
    Label l;
    for (const auto& r : ranges) {
        if (!l.ranges_.empty() && r.lo <= l.ranges_.back().hi + 1) {
            l.ranges_.back().hi = std::max(l.ranges_.back().hi, r.hi);
        } else {
            l.ranges_.push_back(r);
        }
    }
    return l;
}

bool Label::contains(CodePoint c) const {
    auto it = std::upper_bound(ranges_.begin(), ranges_.end(), c,
                               [](CodePoint v, const CharRange& r) { return v < r.lo; });
    if (it == ranges_.begin()) return false;
    --it;
    return c <= it->hi;
}

Label Label::unite(const Label& other) const {
    std::vector<CharRange> all = ranges_;
    all.insert(all.end(), other.ranges_.begin(), other.ranges_.end());
    return from_ranges(std::move(all));
}

Label Label::intersect(const Label& other) const {
    Label out;
    std::size_t i = 0, j = 0;
    while (i < ranges_.size() && j < other.ranges_.size()) {
        const auto& a = ranges_[i];
        const auto& b = other.ranges_[j];
        CodePoint lo = std::max(a.lo, b.lo);
        CodePoint hi = std::min(a.hi, b.hi);
        if (lo <= hi) out.ranges_.push_back({lo, hi});
        if (a.hi < b.hi) {
            ++i;
        } else {
            ++j;
        }
    }
    return out;
}

Label Label::complement() const {
    Label out;
    CodePoint next = 0;
    for (const auto& r : ranges_) {
        if (r.lo > next) out.ranges_.push_back({next, r.lo - 1});
        if (r.hi == kMaxCodePoint) return out;
        next = r.hi + 1;
    }
    out.ranges_.push_back({next, kMaxCodePoint});
    return out;
}

Label Label::minus(const Label& other) const { return intersect(other.complement()); }

bool Label::disjoint(const Label& other) const { return intersect(other).empty(); }

CodePoint Label::witness() const {
    for (CodePoint lo : {CodePoint{0x21}, CodePoint{0x20}}) {
        for (const auto& r : ranges_) {
            if (r.hi >= lo && r.lo <= 0x7E) return std::max(r.lo, lo);
        }
    }
    return ranges_.front().lo;
}

WitnessKey witness_key(const Label& label) { return {!label.bounded(), label.witness()}; }

std::string describe_codepoint(CodePoint c) {
    switch (c) {
        case '\n': return "\\n";
        case '\r': return "\\r";
        case '\t': return "\\t";
        case '\\': return "\\\\";
        case '-': return "\\-";
        case ']': return "\\]";
        case '[': return "\\[";
        case '^': return "\\^";
        default: break;
    }
    if (c < 0x20 || c == 0x7F || c > 0x7E) {
        char buf[16];
        std::snprintf(buf, sizeof buf, c > 0xFFFF ? "\\x{%X}" : "\\u%04X", static_cast<unsigned>(c));
        return buf;
    }
    return utf8::encode(std::u32string(1, c));
}

std::string Label::to_string() const {
    if (ranges_.empty()) return "[]";
    if (ranges_.size() == 1 && ranges_[0].lo == ranges_[0].hi) return describe_codepoint(ranges_[0].lo);
    if (*this == any()) return ".";
    std::string out = "[";
    const Label* shown = this;
    Label negated;
    if (ranges_.front().lo == 0 && ranges_.back().hi == kMaxCodePoint) {
        negated = complement();
        shown = &negated;
        out += '^';
    }
    for (const auto& r : shown->ranges_) {
        out += describe_codepoint(r.lo);
        if (r.hi != r.lo) {
            if (r.hi != r.lo + 1) out += '-';
            out += describe_codepoint(r.hi);
        }
    }
    return out + "]";
}

std::vector<Label> minterms(const std::vector<Label>& labels) {
    // Sweep over elementary intervals, grouping them by the set of input
    // labels that contain them.
    std::vector<CodePoint> cuts;
    for (const auto& l : labels) {
        for (const auto& r : l.ranges()) {
            cuts.push_back(r.lo);
            if (r.hi != kMaxCodePoint) cuts.push_back(r.hi + 1);
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::map<std::vector<std::size_t>, std::vector<CharRange>> groups;
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        CodePoint lo = cuts[i];
        CodePoint hi = i + 1 < cuts.size() ? cuts[i + 1] - 1 : kMaxCodePoint;
        std::vector<std::size_t> signature;
        for (std::size_t j = 0; j < labels.size(); ++j) {
            if (labels[j].contains(lo)) signature.push_back(j);
        }
        if (!signature.empty()) groups[signature].push_back({lo, hi});
    }

    std::vector<Label> atoms;
    atoms.reserve(groups.size());
    for (auto& [sig, ranges] : groups) atoms.push_back(Label::from_ranges(std::move(ranges)));
    std::sort(atoms.begin(), atoms.end());
    return atoms;
}

}  // namespace redos
