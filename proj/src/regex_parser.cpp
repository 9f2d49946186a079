#include <optional>

#include "redos/regex.hpp"
#include "redos/utf8.hpp"

namespace redos {

RegexPtr RegexNode::empty() { return std::make_shared<RegexNode>(); }

RegexPtr RegexNode::literal(CodePoint c) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Literal;
    n->label = Label::single(c);
    return n;
}

RegexPtr RegexNode::dot() {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Dot;
    n->label = dot_label();
    return n;
}

RegexPtr RegexNode::cls(Label l) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::Class;
    n->label = std::move(l);
    return n;
}

namespace {

RegexPtr make(RegexKind kind, std::vector<RegexPtr> children) {
    auto n = std::make_shared<RegexNode>();
    n->kind = kind;
    n->children = std::move(children);
    return n;
}

}  // namespace

RegexPtr RegexNode::concat(std::vector<RegexPtr> parts) {
    if (parts.empty()) return empty();
    if (parts.size() == 1) return parts.front();
    return make(RegexKind::Concat, std::move(parts));
}

RegexPtr RegexNode::alternation(std::vector<RegexPtr> parts) {
    if (parts.size() == 1) return parts.front();
    return make(RegexKind::Alternation, std::move(parts));
}

RegexPtr RegexNode::star(RegexPtr child) { return make(RegexKind::Star, {std::move(child)}); }
RegexPtr RegexNode::plus(RegexPtr child) { return make(RegexKind::Plus, {std::move(child)}); }
RegexPtr RegexNode::optional(RegexPtr child) { return make(RegexKind::Optional, {std::move(child)}); }

RegexPtr RegexNode::repeat(RegexPtr child, int min, int max) {
    auto n = std::make_shared<RegexNode>();
    n->kind = RegexKind::BoundedRepeat;
    n->children = {std::move(child)};
    n->min = min;
    n->max = max;
    return n;
}

Label dot_label() {
    return Label::any()
        .minus(Label::single('\n'))
        .minus(Label::single('\r'))
        .minus(Label::single(0x85))
        .minus(Label::range(0x2028, 0x2029));
}

namespace {

Label digit_label() { return Label::range('0', '9'); }

Label word_label() {
    return Label::from_ranges({{'0', '9'}, {'A', 'Z'}, {'_', '_'}, {'a', 'z'}});
}

Label space_label() { return Label::from_ranges({{'\t', '\r'}, {' ', ' '}}); }

std::optional<Label> posix_class(const std::string& name) {
    if (name == "Blank") return Label::from_ranges({{' ', ' '}, {'\t', '\t'}});
    if (name == "Digit") return digit_label();
    if (name == "Lower") return Label::range('a', 'z');
    if (name == "Upper") return Label::range('A', 'Z');
    if (name == "Alpha") return Label::from_ranges({{'A', 'Z'}, {'a', 'z'}});
    if (name == "Alnum") return Label::from_ranges({{'0', '9'}, {'A', 'Z'}, {'a', 'z'}});
    if (name == "Space") return space_label();
    if (name == "XDigit") return Label::from_ranges({{'0', '9'}, {'A', 'F'}, {'a', 'f'}});
    if (name == "Punct") return Label::from_ranges({{'!', '/'}, {':', '@'}, {'[', '`'}, {'{', '~'}});
    if (name == "ASCII") return Label::range(0, 0x7F);
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(std::u32string_view src) : src_(src) {}

    RegexPtr parse() {
        if (peek() == '^') ++pos_;
        auto r = parse_alternation();
        if (pos_ < src_.size()) {
            if (src_[pos_] == ')') throw SyntaxError("unmatched ')'", pos_);
            throw SyntaxError("unexpected character", pos_);
        }
        return r;
    }

private:
    std::u32string_view src_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= src_.size(); }
    CodePoint peek(std::size_t ahead = 0) const {
        return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : CodePoint{0xFFFFFFFF};
    }
    CodePoint next() {
        if (at_end()) throw SyntaxError("unexpected end of pattern", pos_);
        return src_[pos_++];
    }
    void expect(CodePoint c, const char* what) {
        if (peek() != c) throw SyntaxError(what, pos_);
        ++pos_;
    }

    RegexPtr parse_alternation() {
        std::vector<RegexPtr> branches{parse_concat()};
        while (peek() == '|') {
            ++pos_;
            branches.push_back(parse_concat());
        }
        return RegexNode::alternation(std::move(branches));
    }

    RegexPtr parse_concat() {
        std::vector<RegexPtr> parts;
        while (!at_end() && peek() != '|' && peek() != ')') {
            if (peek() == '$' && pos_ + 1 == src_.size()) {
                ++pos_;
                break;
            }
            parts.push_back(parse_quantified());
        }
        return RegexNode::concat(std::move(parts));
    }

    std::optional<int> parse_number() {
        std::size_t start = pos_;
        long value = 0;
        while (peek() >= '0' && peek() <= '9') {
            value = value * 10 + static_cast<long>(next() - '0');
            if (value > 1'000'000) throw SyntaxError("repetition bound too large", start);
        }
        if (pos_ == start) return std::nullopt;
        return static_cast<int>(value);
    }

    // Tries to read `{m}`, `{m,}` or `{m,n}` at the cursor. On failure the
    // cursor is left untouched and the brace is treated as a literal.
    bool parse_braces(int& min, int& max) {
        std::size_t start = pos_;
        ++pos_;
        auto lo = parse_number();
        if (!lo) {
            pos_ = start;
            return false;
        }
        std::optional<int> hi = lo;
        if (peek() == ',') {
            ++pos_;
            hi = parse_number();
            if (!hi) hi = kUnbounded;
        }
        if (peek() != '}') {
            pos_ = start;
            return false;
        }
        ++pos_;
        min = *lo;
        max = *hi;
        if (max != kUnbounded && max < min) throw SyntaxError("repetition bounds out of order", start);
        if (min > kMaxRepeat || max > kMaxRepeat) {
            throw UnsupportedFeature("repetition bound exceeds " + std::to_string(kMaxRepeat), start);
        }
        return true;
    }

    RegexPtr parse_quantified() {
        auto atom = parse_atom();
        bool quantified = false;
        while (!at_end()) {
            CodePoint c = peek();
            std::size_t qpos = pos_;
            int min = 0, max = 0;
            if (c == '*') {
                ++pos_;
                atom = RegexNode::star(atom);
            } else if (c == '+') {
                ++pos_;
                atom = RegexNode::plus(atom);
            } else if (c == '?') {
                ++pos_;
                atom = RegexNode::optional(atom);
            } else if (c == '{' && parse_braces(min, max)) {
                atom = RegexNode::repeat(atom, min, max);
            } else {
                break;
            }
            if (quantified) throw SyntaxError("dangling quantifier", qpos);
            quantified = true;
            if (peek() == '?') throw UnsupportedFeature("lazy quantifier", pos_);
            if (peek() == '+') throw UnsupportedFeature("possessive quantifier", pos_);
        }
        return atom;
    }

    RegexPtr parse_atom() {
        std::size_t start = pos_;
        CodePoint c = next();
        switch (c) {
            case '(': return parse_group(start);
            case '[': return RegexNode::cls(parse_class(start));
            case '.': return RegexNode::dot();
            case '\\': return parse_escape(start);
            case '*':
            case '+':
            case '?': throw SyntaxError("nothing to repeat", start);
            case '^': throw UnsupportedFeature("'^' anchor not at pattern start", start);
            case '$': throw UnsupportedFeature("'$' anchor not at pattern end", start);
            default: return RegexNode::literal(c);
        }
    }

    RegexPtr parse_group(std::size_t start) {
        if (peek() == '?') {
            ++pos_;
            CodePoint k = next();
            if (k == ':') {
                // non-capturing group
            } else if (k == '=' || k == '!') {
                throw UnsupportedFeature("lookahead", start);
            } else if (k == '<' && (peek() == '=' || peek() == '!')) {
                throw UnsupportedFeature("lookbehind", start);
            } else if (k == '<') {
                while (!at_end() && peek() != '>') {
                    CodePoint n = next();
                    bool ok = (n >= 'a' && n <= 'z') || (n >= 'A' && n <= 'Z') || (n >= '0' && n <= '9');
                    if (!ok) throw SyntaxError("invalid group name", pos_ - 1);
                }
                expect('>', "unterminated group name");
            } else if (k == '>') {
                throw UnsupportedFeature("atomic group", start);
            } else {
                throw UnsupportedFeature("inline flags", start);
            }
        }
        auto inner = parse_alternation();
        if (peek() != ')') throw SyntaxError("unterminated group", start);
        ++pos_;
        return inner;
    }

    CodePoint parse_hex(std::size_t digits, std::size_t start) {
        CodePoint v = 0;
        for (std::size_t i = 0; i < digits; ++i) {
            CodePoint h = next();
            int d = hex_digit(h);
            if (d < 0) throw SyntaxError("invalid hex escape", start);
            v = v * 16 + static_cast<CodePoint>(d);
        }
        return v;
    }

    static int hex_digit(CodePoint h) {
        if (h >= '0' && h <= '9') return static_cast<int>(h - '0');
        if (h >= 'a' && h <= 'f') return static_cast<int>(h - 'a' + 10);
        if (h >= 'A' && h <= 'F') return static_cast<int>(h - 'A' + 10);
        return -1;
    }

    // Escape body after the backslash, as a set of characters.
    Label parse_escape_label(std::size_t start) {
        CodePoint c = next();
        switch (c) {
            case 'n': return Label::single('\n');
            case 'r': return Label::single('\r');
            case 't': return Label::single('\t');
            case 'f': return Label::single('\f');
            case 'v': return Label::single('\v');
            case 'a': return Label::single(0x07);
            case 'e': return Label::single(0x1B);
            case '0': {
                CodePoint v = 0;
                int n = 0;
                while (n < 3 && peek() >= '0' && peek() <= '7') {
                    v = v * 8 + (next() - '0');
                    ++n;
                }
                if (n == 0) throw SyntaxError("invalid octal escape", start);
                return Label::single(v);
            }
            case 'x': {
                CodePoint v = 0;
                if (peek() == '{') {
                    ++pos_;
                    int n = 0;
                    while (peek() != '}') {
                        int d = hex_digit(next());
                        if (d < 0 || ++n > 6) throw SyntaxError("invalid hex escape", start);
                        v = v * 16 + static_cast<CodePoint>(d);
                    }
                    ++pos_;
                    if (n == 0) throw SyntaxError("invalid hex escape", start);
                } else {
                    v = parse_hex(2, start);
                }
                if (v > kMaxCodePoint) throw SyntaxError("code point out of range", start);
                return Label::single(v);
            }
            case 'u': return Label::single(parse_hex(4, start));
            case 'd': return digit_label();
            case 'D': return digit_label().complement();
            case 'w': return word_label();
            case 'W': return word_label().complement();
            case 's': return space_label();
            case 'S': return space_label().complement();
            case 'p':
            case 'P': {
                std::string name;
                if (peek() == '{') {
                    ++pos_;
                    while (peek() != '}') name.push_back(static_cast<char>(next()));
                    ++pos_;
                } else {
                    name.push_back(static_cast<char>(next()));
                }
                if (name.rfind("Is", 0) == 0) name = name.substr(2);
                auto l = posix_class(name);
                if (!l) throw UnsupportedFeature("unknown property class \\p{" + name + "}", start);
                return c == 'p' ? *l : l->complement();
            }
            case 'b':
            case 'B':
            case 'A':
            case 'z':
            case 'Z':
            case 'G': throw UnsupportedFeature("boundary assertion", start);
            case 'k': throw UnsupportedFeature("backreference", start);
            default: break;
        }
        if (c >= '1' && c <= '9') throw UnsupportedFeature("backreference", start);
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) throw SyntaxError("unknown escape", start);
        return Label::single(c);
    }

    RegexPtr parse_escape(std::size_t start) {
        if (peek() == 'Q') {
            ++pos_;
            std::vector<RegexPtr> parts;
            while (!at_end() && !(peek() == '\\' && peek(1) == 'E')) parts.push_back(RegexNode::literal(next()));
            if (!at_end()) pos_ += 2;
            return RegexNode::concat(std::move(parts));
        }
        Label l = parse_escape_label(start);
        if (l.ranges().size() == 1 && l.ranges()[0].lo == l.ranges()[0].hi) return RegexNode::literal(l.min());
        return RegexNode::cls(std::move(l));
    }

    // Called after '['.
    Label parse_class(std::size_t start) {
        bool negated = false;
        if (peek() == '^') {
            ++pos_;
            negated = true;
        }
        Label acc;
        bool first = true;
        while (true) {
            if (at_end()) throw SyntaxError("unterminated character class", start);
            CodePoint c = peek();
            if (c == ']' && !first) {
                ++pos_;
                break;
            }
            first = false;
            if (c == '[') {
                ++pos_;
                acc = acc.unite(parse_class(pos_ - 1));
                continue;
            }
            if (c == '&' && peek(1) == '&') throw UnsupportedFeature("class intersection", pos_);
            std::size_t item_pos = pos_;
            Label lo = parse_class_atom();
            bool single = lo.ranges().size() == 1 && lo.ranges()[0].lo == lo.ranges()[0].hi;
            if (single && peek() == '-' && peek(1) != ']' && pos_ + 1 < src_.size()) {
                ++pos_;
                Label hi = parse_class_atom();
                bool hi_single = hi.ranges().size() == 1 && hi.ranges()[0].lo == hi.ranges()[0].hi;
                if (!hi_single) throw SyntaxError("invalid range in character class", item_pos);
                if (hi.min() < lo.min()) throw SyntaxError("character range out of order", item_pos);
                acc = acc.unite(Label::range(lo.min(), hi.min()));
            } else {
                acc = acc.unite(lo);
            }
        }
        return negated ? acc.complement() : acc;
    }

    Label parse_class_atom() {
        std::size_t start = pos_;
        CodePoint c = next();
        if (c == '\\') return parse_escape_label(start);
        return Label::single(c);
    }
};

std::string node_to_string(const RegexNode& n) {
    auto list = [](const char* name, const std::vector<RegexPtr>& cs) {
        std::string out = name;
        out += '(';
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i) out += ',';
            out += node_to_string(*cs[i]);
        }
        return out + ')';
    };
    switch (n.kind) {
        case RegexKind::Empty: return "Empty";
        case RegexKind::Literal: return "Literal " + n.label.to_string();
        case RegexKind::Dot: return "Dot";
        case RegexKind::Class: return "Class " + n.label.to_string();
        case RegexKind::Concat: return list("Concat", n.children);
        case RegexKind::Alternation: return list("Alt", n.children);
        case RegexKind::Star: return list("Star", n.children);
        case RegexKind::Plus: return list("Plus", n.children);
        case RegexKind::Optional: return list("Optional", n.children);
        case RegexKind::BoundedRepeat:
            return list("Repeat", n.children) + "{" + std::to_string(n.min) + "," +
                   (n.max == kUnbounded ? std::string{} : std::to_string(n.max)) + "}";
    }
    return "?";
}

}  // namespace

RegexPtr parse_regex(std::u32string_view src) { return Parser(src).parse(); }

RegexPtr parse_regex(std::string_view src) {
    std::u32string decoded;
    try {
        decoded = utf8::decode(src);
    } catch (const utf8::DecodeError& e) {
        throw SyntaxError(e.what(), e.offset);
    }
    return parse_regex(std::u32string_view(decoded));
}

std::string to_string(const RegexNode& node) { return node_to_string(node); }

}  // namespace redos
