#include <cctype>
#include <sstream>

#include "redos/strimp.hpp"
#include "redos/utf8.hpp"

namespace redos::strimp {

IntExprPtr IntExpr::constant(std::int64_t v) {
    auto e = std::make_shared<IntExpr>();
    e->kind = Kind::Const;
    e->value = v;
    return e;
}

IntExprPtr IntExpr::len(std::string var) {
    auto e = std::make_shared<IntExpr>();
    e->kind = Kind::Len;
    e->var = std::move(var);
    return e;
}

IntExprPtr IntExpr::add(IntExprPtr a, IntExprPtr b) {
    auto e = std::make_shared<IntExpr>();
    e->kind = Kind::Add;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

IntExprPtr IntExpr::sub(IntExprPtr a, IntExprPtr b) {
    auto e = std::make_shared<IntExpr>();
    e->kind = Kind::Sub;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ImpureRegexPtr ImpureRegex::pure_regex(RegexPtr ast, std::string source) {
    auto r = std::make_shared<ImpureRegex>();
    r->kind = Kind::Pure;
    r->pure = std::move(ast);
    r->source = std::move(source);
    return r;
}

ImpureRegexPtr ImpureRegex::var_ref(std::string name) {
    auto r = std::make_shared<ImpureRegex>();
    r->kind = Kind::VarRef;
    r->var = std::move(name);
    return r;
}

ImpureRegexPtr ImpureRegex::star(ImpureRegexPtr child) {
    auto r = std::make_shared<ImpureRegex>();
    r->kind = Kind::Star;
    r->children = {std::move(child)};
    return r;
}

ImpureRegexPtr ImpureRegex::alt(std::vector<ImpureRegexPtr> parts) {
    if (parts.size() == 1) return parts.front();
    auto r = std::make_shared<ImpureRegex>();
    r->kind = Kind::Alt;
    r->children = std::move(parts);
    return r;
}

ImpureRegexPtr ImpureRegex::concat(std::vector<ImpureRegexPtr> parts) {
    if (parts.size() == 1) return parts.front();
    auto r = std::make_shared<ImpureRegex>();
    r->kind = Kind::Concat;
    r->children = std::move(parts);
    return r;
}

namespace {

std::shared_ptr<Stmt> node(Stmt::Kind k) {
    auto s = std::make_shared<Stmt>();
    s->kind = k;
    return s;
}

}  // namespace

StmtPtr Stmt::skip() { return node(Kind::Skip); }

StmtPtr Stmt::assign(std::string x, std::string y) {
    auto s = node(Kind::Assign);
    s->var = std::move(x);
    s->source = std::move(y);
    return s;
}

StmtPtr Stmt::havoc(std::string x) {
    auto s = node(Kind::Havoc);
    s->var = std::move(x);
    return s;
}

StmtPtr Stmt::get_input(std::string x) {
    auto s = node(Kind::GetInput);
    s->var = std::move(x);
    return s;
}

StmtPtr Stmt::match(std::string x, std::string regex, std::string site) {
    auto s = node(Kind::Match);
    s->var = std::move(x);
    s->regex = std::move(regex);
    s->site = std::move(site);
    return s;
}

StmtPtr Stmt::assume_regex(std::string x, ImpureRegexPtr r) {
    auto s = node(Kind::AssumeRegex);
    s->var = std::move(x);
    s->re = std::move(r);
    return s;
}

StmtPtr Stmt::assume_len(std::string x, IntExprPtr bound) {
    auto s = node(Kind::AssumeLen);
    s->var = std::move(x);
    s->bound = std::move(bound);
    return s;
}

StmtPtr Stmt::seq(std::vector<StmtPtr> parts) {
    auto s = node(Kind::Seq);
    s->body = std::move(parts);
    return s;
}

StmtPtr Stmt::branch(std::vector<StmtPtr> then_part, std::vector<StmtPtr> else_part) {
    auto s = node(Kind::If);
    s->body = std::move(then_part);
    s->otherwise = std::move(else_part);
    return s;
}

StmtPtr Stmt::loop(std::vector<StmtPtr> body) {
    auto s = node(Kind::While);
    s->body = std::move(body);
    return s;
}

std::string FreshNames::make(const std::string& hint) {
    std::string base = hint;
    for (auto& c : base) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') c = '_';
    }
    std::string name = base;
    for (int i = 1; used_.count(name); ++i) name = base + "_" + std::to_string(i);
    used_.insert(name);
    return name;
}

// ---------------------------------------------------------------- desugaring

namespace {

ImpureRegexPtr sigma_star() {
    return ImpureRegex::pure_regex(RegexNode::star(RegexNode::cls(Label::any())), "[\\s\\S]*");
}

std::string escape_regex(std::u32string_view text) {
    std::string out;
    for (CodePoint c : text) {
        if (c < 0x80 && std::string_view("\\.[]{}()*+?|^$").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back('\\');
        }
        out += utf8::encode(std::u32string(1, c));
    }
    return out;
}

ImpureRegexPtr literal_regex(const std::string& text) {
    std::u32string decoded = utf8::decode(text);
    std::vector<RegexPtr> parts;
    for (CodePoint c : decoded) parts.push_back(RegexNode::literal(c));
    return ImpureRegex::pure_regex(RegexNode::concat(std::move(parts)), escape_regex(decoded));
}

struct Desugarer {
    const std::string& name;
    const std::vector<BuiltinArg>& args;
    FreshNames& fresh;
    SourceLoc loc;
    std::vector<StmtPtr> out;

    [[noreturn]] void fail(const std::string& what) const {
        throw ProgramSyntaxError("builtin " + name + ": " + what, loc);
    }

    void arity(std::size_t n) const {
        if (args.size() != n) fail("expected " + std::to_string(n) + " arguments");
    }

    std::string var(std::size_t i) const {
        if (args[i].kind != BuiltinArg::Kind::Var) fail("argument " + std::to_string(i + 1) + " must be a variable");
        return args[i].text;
    }

    std::int64_t integer(std::size_t i) const {
        if (args[i].kind != BuiltinArg::Kind::Int) fail("argument " + std::to_string(i + 1) + " must be an integer");
        return args[i].value;
    }

    CodePoint character(std::size_t i) const {
        if (args[i].kind != BuiltinArg::Kind::String) fail("argument " + std::to_string(i + 1) + " must be a string");
        auto d = utf8::decode(args[i].text);
        if (d.size() != 1) fail("argument " + std::to_string(i + 1) + " must be a single character");
        return d[0];
    }

    // Variables are used as-is; string constants are bound to a fresh
    // untainted variable, mirroring `s := ?; assume s in "..."`.
    std::string operand(std::size_t i) {
        if (args[i].kind == BuiltinArg::Kind::Var) return args[i].text;
        if (args[i].kind != BuiltinArg::Kind::String) fail("argument " + std::to_string(i + 1) + " must be a variable or string");
        std::string v = fresh.make("s_" + args[i].text);
        out.push_back(Stmt::havoc(v));
        out.push_back(Stmt::assume_regex(v, literal_regex(args[i].text)));
        return v;
    }

    void len_le(const std::string& a, const std::string& b) {
        out.push_back(Stmt::assume_len(a, IntExpr::len(b)));
    }

    void copy_or_havoc(const std::string& y, const std::string& x) {
        out.push_back(Stmt::branch({Stmt::assign(y, x)}, {Stmt::havoc(y)}));
    }

    StmtPtr run() {
        if (name == "contains" || name == "indexOf") {
            arity(2);
            std::string x = var(0);
            std::string s = operand(1);
            out.push_back(Stmt::assume_regex(x, ImpureRegex::concat({sigma_star(), ImpureRegex::var_ref(s), sigma_star()})));
            len_le(s, x);
        } else if (name == "replaceAll") {
            if (args.size() != 3 && args.size() != 4) fail("expected 3 or 4 arguments");
            std::string y = var(0), x = var(1);
            CodePoint a = character(2);
            copy_or_havoc(y, x);
            auto not_a = RegexNode::cls(Label::single(a).complement());
            out.push_back(Stmt::assume_regex(
                y, ImpureRegex::pure_regex(RegexNode::star(not_a), "[^" + escape_regex(std::u32string(1, a)) + "]*")));
            len_le(y, x);
        } else if (name == "substring") {
            arity(4);
            std::string y = var(0), x = var(1);
            std::int64_t c1 = integer(2), c2 = integer(3);
            copy_or_havoc(y, x);
            out.push_back(Stmt::assume_len(y, IntExpr::sub(IntExpr::constant(c2), IntExpr::constant(c1))));
        } else if (name == "length_le") {
            arity(2);
            out.push_back(Stmt::assume_len(var(0), IntExpr::constant(integer(1))));
        } else if (name == "split_count") {
            arity(3);
            std::string x = var(0);
            CodePoint a = character(1);
            std::int64_t c = integer(2);
            if (c < 0 || c > 4096) fail("split count out of range");
            std::string esc = escape_regex(std::u32string(1, a));
            auto not_a = [&] {
                return ImpureRegex::pure_regex(RegexNode::star(RegexNode::cls(Label::single(a).complement())),
                                               "[^" + esc + "]*");
            };
            auto block = ImpureRegex::concat(
                {not_a(), ImpureRegex::pure_regex(RegexNode::literal(a), esc), not_a()});
            std::vector<ImpureRegexPtr> blocks(static_cast<std::size_t>(c), block);
            if (blocks.empty()) {
                out.push_back(Stmt::assume_regex(x, ImpureRegex::pure_regex(RegexNode::empty(), "")));
            } else {
                out.push_back(Stmt::assume_regex(x, ImpureRegex::concat(std::move(blocks))));
            }
        } else if (name == "endsWith") {
            arity(2);
            std::string x = var(0);
            std::string y = operand(1);
            out.push_back(Stmt::assume_regex(x, ImpureRegex::concat({sigma_star(), ImpureRegex::var_ref(y)})));
            len_le(y, x);
        } else if (name == "startsWith") {
            arity(2);
            std::string x = var(0);
            std::string y = operand(1);
            out.push_back(Stmt::assume_regex(x, ImpureRegex::concat({ImpureRegex::var_ref(y), sigma_star()})));
            len_le(y, x);
        } else if (name == "equals") {
            arity(2);
            std::string x = var(0);
            std::string y = operand(1);
            out.push_back(Stmt::assume_regex(x, ImpureRegex::var_ref(y)));
            len_le(x, y);
            len_le(y, x);
        } else if (name == "matches") {
            arity(2);
            std::string x = var(0);
            if (args[1].kind != BuiltinArg::Kind::String) fail("argument 2 must be a regex string");
            try {
                out.push_back(Stmt::assume_regex(x, ImpureRegex::pure_regex(parse_regex(args[1].text), args[1].text)));
            } catch (const RegexError& e) {
                fail(e.what());
            }
        } else {
            throw UnknownBuiltin("unknown builtin '" + name + "'", loc);
        }
        return out.size() == 1 ? out.front() : Stmt::seq(std::move(out));
    }
};

}  // namespace

StmtPtr desugar_builtin(const std::string& name, const std::vector<BuiltinArg>& args, FreshNames& fresh,
                        SourceLoc loc) {
    Desugarer d{name, args, fresh, loc, {}};
    return d.run();
}

// ---------------------------------------------------------------- parsing

namespace {

struct Token {
    enum class Kind { Ident, Int, String, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    std::int64_t value = 0;
    SourceLoc loc;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            Token t;
            t.loc = {line_, col_};
            if (pos_ >= src_.size()) {
                out.push_back(t);
                return out;
            }
            char c = src_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                t.kind = Token::Kind::Ident;
                while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                    t.text.push_back(advance());
                }
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                t.kind = Token::Kind::Int;
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    t.text.push_back(advance());
                    if (t.text.size() > 15) throw ProgramSyntaxError("integer literal too large", t.loc);
                }
                t.value = std::stoll(t.text);
            } else if (c == '"') {
                t.kind = Token::Kind::String;
                advance();
                while (true) {
                    if (pos_ >= src_.size() || src_[pos_] == '\n') throw ProgramSyntaxError("unterminated string", t.loc);
                    char d = advance();
                    if (d == '"') break;
                    if (d == '\\' && pos_ < src_.size() && src_[pos_] == '"') {
                        t.text.push_back(advance());
                        continue;
                    }
                    t.text.push_back(d);
                }
            } else {
                t.kind = Token::Kind::Punct;
                std::string_view rest = src_.substr(pos_);
                if (rest.starts_with(":=") || rest.starts_with("<=")) {
                    t.text = std::string(rest.substr(0, 2));
                    advance();
                    advance();
                } else if (std::string_view("(){};,*|+-.^?").find(c) != std::string_view::npos) {
                    t.text = std::string(1, advance());
                } else {
                    throw ProgramSyntaxError(std::string("unexpected character '") + c + "'", t.loc);
                }
            }
            out.push_back(std::move(t));
        }
    }

private:
    std::string_view src_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;

    char advance() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
            ++col_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '#') {
                while (pos_ < src_.size() && src_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
};

class ProgramParser {
public:
    explicit ProgramParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    StmtPtr parse() {
        collect_names();
        auto stmts = parse_block_body(true);
        return Stmt::seq(std::move(stmts));
    }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    FreshNames fresh_;
    std::set<std::string> sites_;

    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(i_ + ahead, toks_.size() - 1)]; }
    const Token& take() {
        const Token& t = toks_[i_];
        if (i_ + 1 < toks_.size()) ++i_;
        return t;
    }
    bool is_punct(const char* p, std::size_t ahead = 0) const {
        return peek(ahead).kind == Token::Kind::Punct && peek(ahead).text == p;
    }
    bool is_word(const char* w) const { return peek().kind == Token::Kind::Ident && peek().text == w; }
    [[noreturn]] void fail(const std::string& what) const { throw ProgramSyntaxError(what, peek().loc); }
    void expect(const char* p) {
        if (!is_punct(p)) fail(std::string("expected '") + p + "'");
        take();
    }
    void expect_word(const char* w) {
        if (!is_word(w)) fail(std::string("expected '") + w + "'");
        take();
    }
    std::string ident() {
        if (peek().kind != Token::Kind::Ident) fail("expected identifier");
        return take().text;
    }
    std::string string_lit() {
        if (peek().kind != Token::Kind::String) fail("expected string literal");
        return take().text;
    }

    void collect_names() {
        for (const auto& t : toks_) {
            if (t.kind == Token::Kind::Ident) fresh_.reserve(t.text);
        }
    }

    std::vector<StmtPtr> parse_block_body(bool top) {
        std::vector<StmtPtr> out;
        while (true) {
            if (peek().kind == Token::Kind::End) {
                if (!top) fail("expected '}'");
                return out;
            }
            if (is_punct("}")) {
                if (top) fail("unexpected '}'");
                return out;
            }
            out.push_back(parse_stmt());
        }
    }

    std::vector<StmtPtr> parse_block() {
        expect("{");
        auto body = parse_block_body(false);
        expect("}");
        return body;
    }

    StmtPtr located(StmtPtr s, SourceLoc loc) {
        auto copy = std::make_shared<Stmt>(*s);
        copy->loc = loc;
        return copy;
    }

    StmtPtr parse_stmt() {
        SourceLoc loc = peek().loc;
        if (is_word("skip")) {
            take();
            expect(";");
            return located(Stmt::skip(), loc);
        }
        if (is_word("getInput")) {
            take();
            expect("(");
            std::string x = ident();
            expect(")");
            expect(";");
            return located(Stmt::get_input(x), loc);
        }
        if (is_word("match")) {
            take();
            expect("(");
            std::string x = ident();
            expect(",");
            std::string re = string_lit();
            std::string site = std::to_string(loc.line) + ":" + std::to_string(loc.column);
            if (is_punct(",")) {
                take();
                site = string_lit();
            }
            expect(")");
            expect(";");
            if (!sites_.insert(site).second) throw ProgramSyntaxError("duplicate match site '" + site + "'", loc);
            return located(Stmt::match(x, re, site), loc);
        }
        if (is_word("assume")) {
            take();
            if (is_word("len") && is_punct("(", 1)) {
                take();
                expect("(");
                std::string x = ident();
                expect(")");
                expect("<=");
                auto e = parse_int();
                expect(";");
                return located(Stmt::assume_len(x, e), loc);
            }
            std::string x = ident();
            expect_word("in");
            auto r = parse_regex_expr();
            expect(";");
            return located(Stmt::assume_regex(x, r), loc);
        }
        if (is_word("if")) {
            take();
            expect("*");
            auto then_part = parse_block();
            std::vector<StmtPtr> else_part;
            if (is_word("else")) {
                take();
                else_part = parse_block();
            }
            return located(Stmt::branch(std::move(then_part), std::move(else_part)), loc);
        }
        if (is_word("while")) {
            take();
            expect("*");
            return located(Stmt::loop(parse_block()), loc);
        }
        if (is_word("builtin")) {
            take();
            std::string name = ident();
            expect("(");
            std::vector<BuiltinArg> args;
            if (!is_punct(")")) {
                while (true) {
                    BuiltinArg a;
                    const Token& t = take();
                    if (t.kind == Token::Kind::Ident) {
                        a.kind = BuiltinArg::Kind::Var;
                        a.text = t.text;
                    } else if (t.kind == Token::Kind::String) {
                        a.kind = BuiltinArg::Kind::String;
                        a.text = t.text;
                    } else if (t.kind == Token::Kind::Int) {
                        a.kind = BuiltinArg::Kind::Int;
                        a.value = t.value;
                    } else {
                        throw ProgramSyntaxError("expected builtin argument", t.loc);
                    }
                    args.push_back(std::move(a));
                    if (!is_punct(",")) break;
                    take();
                }
            }
            expect(")");
            expect(";");
            return located(desugar_builtin(name, args, fresh_, loc), loc);
        }
        if (peek().kind == Token::Kind::Ident && is_punct(":=", 1)) {
            std::string x = take().text;
            take();
            if (is_punct("?")) {
                take();
                expect(";");
                return located(Stmt::havoc(x), loc);
            }
            std::string y = ident();
            expect(";");
            return located(Stmt::assign(x, y), loc);
        }
        fail("expected statement");
    }

    // regex := term (('|' | '+') term)*
    ImpureRegexPtr parse_regex_expr() {
        std::vector<ImpureRegexPtr> parts{parse_regex_term()};
        while (is_punct("|") || is_punct("+")) {
            take();
            parts.push_back(parse_regex_term());
        }
        return ImpureRegex::alt(std::move(parts));
    }

    bool starts_factor() const {
        return peek().kind == Token::Kind::String || peek().kind == Token::Kind::Ident || is_punct("(");
    }

    ImpureRegexPtr parse_regex_term() {
        std::vector<ImpureRegexPtr> parts{parse_regex_factor()};
        while (true) {
            if (is_punct(".")) {
                take();
                parts.push_back(parse_regex_factor());
            } else if (starts_factor()) {
                parts.push_back(parse_regex_factor());
            } else {
                break;
            }
        }
        return ImpureRegex::concat(std::move(parts));
    }

    ImpureRegexPtr parse_regex_factor() {
        ImpureRegexPtr r;
        SourceLoc loc = peek().loc;
        if (peek().kind == Token::Kind::String) {
            std::string src = take().text;
            try {
                r = ImpureRegex::pure_regex(parse_regex(src), src);
            } catch (const RegexError& e) {
                throw ProgramSyntaxError(std::string("invalid regex: ") + e.what(), loc);
            }
        } else if (peek().kind == Token::Kind::Ident) {
            r = ImpureRegex::var_ref(take().text);
        } else if (is_punct("(")) {
            take();
            r = parse_regex_expr();
            expect(")");
        } else {
            fail("expected regex");
        }
        while (true) {
            if (is_punct("*")) {
                take();
                r = ImpureRegex::star(r);
            } else if (is_punct("^")) {
                take();
                if (peek().kind != Token::Kind::Int) fail("expected repetition count");
                std::int64_t n = take().value;
                if (n > 4096) fail("repetition count too large");
                if (n == 0) {
                    r = ImpureRegex::pure_regex(RegexNode::empty(), "");
                } else {
                    r = ImpureRegex::concat(std::vector<ImpureRegexPtr>(static_cast<std::size_t>(n), r));
                }
            } else {
                break;
            }
        }
        return r;
    }

    // int := atom (('+' | '-') atom)*
    IntExprPtr parse_int() {
        IntExprPtr e = parse_int_atom();
        while (is_punct("+") || is_punct("-")) {
            bool plus = take().text == "+";
            auto rhs = parse_int_atom();
            e = plus ? IntExpr::add(e, rhs) : IntExpr::sub(e, rhs);
        }
        return e;
    }

    IntExprPtr parse_int_atom() {
        if (peek().kind == Token::Kind::Int) return IntExpr::constant(take().value);
        if (is_word("len")) {
            take();
            expect("(");
            std::string x = ident();
            expect(")");
            return IntExpr::len(x);
        }
        if (is_punct("(")) {
            take();
            auto e = parse_int();
            expect(")");
            return e;
        }
        fail("expected integer expression");
    }
};

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '\\';
        out += c;
    }
    return out + "\"";
}

void print(const Stmt& s, std::ostringstream& os, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    auto block = [&](const std::vector<StmtPtr>& body) {
        os << "{\n";
        for (const auto& c : body) print(*c, os, indent + 1);
        os << pad << "}";
    };
    switch (s.kind) {
        case Stmt::Kind::Skip: os << pad << "skip;\n"; break;
        case Stmt::Kind::Assign: os << pad << s.var << " := " << s.source << ";\n"; break;
        case Stmt::Kind::Havoc: os << pad << s.var << " := ?;\n"; break;
        case Stmt::Kind::GetInput: os << pad << "getInput(" << s.var << ");\n"; break;
        case Stmt::Kind::Match:
            os << pad << "match(" << s.var << ", " << quote(s.regex) << ", " << quote(s.site) << ");\n";
            break;
        case Stmt::Kind::AssumeRegex: os << pad << "assume " << s.var << " in " << to_string(*s.re) << ";\n"; break;
        case Stmt::Kind::AssumeLen: os << pad << "assume len(" << s.var << ") <= " << to_string(*s.bound) << ";\n"; break;
        case Stmt::Kind::Seq:
            for (const auto& c : s.body) print(*c, os, indent);
            break;
        case Stmt::Kind::If:
            os << pad << "if * ";
            block(s.body);
            os << " else ";
            block(s.otherwise);
            os << "\n";
            break;
        case Stmt::Kind::While:
            os << pad << "while * ";
            block(s.body);
            os << "\n";
            break;
    }
}

void collect_matches(const Stmt& s, std::vector<std::string>& out) {
    if (s.kind == Stmt::Kind::Match) out.push_back(s.regex);
    for (const auto& c : s.body) collect_matches(*c, out);
    for (const auto& c : s.otherwise) collect_matches(*c, out);
}

}  // namespace

StmtPtr parse_program(std::string_view src) {
    try {
        utf8::decode(src);
    } catch (const utf8::DecodeError& e) {
        throw ProgramSyntaxError("invalid UTF-8 at byte " + std::to_string(e.offset), {0, 0});
    }
    return ProgramParser(Lexer(src).run()).parse();
}

std::string to_string(const IntExpr& e) {
    switch (e.kind) {
        case IntExpr::Kind::Const: return std::to_string(e.value);
        case IntExpr::Kind::Len: return "len(" + e.var + ")";
        case IntExpr::Kind::Add: return "(" + to_string(*e.lhs) + " + " + to_string(*e.rhs) + ")";
        case IntExpr::Kind::Sub: return "(" + to_string(*e.lhs) + " - " + to_string(*e.rhs) + ")";
    }
    return "?";
}

std::string to_string(const ImpureRegex& r) {
    auto join = [&](const char* sep) {
        std::string out = "(";
        for (std::size_t i = 0; i < r.children.size(); ++i) {
            if (i) out += sep;
            out += to_string(*r.children[i]);
        }
        return out + ")";
    };
    switch (r.kind) {
        case ImpureRegex::Kind::Pure: return quote(r.source);
        case ImpureRegex::Kind::VarRef: return r.var;
        case ImpureRegex::Kind::Star: return to_string(*r.children.front()) + "*";
        case ImpureRegex::Kind::Alt: return join(" | ");
        case ImpureRegex::Kind::Concat: return join(" . ");
    }
    return "?";
}

std::string to_string(const Stmt& s) {
    std::ostringstream os;
    print(s, os, 0);
    return os.str();
}

std::vector<std::string> match_regexes(const Stmt& s) {
    std::vector<std::string> out;
    collect_matches(s, out);
    return out;
}

}  // namespace redos::strimp
