#include "redos/strimp.hpp"

namespace redos::strimp {

namespace {

class Executor {
public:
    Executor(const std::vector<std::u32string>& inputs, const std::vector<bool>& choices,
             const std::vector<std::u32string>& consts)
        : inputs_(inputs), choices_(choices), consts_(consts) {}

    ConcreteResult result;

    void exec(const Stmt& s) {
        switch (s.kind) {
            case Stmt::Kind::Skip: return;
            case Stmt::Kind::GetInput:
                result.env[s.var] = pop(inputs_, in_pos_, "inputs");
                result.taint.insert(s.var);
                return;
            case Stmt::Kind::Havoc:
                result.env[s.var] = pop(consts_, const_pos_, "consts");
                result.taint.erase(s.var);
                return;
            case Stmt::Kind::Assign: {
                std::u32string v = value(s.source);
                bool tainted = result.taint.count(s.source) > 0;
                result.env[s.var] = std::move(v);
                if (tainted) {
                    result.taint.insert(s.var);
                } else {
                    result.taint.erase(s.var);
                }
                return;
            }
            case Stmt::Kind::AssumeRegex: {
                const std::u32string& v = value(s.var);
                if (!accepts(language(*s.re), v)) throw Infeasible("assume " + s.var + " in ... violated");
                return;
            }
            case Stmt::Kind::AssumeLen: {
                auto n = static_cast<std::int64_t>(value(s.var).size());
                if (n > eval(*s.bound)) throw Infeasible("assume len(" + s.var + ") violated");
                return;
            }
            case Stmt::Kind::Match:
                result.matches.push_back({s.site, s.var, s.regex, value(s.var), result.taint.count(s.var) > 0});
                return;
            case Stmt::Kind::Seq:
                for (const auto& c : s.body) exec(*c);
                return;
            case Stmt::Kind::If: {
                const auto& branch = choose() ? s.body : s.otherwise;
                for (const auto& c : branch) exec(*c);
                return;
            }
            case Stmt::Kind::While:
                while (choose()) {
                    for (const auto& c : s.body) exec(*c);
                }
                return;
        }
    }

private:
    const std::vector<std::u32string>& inputs_;
    const std::vector<bool>& choices_;
    const std::vector<std::u32string>& consts_;
    std::size_t in_pos_ = 0, choice_pos_ = 0, const_pos_ = 0;

    static std::u32string pop(const std::vector<std::u32string>& v, std::size_t& pos, const char* what) {
        if (pos >= v.size()) throw Infeasible(std::string(what) + " stream exhausted");
        return v[pos++];
    }

    bool choose() {
        if (choice_pos_ >= choices_.size()) throw Infeasible("choices stream exhausted");
        return choices_[choice_pos_++];
    }

    const std::u32string& value(const std::string& x) const {
        auto it = result.env.find(x);
        if (it == result.env.end()) throw UnboundVariable(x);
        return it->second;
    }

    std::int64_t eval(const IntExpr& e) const {
        switch (e.kind) {
            case IntExpr::Kind::Const: return e.value;
            case IntExpr::Kind::Len: return static_cast<std::int64_t>(value(e.var).size());
            case IntExpr::Kind::Add: return eval(*e.lhs) + eval(*e.rhs);
            case IntExpr::Kind::Sub: return eval(*e.lhs) - eval(*e.rhs);
        }
        return 0;
    }

    Nfa language(const ImpureRegex& r) const {
        switch (r.kind) {
            case ImpureRegex::Kind::Pure: return compile(*r.pure);
            case ImpureRegex::Kind::VarRef: return Nfa::literal(value(r.var));
            case ImpureRegex::Kind::Star: return star(language(*r.children.front()));
            case ImpureRegex::Kind::Alt: {
                Nfa acc = Nfa::empty_language();
                for (const auto& c : r.children) acc = unite(acc, language(*c));
                return acc;
            }
            case ImpureRegex::Kind::Concat: {
                Nfa acc = Nfa::epsilon();
                for (const auto& c : r.children) acc = concat(acc, language(*c));
                return acc;
            }
        }
        return Nfa::universal();
    }
};

}  // namespace

ConcreteResult concrete_exec(const Stmt& prog, const std::vector<std::u32string>& inputs,
                             const std::vector<bool>& choices, const std::vector<std::u32string>& consts) {
    Executor ex(inputs, choices, consts);
    ex.exec(prog);
    return std::move(ex.result);
}

}  // namespace redos::strimp
