#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "redos/automata.hpp"
#include "redos/dynamic.hpp"
#include "redos/regex.hpp"

namespace redos::strimp {

// ---------------------------------------------------------------- syntax

struct SourceLoc {
    std::size_t line = 0;
    std::size_t column = 0;
};

struct ProgramSyntaxError : std::runtime_error {
    SourceLoc loc;
    ProgramSyntaxError(const std::string& what, SourceLoc l)
        : std::runtime_error(std::to_string(l.line) + ":" + std::to_string(l.column) + ": " + what), loc(l) {}
};

struct UnknownBuiltin : ProgramSyntaxError {
    using ProgramSyntaxError::ProgramSyntaxError;
};

struct UnboundVariable : std::runtime_error {
    std::string name;
    explicit UnboundVariable(const std::string& n) : std::runtime_error("unbound variable '" + n + "'"), name(n) {}
};

struct IntExpr;
using IntExprPtr = std::shared_ptr<const IntExpr>;

struct IntExpr {
    enum class Kind { Const, Len, Add, Sub };
    Kind kind = Kind::Const;
    std::int64_t value = 0;
    std::string var;
    IntExprPtr lhs, rhs;

    static IntExprPtr constant(std::int64_t v);
    static IntExprPtr len(std::string var);
    static IntExprPtr add(IntExprPtr a, IntExprPtr b);
    static IntExprPtr sub(IntExprPtr a, IntExprPtr b);
};

struct ImpureRegex;
using ImpureRegexPtr = std::shared_ptr<const ImpureRegex>;

struct ImpureRegex {
    enum class Kind { Pure, VarRef, Star, Alt, Concat };
    Kind kind = Kind::Pure;
    RegexPtr pure;
    std::string source;  // display text of a Pure regex
    std::string var;
    std::vector<ImpureRegexPtr> children;

    static ImpureRegexPtr pure_regex(RegexPtr ast, std::string source);
    static ImpureRegexPtr var_ref(std::string name);
    static ImpureRegexPtr star(ImpureRegexPtr child);
    static ImpureRegexPtr alt(std::vector<ImpureRegexPtr> parts);
    static ImpureRegexPtr concat(std::vector<ImpureRegexPtr> parts);
};

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct Stmt {
    enum class Kind { Skip, Assign, Havoc, GetInput, Match, AssumeRegex, AssumeLen, Seq, If, While };
    Kind kind = Kind::Skip;
    std::string var;      // target / subject variable
    std::string source;   // Assign: right-hand variable
    std::string regex;    // Match: regex source text
    std::string site;     // Match: site id
    ImpureRegexPtr re;    // AssumeRegex
    IntExprPtr bound;     // AssumeLen
    std::vector<StmtPtr> body;      // Seq, While (as a Seq), If-then
    std::vector<StmtPtr> otherwise; // If-else
    SourceLoc loc;

    static StmtPtr skip();
    static StmtPtr assign(std::string x, std::string y);
    static StmtPtr havoc(std::string x);
    static StmtPtr get_input(std::string x);
    static StmtPtr match(std::string x, std::string regex, std::string site);
    static StmtPtr assume_regex(std::string x, ImpureRegexPtr r);
    static StmtPtr assume_len(std::string x, IntExprPtr bound);
    static StmtPtr seq(std::vector<StmtPtr> parts);
    static StmtPtr branch(std::vector<StmtPtr> then_part, std::vector<StmtPtr> else_part);
    static StmtPtr loop(std::vector<StmtPtr> body);
};

/// Argument of a builtin sugar statement.
struct BuiltinArg {
    enum class Kind { Var, String, Int };
    Kind kind = Kind::Var;
    std::string text;
    std::int64_t value = 0;
};

/// Supplies fresh variable names for constants introduced by desugaring.
class FreshNames {
public:
    std::string make(const std::string& hint);
    void reserve(const std::string& name) { used_.insert(name); }

private:
    std::set<std::string> used_;
};

/// Expands one builtin (contains, indexOf, replaceAll, substring, length_le,
/// split_count, endsWith, equals, matches, startsWith). Throws UnknownBuiltin
/// or ProgramSyntaxError for malformed argument lists.
StmtPtr desugar_builtin(const std::string& name, const std::vector<BuiltinArg>& args, FreshNames& fresh,
                        SourceLoc loc = {});

StmtPtr parse_program(std::string_view src);

/// Renders a program back to the concrete syntax (builtins expanded).
std::string to_string(const Stmt& s);
std::string to_string(const ImpureRegex& r);
std::string to_string(const IntExpr& e);

/// Regex sources of every match statement, in program order.
std::vector<std::string> match_regexes(const Stmt& s);

// ---------------------------------------------------------------- domain

inline constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

/// Closed integer interval with infinite bounds; empty when hi < lo.
struct Interval {
    std::int64_t lo = 0;
    std::int64_t hi = kInf;

    static Interval top() { return {0, kInf}; }
    static Interval point(std::int64_t v) { return {v, v}; }
    static Interval bottom() { return {1, 0}; }

    bool empty() const { return hi < lo; }
    bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
    bool includes(const Interval& o) const { return o.empty() || (lo <= o.lo && o.hi <= hi); }
    Interval join(const Interval& o) const;
    Interval add(const Interval& o) const;
    Interval sub(const Interval& o) const;

    std::string to_string() const;
    bool operator==(const Interval&) const = default;
};

struct StringAbs {
    Interval length = Interval::top();
    Nfa content = Nfa::universal();

    static StringAbs top() { return {}; }
};

struct AnalysisState {
    std::set<std::string> taint;
    std::map<std::string, StringAbs> strings;
};

/// Pointwise join; a variable missing on one side counts as top there.
std::map<std::string, StringAbs> join(const std::map<std::string, StringAbs>& a,
                                      const std::map<std::string, StringAbs>& b);

Nfa eval_impure_regex(const ImpureRegex& r, const std::map<std::string, StringAbs>& lam,
                      const CompileOptions& opts = {});
Interval eval_int(const IntExpr& e, const std::map<std::string, StringAbs>& lam);

struct AttackInfo {
    std::optional<std::uint64_t> min_bound;  // absent = infinity
    Nfa attack = Nfa::empty_language();
};

/// Keyed by regex source text.
using AttackEnv = std::map<std::string, AttackInfo>;

struct Warning {
    std::string site;
    std::string variable;
    std::string regex;
    std::vector<std::string> reasons;  // one per failed disjunct of the safety check
    std::optional<std::u32string> example;
};

struct AnalyzeOptions {
    std::size_t complement_budget = kDefaultComplementBudget;
    std::size_t widen_after = 3;
    std::size_t max_loop_passes = 64;
};

struct AnalysisResult {
    std::vector<Warning> warnings;
    AnalysisState final;
    std::size_t max_loop_passes = 0;  // largest number of passes any loop needed
};

struct MissingAttackInfo : std::runtime_error {
    explicit MissingAttackInfo(const std::string& regex)
        : std::runtime_error("no attack information for regex \"" + regex + "\"") {}
};

AnalysisResult analyze(const Stmt& prog, const AttackEnv& psi, const AnalyzeOptions& opts = {});

// ---------------------------------------------------------------- pipeline

struct PipelineOptions {
    bool dynamic = true;
    std::uint64_t threshold = kDefaultThreshold;
    AnalysisOptions analysis;
};

struct RegexSummary {
    std::string regex;
    Verdict verdict = Verdict::Linear;
    std::string error;
    std::vector<DynamicVerdict> dynamic;
    AttackInfo info;
};

/// classify + dynamic confirmation for one match-site regex.
/// Linear and unconfirmed regexes get (infinity, empty). Regexes the tool
/// cannot analyze get (0, universal) so that tainted uses are reported.
RegexSummary summarize_regex(const std::string& regex, const PipelineOptions& opts = {});
AttackEnv build_attack_env(const Stmt& prog, const PipelineOptions& opts = {},
                           std::vector<RegexSummary>* summaries = nullptr);

// ---------------------------------------------------------------- concrete

struct Infeasible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MatchEvent {
    std::string site;
    std::string variable;
    std::string regex;
    std::u32string value;
    bool tainted = false;
};

struct ConcreteResult {
    std::map<std::string, std::u32string> env;
    std::set<std::string> taint;
    std::vector<MatchEvent> matches;
};

/// Runs one path: getInput pops `inputs`, `?` pops `consts`, each `*` pops
/// `choices` (true = then-branch / one more iteration). Violated assumptions
/// and exhausted streams throw Infeasible.
ConcreteResult concrete_exec(const Stmt& prog, const std::vector<std::u32string>& inputs,
                             const std::vector<bool>& choices, const std::vector<std::u32string>& consts);

}  // namespace redos::strimp
