#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "rqa/expression.hpp"

namespace rqa {

/// The two reduction systems: rules at q = 1, and the q-deformed rules.
enum class System { One, Q };

std::string to_string(System s);

/// Which double descent a rewrite step consumes. Leftmost is canonical;
/// the others exist to exercise uniqueness of normal forms.
struct Strategy {
    enum class Kind { Leftmost, Rightmost, Random };
    Kind kind = Kind::Leftmost;
    std::uint64_t seed = 0;

    static Strategy leftmost() { return {Kind::Leftmost, 0}; }
    static Strategy rightmost() { return {Kind::Rightmost, 0}; }
    static Strategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

std::string to_string(const Strategy& s);

/// Rule shape applied by a rewrite: distinct bottom letters give three
/// terms, equal bottom letters give one.
enum class RuleKind { ThreeTerm, OneTerm };

class NotADoubleDescent : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class PreconditionViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an intermediate expression exceeds the configured term cap.
class ResourceExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised if a rewrite fails to decrease inv+. Never expected; signals a
/// corrupted rule table.
class TerminationViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Global accounting of the inv+ decrease checks made inside rewrite_at.
struct MeasureCounters {
    std::atomic<std::uint64_t> checks{0};
    std::atomic<std::uint64_t> violations{0};
};
MeasureCounters& measure_counters();

/// Right-hand side of the rule for a length-2 biword xy/ab with x > y, a >= b.
Expression rule(const Biword& pair, System sys);

/// Replaces columns i, i+1 (1-based i) of b by the rule output, in context.
Expression rewrite_at(const Biword& b, std::size_t position, System sys);

struct TraceEvent {
    Biword biword;
    std::size_t position = 0;
    RuleKind rule = RuleKind::OneTerm;
    Expression output;
};

struct ReductionReport {
    Expression input;
    Expression normal_form;
    std::uint64_t rewrite_steps = 0;
    std::size_t max_intermediate_terms = 0;
    std::optional<std::vector<TraceEvent>> trace;
};

struct ReduceOptions {
    std::size_t max_terms = 10'000'000;
    bool record_trace = false;
};

/// Normalizes expressions under one reduction system.
///
/// Work proceeds on a merged worklist ordered by decreasing inv+: every
/// rewrite produces biwords of strictly smaller inv+, so by the time a biword
/// is rewritten all of its contributions have been collected and it is
/// rewritten at most once. Leftmost normal forms of single biwords are
/// memoized; the cache is safe to share between threads.
class Reducer {
public:
    explicit Reducer(System sys, ReduceOptions options = {}) : sys_(sys), options_(options) {}

    System system() const noexcept { return sys_; }

    ReductionReport reduce(const Expression& e, Strategy strategy = Strategy::leftmost()) const;
    Expression reduce_biword(const Biword& b, Strategy strategy = Strategy::leftmost()) const;
    bool in_ideal(const Expression& e) const;

    std::size_t cache_size() const;

private:
    System sys_;
    ReduceOptions options_;
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<Biword, Expression> cache_;
};

ReductionReport reduce(const Expression& e, System sys, Strategy strategy = Strategy::leftmost());
Expression reduce_biword(const Biword& b, System sys, Strategy strategy = Strategy::leftmost());
bool in_ideal(const Expression& e, System sys);

/// Overlap xyz/abc with x > y > z, a >= b >= c: rewriting first at position 1
/// or first at position 2 must lead to the same normal form.
bool check_ambiguity(Letter x, Letter y, Letter z, Letter a, Letter b, Letter c, System sys);

struct ConfluenceResult {
    bool ok = true;
    std::size_t trials = 0;
    std::vector<Biword> counterexamples;
};

/// Random biwords (length uniform in [0, max_len], letters in 1..r) are
/// normalized Leftmost and with a random position choice; all must agree.
ConfluenceResult check_confluence_fuzz(int r, std::size_t max_len, std::size_t trials,
                                       std::uint64_t seed, System sys);

}  // namespace rqa
