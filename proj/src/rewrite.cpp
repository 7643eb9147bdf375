#include "rqa/rewrite.hpp"

#include <map>
#include <random>
#include <set>
#include <unordered_map>

namespace rqa {

std::string to_string(System s) { return s == System::One ? "S" : "Sq"; }

std::string to_string(const Strategy& s) {
    switch (s.kind) {
        case Strategy::Kind::Leftmost: return "leftmost";
        case Strategy::Kind::Rightmost: return "rightmost";
        case Strategy::Kind::Random: return "random:" + std::to_string(s.seed);
    }
    return "?";
}

MeasureCounters& measure_counters() {
    static MeasureCounters counters;
    return counters;
}

Expression rule(const Biword& pair, System sys) {
    if (pair.length() != 2 || first_double_descent(pair) != 1) {
        throw NotADoubleDescent("rule applies only to length-2 biwords xy/ab with x > y, a >= b");
    }
    const Letter x = pair.top()[0], y = pair.top()[1];
    const Letter a = pair.bottom()[0], b = pair.bottom()[1];
    const LaurentCoeff q = sys == System::Q ? LaurentCoeff::q_power(1) : LaurentCoeff(1);
    const LaurentCoeff q_inv = sys == System::Q ? LaurentCoeff::q_power(-1) : LaurentCoeff(1);

    Expression out;
    if (a == b) {
        out.add_term(Biword({y, x}, {a, a}), q);
    } else {
        out.add_term(Biword({y, x}, {b, a}), 1);
        out.add_term(Biword({y, x}, {a, b}), q);
        out.add_term(Biword({x, y}, {b, a}), -q_inv);
    }
    return out;
}

Expression rewrite_at(const Biword& b, std::size_t position, System sys) {
    if (position == 0 || position >= b.length()) {
        throw NotADoubleDescent("position " + std::to_string(position) + " out of range");
    }
    const std::size_t i = position - 1;
    const Biword pair = b.slice(i, 2);
    if (first_double_descent(pair) != 1) {
        throw NotADoubleDescent("no double descent at position " + std::to_string(position));
    }
    const Biword prefix = b.slice(0, i);
    const Biword suffix = b.slice(i + 2, b.length() - i - 2);
    const long measure = inv_plus(b);

    auto& counters = measure_counters();
    Expression out;
    for (const auto& [middle, c] : rule(pair, sys)) {
        Biword next = concat(prefix, middle, suffix);
        counters.checks.fetch_add(1, std::memory_order_relaxed);
        if (inv_plus(next) >= measure) {
            counters.violations.fetch_add(1, std::memory_order_relaxed);
            throw TerminationViolation("inv+ did not decrease rewriting position " +
                                       std::to_string(position));
        }
        out.add_term(next, c);
    }
    return out;
}

namespace {

std::size_t choose_position(const Biword& b, const Strategy& strategy, std::mt19937_64& rng) {
    switch (strategy.kind) {
        case Strategy::Kind::Leftmost: return first_double_descent(b);
        case Strategy::Kind::Rightmost: return double_descents(b).back();
        case Strategy::Kind::Random: {
            auto positions = double_descents(b);
            std::uniform_int_distribution<std::size_t> pick(0, positions.size() - 1);
            return positions[pick(rng)];
        }
    }
    return 0;
}

// Pending reducible terms bucketed by inv+; buckets drain from the top.
class Worklist {
public:
    void add(const Biword& b, const LaurentCoeff& c) {
        auto [it, inserted] = pending_.try_emplace(b, c);
        if (inserted) {
            buckets_[inv_plus(b)].insert(b);
        } else {
            it->second += c;  // zero entries are skipped at pop time
        }
    }

    bool empty() const { return buckets_.empty(); }
    std::size_t size() const { return pending_.size(); }

    std::pair<Biword, LaurentCoeff> pop() {
        auto top = std::prev(buckets_.end());
        auto node = top->second.extract(top->second.begin());
        if (top->second.empty()) buckets_.erase(top);
        auto it = pending_.find(node.value());
        std::pair<Biword, LaurentCoeff> out{std::move(node.value()), std::move(it->second)};
        pending_.erase(it);
        return out;
    }

private:
    std::unordered_map<Biword, LaurentCoeff> pending_;
    std::map<long, std::set<Biword>> buckets_;
};

}  // namespace

ReductionReport Reducer::reduce(const Expression& e, Strategy strategy) const {
    ReductionReport report;
    report.input = e;
    if (options_.record_trace) report.trace.emplace();

    std::mt19937_64 rng(strategy.seed);
    const bool use_cache = strategy.kind == Strategy::Kind::Leftmost && !options_.record_trace;

    Expression& result = report.normal_form;
    Worklist work;
    auto route = [&](const Biword& b, const LaurentCoeff& c) {
        if (is_irreducible(b)) {
            result.add_term(b, c);
        } else {
            work.add(b, c);
        }
    };
    for (const auto& [b, c] : e) route(b, c);

    report.max_intermediate_terms = work.size() + result.size();
    while (!work.empty()) {
        auto [b, c] = work.pop();
        if (c.is_zero()) continue;

        if (use_cache) {
            std::unique_lock lock(cache_mutex_);
            if (auto hit = cache_.find(b); hit != cache_.end()) {
                Expression nf = hit->second;
                lock.unlock();
                for (const auto& [nb, nc] : nf) result.add_term(nb, c * nc);
                continue;
            }
        }

        const std::size_t position = choose_position(b, strategy, rng);
        Expression out = rewrite_at(b, position, sys_);
        ++report.rewrite_steps;
        if (report.trace) {
            RuleKind kind = b.bottom()[position - 1] == b.bottom()[position] ? RuleKind::OneTerm
                                                                            : RuleKind::ThreeTerm;
            report.trace->push_back({b, position, kind, scale(c, out)});
        }
        for (const auto& [nb, nc] : out) route(nb, c * nc);

        const std::size_t live = work.size() + result.size();
        report.max_intermediate_terms = std::max(report.max_intermediate_terms, live);
        if (live > options_.max_terms) {
            throw ResourceExhausted("intermediate expression exceeded " +
                                    std::to_string(options_.max_terms) + " terms");
        }
    }
    return report;
}

Expression Reducer::reduce_biword(const Biword& b, Strategy strategy) const {
    if (is_irreducible(b)) return Expression(b);
    if (strategy.kind != Strategy::Kind::Leftmost) return reduce(Expression(b), strategy).normal_form;
    {
        std::lock_guard lock(cache_mutex_);
        if (auto hit = cache_.find(b); hit != cache_.end()) return hit->second;
    }
    Expression nf = reduce(Expression(b), strategy).normal_form;
    std::lock_guard lock(cache_mutex_);
    // concurrent callers compute identical values; first insert wins
    return cache_.try_emplace(b, std::move(nf)).first->second;
}

bool Reducer::in_ideal(const Expression& e) const { return reduce(e).normal_form.is_zero(); }

std::size_t Reducer::cache_size() const {
    std::lock_guard lock(cache_mutex_);
    return cache_.size();
}

ReductionReport reduce(const Expression& e, System sys, Strategy strategy) {
    return Reducer(sys).reduce(e, strategy);
}

Expression reduce_biword(const Biword& b, System sys, Strategy strategy) {
    return Reducer(sys).reduce_biword(b, strategy);
}

bool in_ideal(const Expression& e, System sys) { return Reducer(sys).in_ideal(e); }

bool check_ambiguity(Letter x, Letter y, Letter z, Letter a, Letter b, Letter c, System sys) {
    if (!(x > y && y > z && a >= b && b >= c)) {
        throw PreconditionViolation("ambiguity requires x > y > z and a >= b >= c");
    }
    const Biword overlap({x, y, z}, {a, b, c});
    Reducer reducer(sys);
    const Expression left = reducer.reduce(rewrite_at(overlap, 1, sys)).normal_form;
    const Expression right = reducer.reduce(rewrite_at(overlap, 2, sys)).normal_form;
    return left == right;
}

ConfluenceResult check_confluence_fuzz(int r, std::size_t max_len, std::size_t trials,
                                       std::uint64_t seed, System sys) {
    if (r < 1) throw PreconditionViolation("alphabet size must be at least 1");
    ConfluenceResult result;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> length_dist(0, max_len);
    std::uniform_int_distribution<int> letter_dist(1, r);
    Reducer reducer(sys);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::size_t n = length_dist(rng);
        std::vector<Letter> top(n), bottom(n);
        for (auto& x : top) x = static_cast<Letter>(letter_dist(rng));
        for (auto& x : bottom) x = static_cast<Letter>(letter_dist(rng));
        const Biword b{Word(top), Word(bottom)};
        const Expression canonical = reducer.reduce(Expression(b)).normal_form;
        const Expression shuffled = reducer.reduce(Expression(b), Strategy::random(rng())).normal_form;
        ++result.trials;
        if (canonical != shuffled) {
            result.ok = false;
            result.counterexamples.push_back(b);
        }
    }
    return result;
}

}  // namespace rqa
