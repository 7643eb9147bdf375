#include "rqa/expression.hpp"

#include <algorithm>

namespace rqa {

Expression::Expression(const Biword& b, LaurentCoeff c) {
    if (!c.is_zero()) terms_.emplace(b, std::move(c));
}

LaurentCoeff Expression::coefficient(const Biword& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? LaurentCoeff{} : it->second;
}

std::optional<std::size_t> Expression::max_length() const {
    if (terms_.empty()) return std::nullopt;
    // canonical order puts the longest biwords last
    return terms_.rbegin()->first.length();
}

void Expression::add_term(const Biword& b, const LaurentCoeff& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Expression Expression::operator-() const {
    Expression out = *this;
    for (auto& [b, c] : out.terms_) c = -c;
    return out;
}

Expression& Expression::operator+=(const Expression& other) {
    for (const auto& [b, c] : other.terms_) add_term(b, c);
    return *this;
}

Expression& Expression::operator-=(const Expression& other) {
    for (const auto& [b, c] : other.terms_) add_term(b, -c);
    return *this;
}

Expression add(const Expression& e, const Expression& f) { return e + f; }

Expression scale(const LaurentCoeff& c, const Expression& e) {
    Expression out;
    if (c.is_zero()) return out;
    for (const auto& [b, coeff] : e) out.add_term(b, c * coeff);
    return out;
}

Expression product(const Expression& e, const Expression& f, std::optional<std::size_t> max_degree) {
    Expression out;
    for (const auto& [a, ca] : e) {
        if (max_degree && a.length() > *max_degree) break;
        for (const auto& [b, cb] : f) {
            if (max_degree && a.length() + b.length() > *max_degree) break;
            out.add_term(concat(a, b), ca * cb);
        }
    }
    return out;
}

Expression homogeneous_component(const Expression& e, std::size_t n) {
    Expression out;
    for (const auto& [b, c] : e)
        if (b.length() == n) out.add_term(b, c);
    return out;
}

bool is_irreducible_expr(const Expression& e) {
    return std::all_of(e.begin(), e.end(), [](const auto& t) { return is_irreducible(t.first); });
}

bool is_circular(const Expression& e) {
    return std::all_of(e.begin(), e.end(), [](const auto& t) { return is_circuit(t.first); });
}

Expression eval_at_one(const Expression& e) {
    Expression out;
    for (const auto& [b, c] : e) out.add_term(b, LaurentCoeff(eval_at_one(c)));
    return out;
}

}  // namespace rqa
