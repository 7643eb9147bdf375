#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "rqa/biword.hpp"
#include "rqa/laurent.hpp"

namespace rqa {

/// A finitely supported sum of biwords with Z[q, q^-1] coefficients.
///
/// Terms are kept in canonical biword order and zero coefficients are never
/// stored, so two equal expressions compare equal term-for-term. Infinite
/// sums are only ever handled through explicit degree cutoffs.
class Expression {
public:
    using Terms = std::map<Biword, LaurentCoeff>;

    Expression() = default;
    /// c * b
    Expression(const Biword& b, LaurentCoeff c = 1);

    /// The unit: the empty biword with coefficient 1.
    static Expression unit() { return Expression(Biword{}); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    auto begin() const noexcept { return terms_.begin(); }
    auto end() const noexcept { return terms_.end(); }

    /// Coefficient of b (zero if b is not in the support).
    LaurentCoeff coefficient(const Biword& b) const;
    /// Largest biword length in the support; nullopt for zero.
    std::optional<std::size_t> max_length() const;

    /// Adds c * b, dropping the term if it cancels.
    void add_term(const Biword& b, const LaurentCoeff& c);

    Expression operator-() const;
    Expression& operator+=(const Expression& other);
    Expression& operator-=(const Expression& other);

    friend Expression operator+(Expression a, const Expression& b) { return a += b; }
    friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
    friend bool operator==(const Expression&, const Expression&) = default;

private:
    Terms terms_;
};

Expression add(const Expression& e, const Expression& f);
Expression scale(const LaurentCoeff& c, const Expression& e);

/// Bilinear extension of concatenation. With max_degree set, products longer
/// than the cutoff are dropped (never approximated).
Expression product(const Expression& e, const Expression& f,
                   std::optional<std::size_t> max_degree = std::nullopt);

inline Expression operator*(const Expression& e, const Expression& f) { return product(e, f); }
inline Expression operator*(const LaurentCoeff& c, const Expression& e) { return scale(c, e); }

/// Restriction of the support to biwords of length exactly n.
Expression homogeneous_component(const Expression& e, std::size_t n);

bool is_irreducible_expr(const Expression& e);
bool is_circular(const Expression& e);

/// Applies q = 1 to every coefficient.
Expression eval_at_one(const Expression& e);

}  // namespace rqa
