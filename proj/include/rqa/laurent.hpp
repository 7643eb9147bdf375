#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

namespace rqa {

/// Exact element of Z[q, q^-1].
///
/// Stored as (exponent, coefficient) pairs sorted by exponent with no zero
/// coefficients, so equal values always have identical representations and
/// the zero polynomial is the empty sequence.
class LaurentCoeff {
public:
    using Exponent = std::int64_t;
    using Term = std::pair<Exponent, mpz_class>;

    LaurentCoeff() = default;
    LaurentCoeff(long constant);  // NOLINT: implicit integer promotion is intended
    LaurentCoeff(const mpz_class& constant);  // NOLINT

    /// c * q^k
    static LaurentCoeff monomial(const mpz_class& c, Exponent k);
    /// q^k
    static LaurentCoeff q_power(Exponent k) { return monomial(1, k); }

    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    /// Coefficient of q^k (zero if absent).
    mpz_class coefficient(Exponent k) const;

    LaurentCoeff operator-() const;
    LaurentCoeff& operator+=(const LaurentCoeff& other);
    LaurentCoeff& operator-=(const LaurentCoeff& other);
    LaurentCoeff& operator*=(const LaurentCoeff& other);

    friend LaurentCoeff operator+(LaurentCoeff a, const LaurentCoeff& b) { return a += b; }
    friend LaurentCoeff operator-(LaurentCoeff a, const LaurentCoeff& b) { return a -= b; }
    friend LaurentCoeff operator*(const LaurentCoeff& a, const LaurentCoeff& b);
    friend bool operator==(const LaurentCoeff& a, const LaurentCoeff& b) { return a.terms_ == b.terms_; }

    /// Multiplies by q^k in place.
    LaurentCoeff& shift(Exponent k);

private:
    void add_scaled(const LaurentCoeff& other, int sign);

    std::vector<Term> terms_;
};

LaurentCoeff add(const LaurentCoeff& a, const LaurentCoeff& b);
LaurentCoeff mul(const LaurentCoeff& a, const LaurentCoeff& b);

/// Specialization q = 1: the sum of all coefficients.
mpz_class eval_at_one(const LaurentCoeff& a);

/// Exact value at a nonzero rational q. Throws std::domain_error for q = 0.
mpq_class eval_at_rational(const LaurentCoeff& a, const mpq_class& q);

/// Coefficient text in the expression language, e.g. "-2*q^-1 + q^2 + 3".
std::string to_string(const LaurentCoeff& a);

}  // namespace rqa
