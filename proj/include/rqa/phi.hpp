#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "rqa/expression.hpp"

namespace rqa {

/// Weight map: each term c * b becomes (q^{inv-(b)} c) * b. Linear,
/// invertible and support-preserving; multiplicative on circular expressions.
Expression phi(const Expression& e);
Expression phi_inv(const Expression& e);

/// Thrown when a circular-only operation receives a non-circular operand.
class NotCircular : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// in_ideal(e, S) == in_ideal(phi(e), Sq). A false return is a counterexample.
bool check_principle(const Expression& e);

/// phi(e * f) == phi(e) * phi(f); both operands must be circular.
bool check_circuit_multiplicativity(const Expression& e, const Expression& f);

/// Random element of the two-sided ideal of the q = 1 rules: a sum of one to
/// three terms c * beta (g - [g]) gamma with g a reducible length-2 biword,
/// random contexts of total length <= max_len - 2 and random monomial
/// coefficients. Requires r >= 2 and max_len >= 2.
Expression random_ideal_element(int r, std::size_t max_len, std::mt19937_64& rng);

/// A random ideal element plus a nonzero irreducible expression, which can
/// never lie in the ideal.
Expression random_non_member(int r, std::size_t max_len, std::mt19937_64& rng);

struct PrincipleResult {
    bool ok = true;
    std::size_t members = 0;
    std::size_t non_members = 0;
    std::vector<Expression> counterexamples;
};

/// For `trials` ideal elements and `trials` non-members: membership under S
/// must equal membership of the weighted expression under Sq, and must match
/// the known answer.
PrincipleResult check_principle_fuzz(int r, std::size_t max_len, std::size_t trials, std::uint64_t seed);

}  // namespace rqa
