#pragma once

#include <cstddef>
#include <gmpxx.h>
#include <map>
#include <utility>
#include <vector>

#include "rqa/expression.hpp"

namespace rqa {

/// Sparse row: (column, value) pairs sorted by column, no zeros.
template <typename Scalar>
using SparseRow = std::vector<std::pair<std::size_t, Scalar>>;

struct RelationMatrix {
    std::size_t columns = 0;
    std::vector<SparseRow<mpq_class>> rows;
};

/// Incremental fraction-free row echelon form over Z. Rows are reduced
/// against existing pivots on their leading column and divided by their
/// content, so entries stay small and no rationals are formed.
class RankAccumulator {
public:
    /// Returns true if the row increased the rank.
    bool add(SparseRow<mpz_class> row);
    bool add_rational(const SparseRow<mpq_class>& row);
    std::size_t rank() const noexcept { return pivots_.size(); }

private:
    std::map<std::size_t, SparseRow<mpz_class>> pivots_;
};

/// Column of a length-n biword in the degree-n coordinate space:
/// index(top) * r^n + index(bottom), words read as base-r numerals.
std::size_t biword_column(const Biword& b, int r);

/// Default ambient-dimension budget r^(2n).
inline constexpr std::size_t kOracleBudget = 1'000'000;

/// Rows are the coordinate vectors of beta (g - rule(g)) gamma for every
/// reducible length-2 biword g, every position, and all contexts beta, gamma
/// with total length n - 2, with q specialized to q_value (nonzero; q = 1
/// gives the rules without q). Built without touching the rewrite engine.
RelationMatrix relation_matrix(int r, std::size_t n, const mpq_class& q_value,
                               std::size_t budget = kOracleBudget);

std::size_t matrix_rank(const RelationMatrix& m);

struct DimensionReport {
    int r = 0;
    std::size_t degree = 0;
    mpq_class q_value = 1;
    std::size_t ambient_dim = 0;
    std::size_t relation_rank = 0;
    std::size_t quotient_dim = 0;
    std::size_t irreducible_count = 0;
    bool match = false;
};

DimensionReport check_basis_dimension(int r, std::size_t n, const mpq_class& q_value,
                                      std::size_t budget = kOracleBudget);

/// Cross-check against the rewrite engine: rank of the linear map
/// b -> [b] over all length-n biwords, coefficients evaluated at q_value.
std::size_t normal_form_rank(int r, std::size_t n, const mpq_class& q_value);

}  // namespace rqa
