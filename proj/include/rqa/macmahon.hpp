#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rqa/expression.hpp"
#include "rqa/rewrite.hpp"

namespace rqa {

/// Coefficient ring of the Fermion/Boson sums: symbolic q, or q = 1.
enum class Variant { Q, One };

/// Sum over subsets J of {1..r} (increasing binary order) and permutations
/// sigma of J (lexicographic order) of (-1)^|J| (-q)^{-inv sigma} (sigma / J).
Expression ferm(int r, Variant variant);

/// Sum over all words w of length <= max_len of q^{inv w} (sorted(w) / w).
Expression bos(int r, std::size_t max_len, Variant variant);

struct DegreeResult {
    std::size_t degree = 0;
    Expression normal_form;
    bool ok = false;
    std::size_t terms_before_reduction = 0;
    std::uint64_t rewrite_steps = 0;
};

struct QmmReport {
    int r = 0;
    std::size_t max_degree = 0;
    System system = System::One;
    std::vector<DegreeResult> per_degree;

    bool ok() const;
};

/// Reduces each homogeneous component of ferm * bos up to max_degree under
/// the matching system. Degree 0 must give the unit, every other degree 0.
QmmReport qmm_check(int r, std::size_t max_degree, Variant variant,
                    ReduceOptions options = {});

/// qmm_check at q = 1: the canonical reduction of the product is the unit.
QmmReport strong_qmm_check(int r, std::size_t max_degree, ReduceOptions options = {});

}  // namespace rqa
