#include "rqa/macmahon.hpp"

#include <algorithm>
#include <stdexcept>

namespace rqa {

namespace {

LaurentCoeff signed_power(long sign_exponent, long q_exponent, Variant variant) {
    const long sign = (sign_exponent % 2 == 0) ? 1 : -1;
    return variant == Variant::Q ? LaurentCoeff::monomial(sign, q_exponent) : LaurentCoeff(sign);
}

}  // namespace

Expression ferm(int r, Variant variant) {
    if (r < 1) throw std::invalid_argument("ferm: r must be at least 1");
    Expression out;
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
        std::vector<Letter> subset;
        for (int i = 0; i < r; ++i)
            if (mask & (1ul << i)) subset.push_back(static_cast<Letter>(i + 1));
        const Word bottom(subset);
        std::vector<Letter> sigma = subset;
        do {
            const Word top(sigma);
            const long inversions = inv(top);
            // (-1)^|J| (-q)^{-inv} = (-1)^{|J| + inv} q^{-inv}
            out.add_term(Biword(top, bottom),
                         signed_power(static_cast<long>(subset.size()) + inversions, -inversions,
                                      variant));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    return out;
}

Expression bos(int r, std::size_t max_len, Variant variant) {
    if (r < 1) throw std::invalid_argument("bos: r must be at least 1");
    Expression out;
    for (std::size_t n = 0; n <= max_len; ++n) {
        for (const Word& w : all_words(r, n)) {
            const long inversions = inv(w);
            out.add_term(Biword(sorted_rearrangement(w), w), signed_power(0, inversions, variant));
        }
    }
    return out;
}

bool QmmReport::ok() const {
    return std::all_of(per_degree.begin(), per_degree.end(), [](const auto& d) { return d.ok; });
}

QmmReport qmm_check(int r, std::size_t max_degree, Variant variant, ReduceOptions options) {
    QmmReport report;
    report.r = r;
    report.max_degree = max_degree;
    report.system = variant == Variant::Q ? System::Q : System::One;

    // degree-d components only involve Boson terms of length <= d
    const Expression product_terms = product(ferm(r, variant), bos(r, max_degree, variant), max_degree);
    const Reducer reducer(report.system, options);
    for (std::size_t d = 0; d <= max_degree; ++d) {
        const Expression component = homogeneous_component(product_terms, d);
        auto reduction = reducer.reduce(component);
        DegreeResult result;
        result.degree = d;
        result.terms_before_reduction = component.size();
        result.rewrite_steps = reduction.rewrite_steps;
        result.normal_form = std::move(reduction.normal_form);
        result.ok = d == 0 ? result.normal_form == Expression::unit() : result.normal_form.is_zero();
        report.per_degree.push_back(std::move(result));
    }
    return report;
}

QmmReport strong_qmm_check(int r, std::size_t max_degree, ReduceOptions options) {
    return qmm_check(r, max_degree, Variant::One, options);
}

}  // namespace rqa
