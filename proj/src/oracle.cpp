#include "rqa/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "rqa/rewrite.hpp"

namespace rqa {

namespace {

void remove_content(SparseRow<mpz_class>& row) {
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row := (p/g) * row - (v/g) * pivot, where p and v are the leading entries.
SparseRow<mpz_class> eliminate(const SparseRow<mpz_class>& row, const SparseRow<mpz_class>& pivot) {
    mpz_class g = gcd(row.front().second, pivot.front().second);
    const mpz_class row_scale = pivot.front().second / g;
    const mpz_class pivot_scale = row.front().second / g;

    SparseRow<mpz_class> out;
    out.reserve(row.size() + pivot.size());
    auto a = row.begin() + 1;
    auto b = pivot.begin() + 1;
    while (a != row.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
            out.emplace_back(a->first, row_scale * a->second);
            ++a;
        } else if (a == row.end() || b->first < a->first) {
            out.emplace_back(b->first, -pivot_scale * b->second);
            ++b;
        } else {
            mpz_class v = row_scale * a->second - pivot_scale * b->second;
            if (v != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    remove_content(out);
    return out;
}

std::size_t checked_power(int r, std::size_t n, std::size_t budget) {
    std::size_t p = 1;
    for (std::size_t i = 0; i < n; ++i) {
        p *= static_cast<std::size_t>(r);
        if (p > budget) throw std::length_error("oracle budget exceeded");
    }
    return p;
}

}  // namespace

bool RankAccumulator::add(SparseRow<mpz_class> row) {
    remove_content(row);
    while (!row.empty()) {
        auto it = pivots_.find(row.front().first);
        if (it == pivots_.end()) {
            const std::size_t lead = row.front().first;
            pivots_.emplace(lead, std::move(row));
            return true;
        }
        row = eliminate(row, it->second);
    }
    return false;
}

bool RankAccumulator::add_rational(const SparseRow<mpq_class>& row) {
    mpz_class denominator_lcm = 1;
    for (const auto& [c, v] : row) mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                                           v.get_den_mpz_t());
    SparseRow<mpz_class> integral;
    integral.reserve(row.size());
    for (const auto& [c, v] : row) {
        mpz_class x = v.get_num() * (denominator_lcm / v.get_den());
        integral.emplace_back(c, std::move(x));
    }
    return add(std::move(integral));
}

std::size_t biword_column(const Biword& b, int r) {
    std::size_t top = 0, bottom = 0;
    for (std::size_t i = 0; i < b.length(); ++i) {
        top = top * static_cast<std::size_t>(r) + (b.top()[i] - 1u);
        bottom = bottom * static_cast<std::size_t>(r) + (b.bottom()[i] - 1u);
    }
    std::size_t words = 1;
    for (std::size_t i = 0; i < b.length(); ++i) words *= static_cast<std::size_t>(r);
    return top * words + bottom;
}

namespace {

// Right-hand sides written out directly from the commutation relations so the
// oracle shares nothing with the rewrite module.
std::vector<std::pair<Biword, mpq_class>> generator(Letter x, Letter y, Letter a, Letter b,
                                                    const mpq_class& q) {
    std::vector<std::pair<Biword, mpq_class>> g;
    g.emplace_back(Biword({x, y}, {a, b}), mpq_class(1));
    if (a == b) {
        g.emplace_back(Biword({y, x}, {a, a}), mpq_class(-q));
    } else {
        g.emplace_back(Biword({y, x}, {b, a}), mpq_class(-1));
        g.emplace_back(Biword({y, x}, {a, b}), mpq_class(-q));
        g.emplace_back(Biword({x, y}, {b, a}), mpq_class(1 / q));
    }
    return g;
}

}  // namespace

RelationMatrix relation_matrix(int r, std::size_t n, const mpq_class& q_value, std::size_t budget) {
    if (q_value == 0) throw std::domain_error("relation matrix needs q != 0");
    if (r < 1) throw std::invalid_argument("relation matrix needs r >= 1");
    RelationMatrix m;
    m.columns = checked_power(r, 2 * n, budget);
    if (n < 2) return m;

    std::vector<std::vector<std::pair<Biword, mpq_class>>> generators;
    for (int x = 1; x <= r; ++x)
        for (int y = 1; y < x; ++y)
            for (int a = 1; a <= r; ++a)
                for (int b = 1; b <= a; ++b)
                    generators.push_back(generator(static_cast<Letter>(x), static_cast<Letter>(y),
                                                   static_cast<Letter>(a), static_cast<Letter>(b),
                                                   q_value));

    for (std::size_t left = 0; left + 2 <= n; ++left) {
        const auto prefixes = all_biwords(r, left);
        const auto suffixes = all_biwords(r, n - 2 - left);
        for (const auto& g : generators) {
            for (const auto& beta : prefixes) {
                for (const auto& gamma : suffixes) {
                    std::map<std::size_t, mpq_class> coords;
                    for (const auto& [middle, v] : g) coords[biword_column(concat(beta, middle, gamma), r)] += v;
                    SparseRow<mpq_class> row;
                    for (auto& [c, v] : coords)
                        if (v != 0) row.emplace_back(c, std::move(v));
                    m.rows.push_back(std::move(row));
                }
            }
        }
    }
    return m;
}

std::size_t matrix_rank(const RelationMatrix& m) {
    RankAccumulator acc;
    for (const auto& row : m.rows) acc.add_rational(row);
    return acc.rank();
}

DimensionReport check_basis_dimension(int r, std::size_t n, const mpq_class& q_value, std::size_t budget) {
    DimensionReport report;
    report.r = r;
    report.degree = n;
    report.q_value = q_value;
    const RelationMatrix m = relation_matrix(r, n, q_value, budget);
    report.ambient_dim = m.columns;
    report.relation_rank = matrix_rank(m);
    report.quotient_dim = report.ambient_dim - report.relation_rank;
    for (const auto& b : all_biwords(r, n))
        if (is_irreducible(b)) ++report.irreducible_count;
    report.match = report.quotient_dim == report.irreducible_count;
    return report;
}

std::size_t normal_form_rank(int r, std::size_t n, const mpq_class& q_value) {
    if (q_value == 0) throw std::domain_error("normal form rank needs q != 0");
    const System sys = q_value == 1 ? System::One : System::Q;
    const Reducer reducer(sys);
    RankAccumulator acc;
    for (const auto& b : all_biwords(r, n)) {
        SparseRow<mpq_class> row;
        for (const auto& [nb, c] : reducer.reduce_biword(b)) {
            mpq_class v = eval_at_rational(c, q_value);
            if (v != 0) row.emplace_back(biword_column(nb, r), std::move(v));
        }
        std::sort(row.begin(), row.end());
        acc.add_rational(row);
    }
    return acc.rank();
}

}  // namespace rqa
