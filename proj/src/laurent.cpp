#include "rqa/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rqa {

LaurentCoeff::LaurentCoeff(long constant) {
    if (constant != 0) terms_.emplace_back(0, mpz_class(constant));
}

LaurentCoeff::LaurentCoeff(const mpz_class& constant) {
    if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentCoeff LaurentCoeff::monomial(const mpz_class& c, Exponent k) {
    LaurentCoeff out;
    if (c != 0) out.terms_.emplace_back(k, c);
    return out;
}

mpz_class LaurentCoeff::coefficient(Exponent k) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                               [](const Term& t, Exponent e) { return t.first < e; });
    return (it != terms_.end() && it->first == k) ? it->second : mpz_class(0);
}

LaurentCoeff LaurentCoeff::operator-() const {
    LaurentCoeff out = *this;
    for (auto& t : out.terms_) t.second = -t.second;
    return out;
}

void LaurentCoeff::add_scaled(const LaurentCoeff& other, int sign) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.emplace_back(b->first, sign > 0 ? b->second : mpz_class(-b->second));
            ++b;
        } else {
            mpz_class c = a->second;
            if (sign > 0) c += b->second; else c -= b->second;
            if (c != 0) merged.emplace_back(a->first, std::move(c));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
}

LaurentCoeff& LaurentCoeff::operator+=(const LaurentCoeff& other) {
    add_scaled(other, +1);
    return *this;
}

LaurentCoeff& LaurentCoeff::operator-=(const LaurentCoeff& other) {
    add_scaled(other, -1);
    return *this;
}

LaurentCoeff operator*(const LaurentCoeff& a, const LaurentCoeff& b) {
    LaurentCoeff out;
    if (a.is_zero() || b.is_zero()) return out;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
        out.terms_.emplace_back(a.terms_[0].first + b.terms_[0].first,
                                a.terms_[0].second * b.terms_[0].second);
        return out;
    }
    std::map<LaurentCoeff::Exponent, mpz_class> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    for (auto& [e, c] : acc)
        if (c != 0) out.terms_.emplace_back(e, std::move(c));
    return out;
}

LaurentCoeff& LaurentCoeff::operator*=(const LaurentCoeff& other) {
    *this = *this * other;
    return *this;
}

LaurentCoeff& LaurentCoeff::shift(Exponent k) {
    for (auto& t : terms_) t.first += k;
    return *this;
}

LaurentCoeff add(const LaurentCoeff& a, const LaurentCoeff& b) { return a + b; }

LaurentCoeff mul(const LaurentCoeff& a, const LaurentCoeff& b) { return a * b; }

mpz_class eval_at_one(const LaurentCoeff& a) {
    mpz_class sum = 0;
    for (const auto& t : a.terms()) sum += t.second;
    return sum;
}

mpq_class eval_at_rational(const LaurentCoeff& a, const mpq_class& q) {
    if (q == 0) throw std::domain_error("cannot evaluate a Laurent polynomial at q = 0");
    mpq_class sum = 0;
    for (const auto& [e, c] : a.terms()) {
        mpq_class p;
        if (e >= 0) {
            mpz_pow_ui(p.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
            mpz_pow_ui(p.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
        } else {
            mpz_pow_ui(p.get_num_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(-e));
            mpz_pow_ui(p.get_den_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(-e));
        }
        p.canonicalize();
        sum += p * c;
    }
    return sum;
}

namespace {

std::string monomial_text(const mpz_class& abs_c, LaurentCoeff::Exponent k) {
    if (k == 0) return abs_c.get_str();
    std::string q = k == 1 ? "q" : "q^" + std::to_string(k);
    return abs_c == 1 ? q : abs_c.get_str() + "*" + q;
}

}  // namespace

std::string to_string(const LaurentCoeff& a) {
    if (a.is_zero()) return "0";
    std::string out;
    // highest power first reads naturally
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        const auto& [k, c] = *it;
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        out += monomial_text(neg ? mpz_class(-c) : c, k);
    }
    return out;
}

}  // namespace rqa
