#include "rqa/io.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace rqa {

ParseError::ParseError(Kind kind, std::size_t position, std::string expected, std::string found)
    : std::runtime_error("at offset " + std::to_string(position) + ": expected " + expected +
                         ", found " + (found.empty() ? std::string("end of input") : "'" + found + "'")),
      kind_(kind),
      position_(position),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& options) : text_(text), options_(options) {}

    Biword biword_only() {
        skip_ws();
        Biword b = biword();
        expect_end();
        return b;
    }

    Expression expression() {
        Expression out;
        skip_ws();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        term_into(out, sign);
        while (true) {
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') fail("'+', '-' or end of input");
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
            term_into(out, sign);
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string snippet(std::size_t at) const {
        if (at >= text_.size()) return {};
        return std::string(text_.substr(at, 8));
    }

    [[noreturn]] void fail(const std::string& expected) const { fail_at(pos_, expected); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& expected,
                              ParseError::Kind kind = ParseError::Kind::Syntax) const {
        throw ParseError(kind, at, expected, snippet(at));
    }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("'") + c + "'");
        ++pos_;
    }

    void expect_end() {
        skip_ws();
        if (!at_end()) fail("end of input");
    }

    std::string_view digit_run() {
        const std::size_t start = pos_;
        while (!at_end() && is_digit(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    // [-]digits as an arbitrary-precision integer.
    mpz_class integer() {
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        auto digits = digit_run();
        if (digits.empty()) fail_at(pos_, "integer");
        mpz_class v(std::string(digits), 10);
        return negative ? mpz_class(-v) : v;
    }

    std::int64_t exponent() {
        skip_ws();
        const std::size_t start = pos_;
        if (peek() == '-') ++pos_;
        digit_run();
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
        if (ec != std::errc{} || ptr != text_.data() + pos_) fail_at(start, "exponent integer");
        return value;
    }

    Letter letter(unsigned long value, std::size_t at) const {
        if (value < 1 || value > std::numeric_limits<Letter>::max() ||
            (options_.r && value > static_cast<unsigned long>(*options_.r))) {
            std::string range = options_.r ? "letter in 1.." + std::to_string(*options_.r) : "letter >= 1";
            fail_at(at, range, ParseError::Kind::LetterOutOfRange);
        }
        return static_cast<Letter>(value);
    }

    Word digit_word() {
        skip_ws();
        const std::size_t start = pos_;
        auto digits = digit_run();
        if (digits.empty()) fail("digit letters");
        std::vector<Letter> letters;
        for (std::size_t i = 0; i < digits.size(); ++i)
            letters.push_back(letter(static_cast<unsigned long>(digits[i] - '0'), start + i));
        return Word(std::move(letters));
    }

    Word tuple_word() {
        expect('(');
        std::vector<Letter> letters;
        skip_ws();
        if (peek() == ')') {
            ++pos_;
            return Word(std::move(letters));
        }
        while (true) {
            skip_ws();
            const std::size_t start = pos_;
            auto digits = digit_run();
            if (digits.empty()) fail("letter");
            unsigned long value = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (ec != std::errc{}) value = std::numeric_limits<unsigned long>::max();
            letters.push_back(letter(value, start));
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            if (peek() == ')') {
                ++pos_;
                break;
            }
            fail("',' or ')'");
        }
        return Word(std::move(letters));
    }

    Biword biword() {
        skip_ws();
        const std::size_t start = pos_;
        if (peek() == 'e') {
            ++pos_;
            return Biword{};
        }
        Word top, bottom;
        if (peek() == '(') {
            top = tuple_word();
            expect('/');
            skip_ws();
            if (peek() != '(') fail("'(' starting the bottom row");
            bottom = tuple_word();
        } else if (is_digit(peek())) {
            top = digit_word();
            expect('/');
            bottom = digit_word();
        } else {
            fail("biword");
        }
        if (top.size() != bottom.size()) {
            fail_at(start,
                    "rows of equal length (top " + std::to_string(top.size()) + ", bottom " +
                        std::to_string(bottom.size()) + ")",
                    ParseError::Kind::LengthMismatch);
        }
        return Biword(std::move(top), std::move(bottom));
    }

    // 'q' ['^' int], already positioned at 'q'.
    LaurentCoeff q_part(const mpz_class& factor) {
        expect('q');
        std::int64_t k = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            k = exponent();
        }
        return LaurentCoeff::monomial(factor, k);
    }

    // After a coefficient: optional '*' biword, else the unit.
    void finish_scalar_term(Expression& out, const LaurentCoeff& c) {
        skip_ws();
        if (peek() == '*') {
            ++pos_;
            out.add_term(biword(), c);
        } else {
            out.add_term(Biword{}, c);
        }
    }

    void term_into(Expression& out, int sign) {
        skip_ws();
        const char c = peek();
        if (c == 'q') {
            finish_scalar_term(out, q_part(sign));
        } else if (c == 'e' || c == '(') {
            out.add_term(biword(), sign);
        } else if (is_digit(c) || c == '-') {
            const std::size_t start = pos_;
            if (c != '-') {
                digit_run();
                skip_ws();
                if (peek() == '/') {
                    pos_ = start;
                    out.add_term(biword(), sign);
                    return;
                }
                pos_ = start;
            }
            mpz_class value = integer() * sign;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
                if (peek() == 'q') {
                    finish_scalar_term(out, q_part(value));
                } else {
                    out.add_term(biword(), LaurentCoeff(value));
                }
            } else {
                out.add_term(Biword{}, LaurentCoeff(value));
            }
        } else {
            fail("term");
        }
    }

    std::string_view text_;
    const ParseOptions& options_;
    std::size_t pos_ = 0;
};

}  // namespace

Biword parse_biword(std::string_view text, const ParseOptions& options) {
    return Parser(text, options).biword_only();
}

Expression parse_expression(std::string_view text, const ParseOptions& options) {
    return Parser(text, options).expression();
}

std::string print_biword(const Biword& b) {
    if (b.empty()) return "e";
    const bool digits = b.top().max_letter() <= 9 && b.bottom().max_letter() <= 9;
    std::string out;
    auto row = [&](const Word& w) {
        if (digits) {
            for (Letter x : w) out += static_cast<char>('0' + x);
            return;
        }
        out += '(';
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(w[i]);
        }
        out += ')';
    };
    row(b.top());
    out += '/';
    row(b.bottom());
    return out;
}

std::string print_expression(const Expression& e) {
    if (e.is_zero()) return "0";
    std::string out;
    for (const auto& [b, coeff] : e) {
        for (const auto& [k, c] : coeff.terms()) {
            const bool negative = c < 0;
            const mpz_class magnitude = negative ? mpz_class(-c) : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            std::string factor;
            if (k != 0) {
                factor = magnitude == 1 ? "" : magnitude.get_str() + "*";
                factor += k == 1 ? "q" : "q^" + std::to_string(k);
            } else if (magnitude != 1) {
                factor = magnitude.get_str();
            }
            out += factor.empty() ? print_biword(b) : factor + "*" + print_biword(b);
        }
    }
    return out;
}

std::string format_step(const TraceEvent& event) {
    return "STEP " + print_biword(event.biword) + " @ " + std::to_string(event.position) + " -> " +
           print_expression(event.output);
}

std::string format_stats(const Biword& b) {
    std::ostringstream os;
    os << "biword\t" << print_biword(b) << '\n';
    os << "length\t" << b.length() << '\n';
    os << "inv\t" << inv(b.top()) << '\n';
    os << "imv\t" << imv(b.bottom()) << '\n';
    os << "inv-\t" << inv_minus(b) << '\n';
    os << "inv+\t" << inv_plus(b) << '\n';
    os << "double_descents\t";
    const auto dd = double_descents(b);
    if (dd.empty()) os << "-";
    for (std::size_t i = 0; i < dd.size(); ++i) os << (i ? "," : "") << dd[i];
    os << '\n';
    os << "irreducible\t" << (dd.empty() ? "yes" : "no") << '\n';
    os << "circuit\t" << (is_circuit(b) ? "yes" : "no") << '\n';
    return os.str();
}

std::string format_qmm_table(const QmmReport& report) {
    std::ostringstream os;
    os << "qmm r=" << report.r << " max_degree=" << report.max_degree
       << " system=" << to_string(report.system) << '\n';
    os << "degree  terms  steps  ok   normal_form\n";
    for (const auto& d : report.per_degree) {
        os.width(6);
        os << d.degree << "  ";
        os.width(5);
        os << d.terms_before_reduction << "  ";
        os.width(5);
        os << d.rewrite_steps << "  " << (d.ok ? "yes " : "NO  ") << " " << print_expression(d.normal_form)
           << '\n';
    }
    os << "result: " << (report.ok() ? "all ok" : "FAILED") << '\n';
    return os.str();
}

std::string format_qmm_records(const QmmReport& report) {
    std::ostringstream os;
    os << "kind\tqmm\nr\t" << report.r << "\nmax_degree\t" << report.max_degree << "\nsystem\t"
       << to_string(report.system) << "\nok\t" << (report.ok() ? "true" : "false") << '\n';
    for (const auto& d : report.per_degree) {
        os << "\ndegree\t" << d.degree << "\nterms_before_reduction\t" << d.terms_before_reduction
           << "\nrewrite_steps\t" << d.rewrite_steps << "\nok\t" << (d.ok ? "true" : "false")
           << "\nnormal_form\t" << print_expression(d.normal_form) << '\n';
    }
    return os.str();
}

std::string format_dimension_report(const DimensionReport& report) {
    std::ostringstream os;
    os << "basis r=" << report.r << " degree=" << report.degree << " q=" << report.q_value.get_str() << '\n'
       << "ambient_dim       " << report.ambient_dim << '\n'
       << "relation_rank     " << report.relation_rank << '\n'
       << "quotient_dim      " << report.quotient_dim << '\n'
       << "irreducible_count " << report.irreducible_count << '\n'
       << "match             " << (report.match ? "yes" : "NO") << '\n';
    return os.str();
}

std::string format_dimension_records(const DimensionReport& report) {
    std::ostringstream os;
    os << "kind\tbasis\nr\t" << report.r << "\ndegree\t" << report.degree << "\nq\t"
       << report.q_value.get_str() << "\nambient_dim\t" << report.ambient_dim << "\nrelation_rank\t"
       << report.relation_rank << "\nquotient_dim\t" << report.quotient_dim << "\nirreducible_count\t"
       << report.irreducible_count << "\nmatch\t" << (report.match ? "true" : "false") << '\n';
    return os.str();
}

}  // namespace rqa
