#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rqa/expression.hpp"
#include "rqa/macmahon.hpp"
#include "rqa/oracle.hpp"
#include "rqa/rewrite.hpp"

namespace rqa {

/// Positioned error from the expression-language parser. The position is a
/// byte offset into the original input.
class ParseError : public std::runtime_error {
public:
    enum class Kind { Syntax, LengthMismatch, LetterOutOfRange };

    ParseError(Kind kind, std::size_t position, std::string expected, std::string found);

    Kind kind() const noexcept { return kind_; }
    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }
    const std::string& found() const noexcept { return found_; }

private:
    Kind kind_;
    std::size_t position_;
    std::string expected_;
    std::string found_;
};

struct ParseOptions {
    /// When set, letters above r are rejected.
    std::optional<int> r;
};

// Grammar (whitespace allowed between tokens):
//   expr   := [sign] term (sign term)* | '0'
//   term   := [coeff '*'] biword | coeff
//   coeff  := int | [int '*'] 'q' ['^' int]        int may be negative
//   biword := digits '/' digits | '(' list ')' '/' '(' list ')' | 'e'
Biword parse_biword(std::string_view text, const ParseOptions& options = {});
Expression parse_expression(std::string_view text, const ParseOptions& options = {});

/// Digit form ("321/321") when all letters are single digits, tuple form
/// ("(10,2)/(1,10)") otherwise, "e" for the empty biword.
std::string print_biword(const Biword& b);

/// Canonical text: biwords in canonical order, one signed monomial per
/// coefficient term. parse_expression(print_expression(e)) == e.
std::string print_expression(const Expression& e);

/// "STEP <biword> @ <position> -> <expression>"
std::string format_step(const TraceEvent& event);

std::string format_stats(const Biword& b);

std::string format_qmm_table(const QmmReport& report);
/// key<TAB>value lines; one block per degree, blocks separated by blank lines.
std::string format_qmm_records(const QmmReport& report);

std::string format_dimension_report(const DimensionReport& report);
std::string format_dimension_records(const DimensionReport& report);

}  // namespace rqa
