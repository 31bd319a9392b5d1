#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "orekit/diff_operator.hpp"
#include "orekit/integer_ore.hpp"
#include "orekit/rational_function.hpp"

namespace orekit::text {

// Grammar (whitespace insignificant, products always explicit):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | power
//   power  := base ('^' ['-'] int)?
//   base   := int | 'x' [index] | 'd' [index] | 't' | '(' expr ')' | 'O' '(' 'x' [index] '^' int ')'
// '/' divides by a nonzero constant only, so "3/4" is a rational literal.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(long line, long column, const std::string& message, std::vector<std::string> expected = {});
    long line() const { return line_; }
    long column() const { return column_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    long line_;
    long column_;
    std::vector<std::string> expected_;
};

struct Node {
    enum class Kind { number, x, d, t, neg, add, sub, mul, div, pow, big_o };
    Kind kind = Kind::number;
    Integer value;   // number literal, exponent of pow, N of big_o
    int index = 0;   // 1-based variable index; 0 when written without one
    long line = 1;
    long column = 1;
    std::vector<Node> kids;
};

Node parse_tree(std::string_view text);

// Ring S = K((x))<d> with K = Q or Q(t). Written without O-terms an element is exact.
template <CoefficientField F>
OrePoly<F> parse_ore(std::string_view text, Precision working = Precision{kDefaultPrecision});

// Ring D_n. Without O-terms the result carries `precision`.
DiffOperator parse_operator(std::string_view text, int nvars, long precision);
PowerSeries parse_series(std::string_view text, int nvars, long precision);

// Exact element of Z[x]<d> (integer coefficients, non-negative powers).
IntegerOrePoly parse_integer_ore(std::string_view text);

template <CoefficientField F>
std::string print(const OrePoly<F>& a);
template <CoefficientField F>
std::string print(const LaurentSeries<F>& s);
// The O-term is omitted when the precision equals `default_precision`.
std::string print(const DiffOperator& a, long default_precision);
std::string print(const PowerSeries& p, long default_precision);
std::string print(const IntegerOrePoly& f);

extern template OrePoly<Rational> parse_ore<Rational>(std::string_view, Precision);
extern template OrePoly<RationalFunction> parse_ore<RationalFunction>(std::string_view, Precision);
extern template std::string print<Rational>(const OrePoly<Rational>&);
extern template std::string print<RationalFunction>(const OrePoly<RationalFunction>&);
extern template std::string print<Rational>(const LaurentSeries<Rational>&);
extern template std::string print<RationalFunction>(const LaurentSeries<RationalFunction>&);

} // namespace orekit::text
