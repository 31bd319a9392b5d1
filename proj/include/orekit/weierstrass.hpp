#pragma once

#include <vector>

#include "orekit/diff_operator.hpp"

namespace orekit {

struct PositionResult {
    bool in_position = false;
    bool determined = false;  // false when the restriction vanishes at precision
    long k = 0;               // valuation of p(0,..,x_s,..,0)
};

PositionResult weierstrass_position(const PowerSeries& p, int s);

// A change x_i -> x_i + c_i x_s (i != s).
struct ChangeResult {
    bool found = false;
    std::vector<long> shifts;  // c_i, with c_s = 0
    RationalMatrix map;
    long tried = 0;
};

RationalMatrix shift_matrix(const std::vector<long>& shifts, int s);

// Integer tuples (c_i)_{i != s} by max-norm, then lexicographically in the
// order 0, 1, -1, 2, -2, ...; the zero tuple comes first.
std::vector<std::vector<long>> change_candidates(int nvars, int s, long bound);

// First change after which every series restricts to x_s with valuation equal
// to its total valuation.
ChangeResult generic_change(const std::vector<PowerSeries>& ps, int s, long bound = 8);

// p = unit * wpoly with wpoly = x_s^k + b_{k-1} x_s^(k-1) + ... + b_0, b_j(0) = 0.
struct WeierstrassFactorization {
    int s = 0;
    long k = 0;
    PowerSeries unit;
    PowerSeries wpoly;
    std::vector<PowerSeries> b;  // b_0 .. b_{k-1}, free of x_s
    // Total degree below which unit and wpoly are determined by the input. With
    // input precision N this is N for k = 0 and floor((N - 1) / k) otherwise.
    long precision = 0;
};

enum class PrepareMethod {
    division,  // fixed-point Weierstrass division of x_s^k by p
    graded,    // degree-by-degree solve in the other variables
};

WeierstrassFactorization weierstrass_prepare(const PowerSeries& p, int s,
                                             PrepareMethod method = PrepareMethod::division);

// omega * (x_s^x_power d_s^d_power) * G with G free of x_s and d_s.
struct DecompositionTerm {
    PowerSeries omega;
    long x_power = 0;
    long d_power = 0;
    DiffOperator G;
};

DiffOperator beta_operator(const DecompositionTerm& t, int s, int nvars, long precision);

struct Decomposition {
    int s = 0;
    ChangeResult change;        // applied before preparing the coefficients
    DiffOperator transformed;   // v after the change
    std::vector<DecompositionTerm> terms;
    long precision = 0;         // least precision over the prepared coefficients
};

// Splits every coefficient p_alpha of v (after a change putting all of them in
// Weierstrass position along x_s, s = r) as u * sum_j b_j x_s^j.
Decomposition decompose_operator(const DiffOperator& v, int r, long bound = 8);

// Every beta is a pure (x_s, d_s) monomial and every G avoids x_s and d_s.
bool decomposition_shape_ok(const Decomposition& d);

// Re-expands sum omega * beta * G with operator multiplication and compares it
// with v after the recorded change, at the precision the product carries.
Verdict verify_decomposition(const DiffOperator& v, const Decomposition& d);

} // namespace orekit
