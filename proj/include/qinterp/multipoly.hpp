#pragma once

#include <map>
#include <string>
#include <vector>

#include "qinterp/laurent.hpp"
#include "qinterp/qseries.hpp"

namespace qinterp {

// Polynomial in x_1..x_N (non-negative exponents) with LaurentV coefficients.
// Exponent keys are dense vectors of length N. This is the workhorse behind
// divided differences and alternant quotients; symmetric results are handed
// over to SymPoly.
class MultiPoly {
public:
    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
    static MultiPoly constant(int nvars, LaurentV c);
    static MultiPoly variable(int nvars, int i);
    // f(x_i) for a univariate polynomial f.
    static MultiPoly from_univariate(const UniPoly& f, int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, LaurentV>& terms() const { return terms_; }
    int total_degree() const;  // -1 for zero

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const LaurentV& c) const;
    bool operator==(const MultiPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly vars_swapped(int i, int j) const;
    // x_i -> v^k * x_i.
    MultiPoly var_scaled_by_v_pow(int i, int k) const;
    // x_i -> v^k * x_i for every i.
    MultiPoly all_vars_scaled_by_v_pow(int k) const;
    // Substitute x_i = v^e; the result has one variable fewer.
    MultiPoly substituted(int i, int v_exp) const;
    // Full evaluation at the point (v^{e_1}, ..., v^{e_N}).
    LaurentV eval(const std::vector<int>& v_exponents) const;

    // (P - P with x_i <-> x_{i+1}) / (x_i - x_{i+1}); exact by construction.
    MultiPoly divided_difference(int i) const;
    // Exact synthetic division by (x_i - x_j); throws NotDivisible if the
    // remainder (P with x_i := x_j) is nonzero.
    MultiPoly divided_by_var_difference(int i, int j) const;

    bool is_symmetric() const;

    void add_term(std::vector<int> exps, const LaurentV& c);

private:
    int nvars_;
    std::map<std::vector<int>, LaurentV> terms_;
};

}  // namespace qinterp
