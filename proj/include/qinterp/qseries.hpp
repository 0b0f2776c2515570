#pragma once

#include <vector>

#include "qinterp/laurent.hpp"

namespace qinterp {

// (q;q)_m = (1-q)(1-q^2)...(1-q^m).
LaurentV poch(int m);

// (q^s;q)_m = (1-q^s)(1-q^{s+1})...(1-q^{s+m-1}).
LaurentV shifted_poch(int s, int m);

// Gaussian binomial [a choose b]_q; zero for b < 0 or b > a.
LaurentV qbinom(int a, int b);

// Balanced quantum number [a] = (v^a - v^{-a})/(v - v^{-1}), odd in a.
LaurentV balanced_qnum(int a);
// {a} = v^a - v^{-a}.
LaurentV balanced_brace(int a);
// [a]! = [1][2]...[a], a >= 0.
LaurentV balanced_qfact(int a);
// Balanced binomial [a over b] = {a}!/({b}!{a-b}!); zero unless 0 <= b <= a.
LaurentV balanced_qbinom(int a, int b);

// n-th cyclotomic polynomial in q (memoized).
LaurentV cyclotomic(int n);

// Dense polynomial in an abstract variable x with LaurentV coefficients.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(LaurentV constant);
    static UniPoly x();
    static UniPoly from_coeffs(std::vector<LaurentV> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
    const LaurentV& coeff(int k) const;
    const std::vector<LaurentV>& coeffs() const { return coeffs_; }

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const LaurentV& c) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    LaurentV eval(const LaurentV& x) const;
    // x -> v^k x (coefficient of x^j gets multiplied by v^{kj}).
    UniPoly arg_scaled_by_v_pow(int k) const;

private:
    void trim();
    std::vector<LaurentV> coeffs_;
};

}  // namespace qinterp
