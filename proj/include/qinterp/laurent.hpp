#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace qinterp {

using Int = boost::multiprecision::cpp_int;

// Sparse Laurent polynomial in v with arbitrary-precision integer
// coefficients. The convention v^2 = q is used throughout: a "q-polynomial"
// is an element whose v-support is even, and q^k is stored as v^{2k}.
// Canonical form: no zero coefficient is ever stored.
class LaurentV {
public:
    LaurentV() = default;
    LaurentV(long long n);  // NOLINT: implicit constant conversion is intended
    LaurentV(const Int& n);

    // v^e and q^e = v^{2e}.
    static LaurentV v_pow(int e, Int coeff = 1);
    static LaurentV q_pow(int e, Int coeff = 1);
    // {(exponent, coefficient), ...} in v.
    static LaurentV from_v_terms(std::initializer_list<std::pair<int, long long>> terms);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    // True iff every stored v-exponent is even.
    bool is_q_polynomial() const;
    // True iff the minimal v-exponent is >= 0 (no negative powers).
    bool is_polynomial() const;
    // True iff the element is c * v^e for a single term (or zero? no: nonzero).
    bool is_monomial() const { return coeffs_.size() == 1; }
    bool is_unit() const;  // +-v^e

    const std::map<int, Int>& terms() const { return coeffs_; }
    Int coeff_v(int e) const;                  // coefficient of v^e
    Int coeff_q(int e) const { return coeff_v(2 * e); }
    int min_exp() const;                       // requires nonzero
    int max_exp() const;                       // requires nonzero
    int degree_span() const;                   // max - min, requires nonzero
    Int leading_coeff() const;                 // coefficient at max_exp
    Int trailing_coeff() const;                // coefficient at min_exp
    Int content() const;                       // gcd of |coefficients|, 0 for zero
    Int eval_at_one() const;                   // sum of coefficients
    std::size_t term_count() const { return coeffs_.size(); }

    LaurentV operator-() const;
    LaurentV& operator+=(const LaurentV& o);
    LaurentV& operator-=(const LaurentV& o);
    LaurentV& operator*=(const LaurentV& o);
    friend LaurentV operator+(LaurentV a, const LaurentV& b) { return a += b; }
    friend LaurentV operator-(LaurentV a, const LaurentV& b) { return a -= b; }
    friend LaurentV operator*(const LaurentV& a, const LaurentV& b);
    bool operator==(const LaurentV& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const LaurentV& o) const { return !(*this == o); }
    // Deterministic total order (for use as map key).
    bool operator<(const LaurentV& o) const { return coeffs_ < o.coeffs_; }

    LaurentV shifted(int e) const;      // * v^e
    LaurentV scaled(const Int& c) const;
    // v -> v^{-1}; on q-polynomials this is the substitution q -> q^{-1}.
    LaurentV v_inverted() const;
    // Substitute v -> v^k (k != 0); q -> q^k on q-polynomials for k = 2.
    LaurentV v_stretched(int k) const;
    // Divide every coefficient by c exactly; throws NotDivisible otherwise.
    LaurentV scalar_divided(const Int& c) const;

    void add_term(int v_exp, const Int& c);

    // Renders q-polynomials in descending powers of q (explicit q^{-k});
    // elements with odd v-support are rendered in v.
    std::string str() const;

private:
    std::map<int, Int> coeffs_;
};

inline LaurentV operator*(long long c, const LaurentV& p) { return p.scaled(Int(c)); }

// Exact division in Z[v, v^{-1}]; throws NotDivisible (carrying the remainder)
// if d does not divide p. Division by zero is invalid_argument.
LaurentV divide_exact(const LaurentV& p, const LaurentV& d);
bool try_divide(const LaurentV& p, const LaurentV& d, LaurentV& quotient);

// Quotient and remainder of long division by the leading term, after shifting
// both operands to polynomials; remainder is what obstructs exactness.
std::pair<LaurentV, LaurentV> divide_with_remainder(const LaurentV& p, const LaurentV& d);

// GCD in Z[v,v^{-1}] via content splitting and a subresultant remainder
// sequence. Normalized: min exponent 0, positive leading coefficient.
LaurentV laurent_gcd(const LaurentV& a, const LaurentV& b);

}  // namespace qinterp
