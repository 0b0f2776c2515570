#pragma once

#include <string>

#include "qinterp/laurent.hpp"

namespace qinterp {

// Reduced fraction of Laurent polynomials. Canonical form: numerator and
// denominator share no nonconstant factor, the denominator is a polynomial
// with minimal exponent 0 and positive leading coefficient, and integer
// content common to both parts is divided out. Equality is structural.
//
// Interpolation-matrix entries are fractions of q-polynomials; the same type
// also carries balanced (odd v-power) fractions where intermediate
// computations need them.
class RationalQ {
public:
    RationalQ() : num_(), den_(1) {}
    RationalQ(LaurentV n) : num_(std::move(n)), den_(1) {}  // NOLINT
    RationalQ(long long n) : num_(n), den_(1) {}            // NOLINT
    RationalQ(LaurentV n, LaurentV d);

    const LaurentV& num() const { return num_; }
    const LaurentV& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_one(); }
    // Numerator, requiring denominator 1; throws NotDivisible otherwise.
    LaurentV as_laurent() const;
    // True iff both parts are q-polynomials (even v-support).
    bool is_q_rational() const { return num_.is_q_polynomial() && den_.is_q_polynomial(); }

    RationalQ operator-() const;
    RationalQ& operator+=(const RationalQ& o);
    RationalQ& operator-=(const RationalQ& o);
    RationalQ& operator*=(const RationalQ& o);
    RationalQ& operator/=(const RationalQ& o);
    friend RationalQ operator+(RationalQ a, const RationalQ& b) { return a += b; }
    friend RationalQ operator-(RationalQ a, const RationalQ& b) { return a -= b; }
    friend RationalQ operator*(RationalQ a, const RationalQ& b) { return a *= b; }
    friend RationalQ operator/(RationalQ a, const RationalQ& b) { return a /= b; }
    bool operator==(const RationalQ& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalQ& o) const { return !(*this == o); }

    RationalQ inverse() const;
    // q -> q^{-1} (v -> v^{-1} on both parts, renormalized).
    RationalQ q_inverted() const;

    std::string str() const;

private:
    void normalize();
    LaurentV num_, den_;
};

}  // namespace qinterp
