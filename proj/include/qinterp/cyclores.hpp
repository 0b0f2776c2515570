#pragma once

#include <string>
#include <vector>

#include "qinterp/laurent.hpp"

namespace qinterp {

// Residue class in Z[q] / Phi_n(q), stored on the basis 1, q, ..., q^{phi(n)-1}.
// q is invertible in this ring (the constant term of Phi_n is a unit), so
// arbitrary q-Laurent polynomials evaluate here.
class CyclotomicResidue {
public:
    explicit CyclotomicResidue(int order);
    CyclotomicResidue(int order, std::vector<Int> coeffs);  // reduced on entry

    static CyclotomicResidue q_power(int e, int order);

    int order() const { return order_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const;
    bool is_integer() const;   // supported on the constant basis vector only
    Int integer_value() const; // requires is_integer()

    CyclotomicResidue operator-() const;
    CyclotomicResidue& operator+=(const CyclotomicResidue& o);
    CyclotomicResidue& operator-=(const CyclotomicResidue& o);
    friend CyclotomicResidue operator+(CyclotomicResidue a, const CyclotomicResidue& b) {
        return a += b;
    }
    friend CyclotomicResidue operator-(CyclotomicResidue a, const CyclotomicResidue& b) {
        return a -= b;
    }
    friend CyclotomicResidue operator*(const CyclotomicResidue& a, const CyclotomicResidue& b);
    bool operator==(const CyclotomicResidue& o) const {
        return order_ == o.order_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const CyclotomicResidue& o) const { return !(*this == o); }

    std::string str() const;

private:
    int order_;
    std::vector<Int> coeffs_;  // length phi(order)
};

// Residue of a q-polynomial (even v-support) in Z[q]/Phi_n; q^{-1} maps to the
// inverse residue. Inputs with odd v-exponents are rejected.
CyclotomicResidue eval_at_root(const LaurentV& p, int n);

}  // namespace qinterp
