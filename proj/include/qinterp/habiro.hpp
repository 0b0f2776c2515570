#pragma once

#include <vector>

#include "qinterp/cyclores.hpp"
#include "qinterp/laurent.hpp"

namespace qinterp {

// Residue class in Z[q,q^{-1}] / ((q;q)_T) at truncation order T >= 1. The
// canonical representative is the remainder modulo (q;q)_T: a q-polynomial of
// q-degree < T(T+1)/2 with no negative powers. q is invertible in this ring,
// with q^{-1} represented by the truncated series sum_{m<T} q^m (q;q)_m.
class HabiroElement {
public:
    explicit HabiroElement(int trunc);

    // Embeds a q-Laurent polynomial (negative powers eliminated through the
    // inverse series). Rejects odd v-exponents.
    static HabiroElement embed(const LaurentV& p, int trunc);
    // sum_{n < T} terms[n] * (q;q)_n reduced to canonical form; terms with
    // n >= T are ignored (they lie in the ideal).
    static HabiroElement from_series(const std::vector<LaurentV>& terms, int trunc);
    static HabiroElement one(int trunc) { return embed(LaurentV(1), trunc); }

    int trunc() const { return trunc_; }
    const LaurentV& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    HabiroElement operator-() const;
    HabiroElement& operator+=(const HabiroElement& o);
    HabiroElement& operator-=(const HabiroElement& o);
    friend HabiroElement operator+(HabiroElement a, const HabiroElement& b) { return a += b; }
    friend HabiroElement operator-(HabiroElement a, const HabiroElement& b) { return a -= b; }
    friend HabiroElement operator*(const HabiroElement& a, const HabiroElement& b);
    bool operator==(const HabiroElement& o) const {
        return trunc_ == o.trunc_ && rep_ == o.rep_;
    }
    bool operator!=(const HabiroElement& o) const { return !(*this == o); }

    // Reduce to a coarser truncation T' <= T.
    HabiroElement reduce_to(int trunc) const;

    // Evaluation at a primitive n-th root of unity, well defined for n <= T
    // (the ideal vanishes there); out-of-range orders are rejected.
    CyclotomicResidue eval_root(int n) const;
    // Taylor coefficients at q = 1 up to order k <= T-1 (the digits beyond
    // are not determined by the truncation).
    std::vector<Int> taylor_at_1(int k) const;
    // True iff the candidate Laurent polynomial reduces to this class.
    bool laurent_membership(const LaurentV& candidate) const;

private:
    int trunc_;
    LaurentV rep_;
};

// Remainder of a q-polynomial modulo (q;q)_T (leading coefficient is a unit).
LaurentV reduce_mod_poch(const LaurentV& p, int trunc);

}  // namespace qinterp
