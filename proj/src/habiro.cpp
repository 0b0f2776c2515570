#include "qinterp/habiro.hpp"

#include <stdexcept>

#include "qinterp/errors.hpp"
#include "qinterp/qseries.hpp"

namespace qinterp {

LaurentV reduce_mod_poch(const LaurentV& p, int trunc) {
    if (!p.is_q_polynomial())
        throw std::invalid_argument("reduce_mod_poch: input has odd v-exponents");
    if (!p.is_polynomial())
        throw std::invalid_argument("reduce_mod_poch: input has negative exponents");
    if (p.is_zero()) return p;

    // Long division by (q;q)_T in absolute q-exponents; the leading
    // coefficient is +-1, so the quotient stays integral.
    const LaurentV gen = poch(trunc);
    const int D = gen.max_exp() / 2;
    std::vector<Int> g(static_cast<std::size_t>(D) + 1, Int(0));
    for (const auto& [ve, c] : gen.terms()) g[static_cast<std::size_t>(ve / 2)] = c;

    std::vector<Int> a(static_cast<std::size_t>(p.max_exp() / 2) + 1, Int(0));
    for (const auto& [ve, c] : p.terms()) a[static_cast<std::size_t>(ve / 2)] = c;
    const Int lead = g[static_cast<std::size_t>(D)];  // +-1
    for (int i = static_cast<int>(a.size()) - 1; i >= D; --i) {
        if (a[static_cast<std::size_t>(i)] == 0) continue;
        const Int factor = a[static_cast<std::size_t>(i)] / lead;
        for (int j = 0; j <= D; ++j)
            a[static_cast<std::size_t>(i - D + j)] -= factor * g[static_cast<std::size_t>(j)];
    }
    LaurentV out;
    for (int i = 0; i < D && i < static_cast<int>(a.size()); ++i)
        out.add_term(2 * i, a[static_cast<std::size_t>(i)]);
    return out;
}

HabiroElement::HabiroElement(int trunc) : trunc_(trunc) {
    if (trunc < 1) throw std::invalid_argument("HabiroElement: truncation must be >= 1");
}

HabiroElement HabiroElement::embed(const LaurentV& p, int trunc) {
    HabiroElement h(trunc);
    if (!p.is_q_polynomial())
        throw std::invalid_argument("HabiroElement::embed: odd v-exponents rejected");
    if (p.is_zero()) return h;

    // q^{-1} = sum_{m=0}^{T-1} q^m (q;q)_m modulo (q;q)_T: indeed
    // q * sum - 1 = -(q;q)_T.
    LaurentV inv;
    for (int m = 0; m < trunc; ++m) inv += poch(m).shifted(2 * m);
    inv = reduce_mod_poch(inv, trunc);

    const int lo = p.min_exp() / 2;
    LaurentV acc;
    if (lo >= 0) {
        acc = p;
    } else {
        // p * q^{-lo} is a polynomial; multiply by inv^{-lo} afterwards.
        LaurentV shifted = p.shifted(-2 * lo);
        LaurentV inv_pow = 1;
        for (int t = 0; t < -lo; ++t) inv_pow = reduce_mod_poch(inv_pow * inv, trunc);
        acc = shifted * inv_pow;
    }
    h.rep_ = reduce_mod_poch(acc, trunc);
    return h;
}

HabiroElement HabiroElement::from_series(const std::vector<LaurentV>& terms, int trunc) {
    HabiroElement h(trunc);
    LaurentV acc;
    for (std::size_t n = 0; n < terms.size() && n < static_cast<std::size_t>(trunc); ++n)
        acc += terms[n] * poch(static_cast<int>(n));
    return embed(acc, trunc);
}

HabiroElement HabiroElement::operator-() const {
    HabiroElement r(trunc_);
    r.rep_ = -rep_;
    return r;
}

HabiroElement& HabiroElement::operator+=(const HabiroElement& o) {
    if (trunc_ != o.trunc_) throw std::invalid_argument("HabiroElement: truncation mismatch");
    rep_ = reduce_mod_poch(rep_ + o.rep_, trunc_);
    return *this;
}

HabiroElement& HabiroElement::operator-=(const HabiroElement& o) {
    if (trunc_ != o.trunc_) throw std::invalid_argument("HabiroElement: truncation mismatch");
    rep_ = reduce_mod_poch(rep_ - o.rep_, trunc_);
    return *this;
}

HabiroElement operator*(const HabiroElement& a, const HabiroElement& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("HabiroElement: truncation mismatch");
    HabiroElement r(a.trunc());
    r.rep_ = reduce_mod_poch(a.rep() * b.rep(), a.trunc());
    return r;
}

HabiroElement HabiroElement::reduce_to(int trunc) const {
    if (trunc > trunc_)
        throw std::invalid_argument("HabiroElement::reduce_to: cannot refine a truncation");
    HabiroElement r(trunc);
    r.rep_ = reduce_mod_poch(rep_, trunc);
    return r;
}

CyclotomicResidue HabiroElement::eval_root(int n) const {
    if (n < 1 || n > trunc_)
        throw std::invalid_argument(
            "eval_root: order " + std::to_string(n) + " is not determined at truncation " +
            std::to_string(trunc_));
    return qinterp::eval_at_root(rep_, n);
}

std::vector<Int> HabiroElement::taylor_at_1(int k) const {
    if (k < 0 || k > trunc_ - 1)
        throw std::invalid_argument(
            "taylor_at_1: digit count " + std::to_string(k) + " exceeds truncation guarantee " +
            std::to_string(trunc_ - 1));
    // Expand rep(1 + u) and read off the coefficients of u^0..u^k.
    std::vector<Int> digits(static_cast<std::size_t>(k) + 1, Int(0));
    for (const auto& [ve, c] : rep_.terms()) {
        const int e = ve / 2;
        // (1+u)^e: binomials.
        Int coeff = 1;
        for (int j = 0; j <= k; ++j) {
            if (j > e) break;
            if (j > 0) coeff = coeff * (e - j + 1) / j;
            digits[static_cast<std::size_t>(j)] += c * coeff;
        }
    }
    return digits;
}

bool HabiroElement::laurent_membership(const LaurentV& candidate) const {
    return embed(candidate, trunc_) == *this;
}

}  // namespace qinterp
