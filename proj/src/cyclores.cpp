#include "qinterp/cyclores.hpp"

#include <sstream>
#include <stdexcept>

#include "qinterp/errors.hpp"
#include "qinterp/qseries.hpp"

namespace qinterp {

namespace {

std::vector<Int> phi_dense(int n) {
    const LaurentV phi = cyclotomic(n);
    std::vector<Int> d(static_cast<std::size_t>(phi.max_exp() / 2) + 1, Int(0));
    for (const auto& [e, c] : phi.terms()) d[static_cast<std::size_t>(e / 2)] = c;
    return d;
}

// Reduce a dense q-coefficient vector modulo Phi_n (monic).
void reduce_mod_phi(std::vector<Int>& a, const std::vector<Int>& phi) {
    const int dp = static_cast<int>(phi.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= dp; --i) {
        const Int top = a[static_cast<std::size_t>(i)];
        if (top == 0) continue;
        for (int j = 0; j <= dp; ++j)
            a[static_cast<std::size_t>(i - dp + j)] -= top * phi[static_cast<std::size_t>(j)];
    }
    a.resize(static_cast<std::size_t>(dp));
}

}  // namespace

CyclotomicResidue::CyclotomicResidue(int order) : order_(order) {
    if (order < 1) throw std::invalid_argument("CyclotomicResidue: order must be >= 1");
    coeffs_.assign(phi_dense(order).size() - 1, Int(0));
}

CyclotomicResidue::CyclotomicResidue(int order, std::vector<Int> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
    if (order < 1) throw std::invalid_argument("CyclotomicResidue: order must be >= 1");
    const std::size_t deg = phi_dense(order).size() - 1;
    if (coeffs_.size() != deg)
        throw std::invalid_argument("CyclotomicResidue: coefficient vector has wrong length");
}

CyclotomicResidue CyclotomicResidue::q_power(int e, int order) {
    return eval_at_root(LaurentV::q_pow(e), order);
}

bool CyclotomicResidue::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicResidue::is_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Int CyclotomicResidue::integer_value() const {
    if (!is_integer()) throw std::invalid_argument("residue is not an integer");
    return coeffs_.empty() ? Int(0) : coeffs_[0];
}

CyclotomicResidue CyclotomicResidue::operator-() const {
    CyclotomicResidue r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CyclotomicResidue& CyclotomicResidue::operator+=(const CyclotomicResidue& o) {
    if (order_ != o.order_) throw std::invalid_argument("residue order mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicResidue& CyclotomicResidue::operator-=(const CyclotomicResidue& o) {
    if (order_ != o.order_) throw std::invalid_argument("residue order mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CyclotomicResidue operator*(const CyclotomicResidue& a, const CyclotomicResidue& b) {
    if (a.order() != b.order()) throw std::invalid_argument("residue order mismatch");
    const std::vector<Int> phi = phi_dense(a.order());
    std::vector<Int> prod(a.coeffs().size() + b.coeffs().size(), Int(0));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            prod[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    reduce_mod_phi(prod, phi);
    return CyclotomicResidue(a.order(), std::move(prod));
}

std::string CyclotomicResidue::str() const {
    LaurentV p;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        p.add_term(2 * static_cast<int>(i), coeffs_[i]);
    std::ostringstream out;
    out << p.str() << " (mod Phi_" << order_ << ")";
    return out.str();
}

CyclotomicResidue eval_at_root(const LaurentV& p, int n) {
    if (!p.is_q_polynomial())
        throw std::invalid_argument(
            "eval_at_root: input has odd v-exponents; value would need a 2n-th root");
    const std::vector<Int> phi = phi_dense(n);
    const int deg = static_cast<int>(phi.size()) - 1;

    // Residue of q and of q^{-1} = -Phi_n(0)^{-1} * (Phi_n - Phi_n(0))/q.
    auto residue_pow = [&](const CyclotomicResidue& base, int e) {
        CyclotomicResidue acc(n, [&] {
            std::vector<Int> one(static_cast<std::size_t>(deg), Int(0));
            if (deg > 0) one[0] = 1;
            return one;
        }());
        CyclotomicResidue sq = base;
        for (int k = e; k > 0; k >>= 1) {
            if (k & 1) acc = acc * sq;
            sq = sq * sq;
        }
        return acc;
    };

    std::vector<Int> qv(static_cast<std::size_t>(deg), Int(0));
    if (deg >= 2) {
        qv[1] = 1;
    } else if (deg == 1) {
        // Phi_1 = q - 1 or Phi_2 = q + 1: q reduces to an integer.
        qv[0] = -phi[0];
    }
    const CyclotomicResidue q_res(n, qv);

    std::vector<Int> inv(static_cast<std::size_t>(deg), Int(0));
    const Int a0 = phi[0];  // +-1
    for (int i = 1; i <= deg; ++i) {
        // q^{-1} = -a0^{-1} * sum_{i>=1} phi_i q^{i-1}
        if (i - 1 < deg) inv[static_cast<std::size_t>(i - 1)] = -a0 * phi[static_cast<std::size_t>(i)];
    }
    const CyclotomicResidue qinv_res(n, inv);

    CyclotomicResidue out(n);
    for (const auto& [ve, c] : p.terms()) {
        const int e = ve / 2;
        CyclotomicResidue term =
            e >= 0 ? residue_pow(q_res, e) : residue_pow(qinv_res, -e);
        std::vector<Int> scaled = term.coeffs();
        for (auto& x : scaled) x *= c;
        out += CyclotomicResidue(n, std::move(scaled));
    }
    return out;
}

}  // namespace qinterp
