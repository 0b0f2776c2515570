#include "qinterp/qseries.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

#include "qinterp/errors.hpp"

namespace qinterp {

LaurentV poch(int m) {
    if (m < 0) throw std::invalid_argument("poch: m must be >= 0");
    LaurentV r = 1;
    for (int i = 1; i <= m; ++i) r *= (LaurentV(1) - LaurentV::q_pow(i));
    return r;
}

LaurentV shifted_poch(int s, int m) {
    if (m < 0) throw std::invalid_argument("shifted_poch: m must be >= 0");
    LaurentV r = 1;
    for (int i = 0; i < m; ++i) r *= (LaurentV(1) - LaurentV::q_pow(s + i));
    return r;
}

LaurentV qbinom(int a, int b) {
    if (a < 0) throw std::invalid_argument("qbinom: a must be >= 0");
    if (b < 0 || b > a) return LaurentV();
    if (2 * b > a) b = a - b;
    // (1-q^a)...(1-q^{a-b+1}) / (q;q)_b, exact.
    LaurentV num = 1;
    for (int i = 0; i < b; ++i) num *= (LaurentV(1) - LaurentV::q_pow(a - i));
    return divide_exact(num, poch(b));
}

LaurentV balanced_brace(int a) {
    return LaurentV::v_pow(a) - LaurentV::v_pow(-a);
}

LaurentV balanced_qnum(int a) {
    // [a] = v^{a-1} + v^{a-3} + ... + v^{1-a}; [-a] = -[a], [0] = 0.
    LaurentV r;
    const int n = a < 0 ? -a : a;
    for (int e = 1 - n; e <= n - 1; e += 2) r.add_term(e, a < 0 ? -1 : 1);
    return r;
}

LaurentV balanced_qfact(int a) {
    if (a < 0) throw std::invalid_argument("balanced_qfact: a must be >= 0");
    LaurentV r = 1;
    for (int i = 1; i <= a; ++i) r *= balanced_qnum(i);
    return r;
}

LaurentV balanced_qbinom(int a, int b) {
    if (b < 0 || b > a) return LaurentV();
    if (2 * b > a) b = a - b;
    LaurentV num = 1;
    for (int i = 0; i < b; ++i) num *= balanced_qnum(a - i);
    return divide_exact(num, balanced_qfact(b));
}

LaurentV cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    static std::unordered_map<int, LaurentV> memo;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    // Phi_k = (q^k - 1) / prod_{d | k, d < k} Phi_d, filled over divisors of n
    // in increasing order so every needed Phi_d is already present.
    for (int k = 1; k <= n; ++k) {
        if (n % k != 0 || memo.count(k)) continue;
        LaurentV den = 1;
        for (int d = 1; d < k; ++d)
            if (k % d == 0) den *= memo.at(d);
        memo.emplace(k, divide_exact(LaurentV::q_pow(k) - LaurentV(1), den));
    }
    return memo.at(n);
}

UniPoly::UniPoly(LaurentV constant) {
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
}

UniPoly UniPoly::x() {
    UniPoly p;
    p.coeffs_ = {LaurentV(), LaurentV(1)};
    return p;
}

UniPoly UniPoly::from_coeffs(std::vector<LaurentV> coeffs) {
    UniPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
}

const LaurentV& UniPoly::coeff(int k) const {
    static const LaurentV zero;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<std::size_t>(k)];
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, LaurentV());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const LaurentV& c) const {
    UniPoly r = *this;
    for (auto& co : r.coeffs_) co *= c;
    r.trim();
    return r;
}

LaurentV UniPoly::eval(const LaurentV& x) const {
    LaurentV r;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::arg_scaled_by_v_pow(int k) const {
    UniPoly r = *this;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
        r.coeffs_[j] = r.coeffs_[j].shifted(k * static_cast<int>(j));
    r.trim();
    return r;
}

}  // namespace qinterp
