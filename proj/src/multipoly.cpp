#include "qinterp/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "qinterp/errors.hpp"

namespace qinterp {

MultiPoly MultiPoly::constant(int nvars, LaurentV c) {
    MultiPoly p(nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("MultiPoly::variable index");
    MultiPoly p(nvars);
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(std::move(e), LaurentV(1));
    return p;
}

MultiPoly MultiPoly::from_univariate(const UniPoly& f, int nvars, int i) {
    if (i < 0 || i >= nvars) throw std::invalid_argument("MultiPoly::from_univariate index");
    MultiPoly p(nvars);
    for (int k = 0; k <= f.degree(); ++k) {
        if (f.coeff(k).is_zero()) continue;
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i)] = k;
        p.add_term(std::move(e), f.coeff(k));
    }
    return p;
}

int MultiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void MultiPoly::add_term(std::vector<int> exps, const LaurentV& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::add_term: exponent length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(exps), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("MultiPoly: nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("MultiPoly: nvars mismatch");
    MultiPoly r(a.nvars());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            std::vector<int> e(ea.size());
            for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            r.add_term(std::move(e), ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const LaurentV& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
    return r;
}

MultiPoly MultiPoly::vars_swapped(int i, int j) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        std::vector<int> f = e;
        std::swap(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(j)]);
        r.add_term(std::move(f), c);
    }
    return r;
}

MultiPoly MultiPoly::var_scaled_by_v_pow(int i, int k) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        r.terms_.emplace(e, c.shifted(k * e[static_cast<std::size_t>(i)]));
    return r;
}

MultiPoly MultiPoly::all_vars_scaled_by_v_pow(int k) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        int deg = 0;
        for (int x : e) deg += x;
        r.terms_.emplace(e, c.shifted(k * deg));
    }
    return r;
}

MultiPoly MultiPoly::substituted(int i, int v_exp) const {
    MultiPoly r(nvars_ - 1);
    for (const auto& [e, c] : terms_) {
        std::vector<int> f;
        f.reserve(e.size() - 1);
        for (std::size_t k = 0; k < e.size(); ++k)
            if (static_cast<int>(k) != i) f.push_back(e[k]);
        r.add_term(std::move(f), c.shifted(v_exp * e[static_cast<std::size_t>(i)]));
    }
    return r;
}

LaurentV MultiPoly::eval(const std::vector<int>& v_exponents) const {
    if (static_cast<int>(v_exponents.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::eval: point length mismatch");
    LaurentV out;
    for (const auto& [e, c] : terms_) {
        int shift = 0;
        for (std::size_t k = 0; k < e.size(); ++k) shift += e[k] * v_exponents[k];
        out += c.shifted(shift);
    }
    return out;
}

MultiPoly MultiPoly::divided_by_var_difference(int i, int j) const {
    // Treat the polynomial as a polynomial in x_i; synthetic division by
    // (x_i - x_j) never divides coefficients, so it stays exact over Z.
    // quotient_{k-1} = a_k + x_j * quotient_k, descending in k.
    if (is_zero()) return MultiPoly(nvars_);
    int top = 0;
    for (const auto& [e, c] : terms_) top = std::max(top, e[static_cast<std::size_t>(i)]);

    // Slice into coefficients of x_i^k (keys keep a zero at slot i).
    std::vector<MultiPoly> slice(static_cast<std::size_t>(top) + 1, MultiPoly(nvars_));
    for (const auto& [e, c] : terms_) {
        std::vector<int> f = e;
        const int k = f[static_cast<std::size_t>(i)];
        f[static_cast<std::size_t>(i)] = 0;
        slice[static_cast<std::size_t>(k)].add_term(std::move(f), c);
    }

    const MultiPoly xj = MultiPoly::variable(nvars_, j);
    MultiPoly carry = slice[static_cast<std::size_t>(top)];  // quotient coeff of x_i^{top-1}
    MultiPoly quotient(nvars_);
    for (int k = top - 1; k >= 0; --k) {
        for (const auto& [e, c] : carry.terms()) {
            std::vector<int> f = e;
            f[static_cast<std::size_t>(i)] += k;
            quotient.add_term(std::move(f), c);
        }
        if (k > 0)
            carry = slice[static_cast<std::size_t>(k)] + xj * carry;
        else
            carry = slice[0] + xj * carry;  // remainder = P with x_i := x_j
    }
    if (top == 0) carry = slice[0];
    if (!carry.is_zero())
        throw NotDivisible("polynomial not divisible by variable difference");
    return quotient;
}

MultiPoly MultiPoly::divided_difference(int i) const {
    if (i < 0 || i + 1 >= nvars_) throw std::invalid_argument("divided_difference index");
    MultiPoly num = *this - vars_swapped(i, i + 1);
    return num.divided_by_var_difference(i, i + 1);
}

bool MultiPoly::is_symmetric() const {
    for (int i = 0; i + 1 < nvars_; ++i)
        if (vars_swapped(i, i + 1) != *this) return false;
    return true;
}

}  // namespace qinterp
