#include "qinterp/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "qinterp/errors.hpp"

namespace qinterp {

LaurentV::LaurentV(long long n) {
    if (n != 0) coeffs_[0] = n;
}

LaurentV::LaurentV(const Int& n) {
    if (n != 0) coeffs_[0] = n;
}

LaurentV LaurentV::v_pow(int e, Int coeff) {
    LaurentV r;
    if (coeff != 0) r.coeffs_[e] = std::move(coeff);
    return r;
}

LaurentV LaurentV::q_pow(int e, Int coeff) { return v_pow(2 * e, std::move(coeff)); }

LaurentV LaurentV::from_v_terms(std::initializer_list<std::pair<int, long long>> terms) {
    LaurentV r;
    for (const auto& [e, c] : terms) r.add_term(e, c);
    return r;
}

bool LaurentV::is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 && coeffs_.begin()->second == 1;
}

bool LaurentV::is_q_polynomial() const {
    for (const auto& [e, c] : coeffs_)
        if (e % 2 != 0) return false;
    return true;
}

bool LaurentV::is_polynomial() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }

bool LaurentV::is_unit() const {
    if (coeffs_.size() != 1) return false;
    const Int& c = coeffs_.begin()->second;
    return c == 1 || c == -1;
}

Int LaurentV::coeff_v(int e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Int(0) : it->second;
}

int LaurentV::min_exp() const {
    if (coeffs_.empty()) throw std::invalid_argument("min_exp of zero");
    return coeffs_.begin()->first;
}

int LaurentV::max_exp() const {
    if (coeffs_.empty()) throw std::invalid_argument("max_exp of zero");
    return coeffs_.rbegin()->first;
}

int LaurentV::degree_span() const { return max_exp() - min_exp(); }

Int LaurentV::leading_coeff() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.rbegin()->second;
}

Int LaurentV::trailing_coeff() const {
    if (coeffs_.empty()) return 0;
    return coeffs_.begin()->second;
}

Int LaurentV::content() const {
    Int g = 0;
    for (const auto& [e, c] : coeffs_) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

Int LaurentV::eval_at_one() const {
    Int s = 0;
    for (const auto& [e, c] : coeffs_) s += c;
    return s;
}

LaurentV LaurentV::operator-() const {
    LaurentV r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e] = -c;
    return r;
}

LaurentV& LaurentV::operator+=(const LaurentV& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, c);
    return *this;
}

LaurentV& LaurentV::operator-=(const LaurentV& o) {
    for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
    return *this;
}

LaurentV operator*(const LaurentV& a, const LaurentV& b) {
    LaurentV r;
    if (a.is_zero() || b.is_zero()) return r;
    std::map<int, Int> acc;
    for (const auto& [ea, ca] : a.coeffs_)
        for (const auto& [eb, cb] : b.coeffs_) acc[ea + eb] += ca * cb;
    for (auto& [e, c] : acc)
        if (c != 0) r.coeffs_.emplace(e, std::move(c));
    return r;
}

LaurentV& LaurentV::operator*=(const LaurentV& o) {
    *this = *this * o;
    return *this;
}

LaurentV LaurentV::shifted(int e) const {
    LaurentV r;
    for (const auto& [ex, c] : coeffs_) r.coeffs_[ex + e] = c;
    return r;
}

LaurentV LaurentV::scaled(const Int& c) const {
    LaurentV r;
    if (c == 0) return r;
    for (const auto& [e, co] : coeffs_) r.coeffs_[e] = co * c;
    return r;
}

LaurentV LaurentV::v_inverted() const {
    LaurentV r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
}

LaurentV LaurentV::v_stretched(int k) const {
    if (k == 0) throw std::invalid_argument("v_stretched(0)");
    LaurentV r;
    for (const auto& [e, c] : coeffs_) r.coeffs_[e * k] = c;
    return r;
}

LaurentV LaurentV::scalar_divided(const Int& c) const {
    if (c == 0) throw std::invalid_argument("scalar division by zero");
    LaurentV r;
    for (const auto& [e, co] : coeffs_) {
        if (co % c != 0)
            throw NotDivisible("coefficient " + co.str() + " not divisible by " + c.str());
        r.coeffs_[e] = co / c;
    }
    return r;
}

void LaurentV::add_term(int v_exp, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coeffs_.emplace(v_exp, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) coeffs_.erase(it);
    }
}

namespace {

void append_power(std::ostringstream& out, const char* var, int e) {
    if (e == 0) return;
    out << var;
    if (e != 1) out << "^" << (e < 0 ? "{" : "") << e << (e < 0 ? "}" : "");
}

}  // namespace

std::string LaurentV::str() const {
    if (coeffs_.empty()) return "0";
    const bool in_q = is_q_polynomial();
    const char* var = in_q ? "q" : "v";
    std::ostringstream out;
    bool first = true;
    // Descending powers.
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        const int e = in_q ? it->first / 2 : it->first;
        Int c = it->second;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (c != 1 || e == 0) out << c.str();
        if (c != 1 && e != 0) out << "*";
        append_power(out, var, e);
    }
    return out.str();
}

namespace {

// Dense coefficient vector of the shifted polynomial (min exponent 0).
std::vector<Int> to_dense(const LaurentV& p) {
    std::vector<Int> d(static_cast<std::size_t>(p.degree_span()) + 1, Int(0));
    const int lo = p.min_exp();
    for (const auto& [e, c] : p.terms()) d[static_cast<std::size_t>(e - lo)] = c;
    return d;
}

LaurentV from_dense(const std::vector<Int>& d, int shift) {
    LaurentV r;
    for (std::size_t i = 0; i < d.size(); ++i)
        r.add_term(static_cast<int>(i) + shift, d[i]);
    return r;
}

int dense_degree(const std::vector<Int>& d) {
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
        if (d[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

}  // namespace

std::pair<LaurentV, LaurentV> divide_with_remainder(const LaurentV& p, const LaurentV& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) return {LaurentV(), LaurentV()};

    const int shift = p.min_exp() - d.min_exp();
    std::vector<Int> r = to_dense(p);
    const std::vector<Int> b = to_dense(d);
    const int db = dense_degree(b);
    const Int& lead = b[static_cast<std::size_t>(db)];

    std::vector<Int> q(r.size(), Int(0));
    int dr = dense_degree(r);
    while (dr >= db) {
        const Int& top = r[static_cast<std::size_t>(dr)];
        if (top % lead != 0) break;  // cannot continue exactly over Z
        const Int factor = top / lead;
        const int pos = dr - db;
        q[static_cast<std::size_t>(pos)] = factor;
        for (int i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(pos + i)] -= factor * b[static_cast<std::size_t>(i)];
        dr = dense_degree(r);
    }
    return {from_dense(q, shift), from_dense(r, p.min_exp())};
}

bool try_divide(const LaurentV& p, const LaurentV& d, LaurentV& quotient) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) {
        quotient = LaurentV();
        return true;
    }
    auto [q, r] = divide_with_remainder(p, d);
    if (!r.is_zero()) return false;
    quotient = q;
    return true;
}

LaurentV divide_exact(const LaurentV& p, const LaurentV& d) {
    LaurentV q;
    if (!try_divide(p, d, q))
        throw NotDivisible("(" + p.str() + ") is not divisible by (" + d.str() +
                           "); remainder " + divide_with_remainder(p, d).second.str());
    return q;
}

namespace {

Int int_pow(Int base, int e) {
    Int r = 1;
    while (e-- > 0) r *= base;
    return r;
}

// Pseudo-remainder: lc(b)^{deg a - deg b + 1} * a mod b, dense, over Z.
// When the degree drops by more than one per elimination step the skipped
// multiplier powers are applied at the end, so the result is exactly the
// subresultant-theory pseudo-remainder.
std::vector<Int> pseudo_rem(std::vector<Int> a, const std::vector<Int>& b) {
    const int db = dense_degree(b);
    const Int& lb = b[static_cast<std::size_t>(db)];
    int da = dense_degree(a);
    int pending = da - db + 1;
    while (da >= db) {
        const Int top = a[static_cast<std::size_t>(da)];
        for (auto& c : a) c *= lb;
        --pending;
        const int pos = da - db;
        for (int i = 0; i <= db; ++i)
            a[static_cast<std::size_t>(pos + i)] -= top * b[static_cast<std::size_t>(i)];
        da = dense_degree(a);
    }
    if (pending > 0) {
        const Int m = int_pow(lb, pending);
        for (auto& c : a) c *= m;
    }
    a.resize(da < 0 ? 0 : static_cast<std::size_t>(da) + 1);
    return a;
}

Int dense_content(const std::vector<Int>& a) {
    Int g = 0;
    for (const auto& c : a) {
        g = boost::multiprecision::gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

}  // namespace

LaurentV laurent_gcd(const LaurentV& a_in, const LaurentV& b_in) {
    if (a_in.is_zero() && b_in.is_zero()) return LaurentV();
    auto normalize = [](const LaurentV& p) {
        LaurentV r = p.shifted(-p.min_exp());
        if (r.leading_coeff() < 0) r = -r;
        return r;
    };
    if (a_in.is_zero()) return normalize(b_in);
    if (b_in.is_zero()) return normalize(a_in);

    const Int content_gcd =
        boost::multiprecision::gcd(a_in.content(), b_in.content());
    std::vector<Int> a = to_dense(a_in.scalar_divided(a_in.content()));
    std::vector<Int> b = to_dense(b_in.scalar_divided(b_in.content()));
    if (dense_degree(a) < dense_degree(b)) std::swap(a, b);

    // Subresultant PRS keeps the coefficient growth of the pseudo-remainders
    // polynomially bounded.
    Int g = 1, h = 1;
    while (true) {
        const int delta = dense_degree(a) - dense_degree(b);
        std::vector<Int> r = pseudo_rem(a, b);
        if (r.empty()) break;
        if (dense_degree(r) == 0) {
            b.assign(1, Int(1));
            break;
        }
        const Int divisor = g * int_pow(h, delta);
        for (auto& c : r) c /= divisor;
        a = std::move(b);
        b = std::move(r);
        g = a[static_cast<std::size_t>(dense_degree(a))];
        if (delta >= 1)
            h = int_pow(g, delta) / int_pow(h, delta - 1);
        // delta == 0 keeps h unchanged
    }
    // Primitive part of the final nonzero remainder is the polynomial gcd.
    const Int bc = dense_content(b);
    for (auto& c : b) c /= bc;
    LaurentV pg = from_dense(b, 0);
    if (pg.leading_coeff() < 0) pg = -pg;
    return pg.scaled(content_gcd);
}

}  // namespace qinterp
