#include "qinterp/interp.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "qinterp/errors.hpp"

namespace qinterp {

UniPoly f_uni(int m) {
    if (m < 0) throw std::invalid_argument("f_uni: m must be >= 0");
    UniPoly p(LaurentV(1));
    for (int i = 0; i < m; ++i)
        p = p * (UniPoly(LaurentV(1)) - UniPoly::x().scaled(LaurentV::q_pow(i)));
    return p;
}

std::vector<RationalQ> newton_1d(const std::map<int, LaurentV>& values) {
    if (values.empty()) return {};
    const int M = values.rbegin()->first;
    for (int k = 0; k <= M; ++k)
        if (!values.count(k))
            throw std::invalid_argument("newton_1d: missing node value at k=" +
                                        std::to_string(k));

    // Closed formula: a_m = (f_m,f_m)^{-1} sum_j (-1)^j q^{j(j-1)/2} binom(m,j) f(q^{-j}).
    std::vector<RationalQ> closed;
    for (int m = 0; m <= M; ++m) {
        LaurentV s;
        for (int j = 0; j <= m; ++j) {
            LaurentV t = qbinom(m, j).shifted(j * (j - 1)) * values.at(j);
            s += (j % 2 ? -t : t);
        }
        const LaurentV norm = poch(m).shifted(-2 * m);  // (f_m, f_m) = q^{-m}(q;q)_m
        closed.emplace_back(RationalQ(s, norm));
    }

    // Triangular back-substitution against c_{m,k} = f_m(q^{-k}).
    std::vector<RationalQ> tri(static_cast<std::size_t>(M) + 1);
    for (int k = 0; k <= M; ++k) {
        RationalQ acc{values.at(k)};
        for (int m = 0; m < k; ++m)
            acc -= tri[static_cast<std::size_t>(m)] * RationalQ(f_uni(m).eval(LaurentV::q_pow(-k)));
        tri[static_cast<std::size_t>(k)] =
            acc / RationalQ(f_uni(k).eval(LaurentV::q_pow(-k)));
    }
    if (tri != closed) throw std::logic_error("newton_1d: interpolation routes disagree");
    return closed;
}

std::vector<LaurentV> monomial_to_f(int a) {
    if (a < 0) throw std::invalid_argument("monomial_to_f: a must be >= 0");
    std::vector<LaurentV> k;
    for (int b = 0; b <= a; ++b) {
        LaurentV c = qbinom(a, b).shifted(2 * (-a * b) + b * (b + 1));
        k.push_back(b % 2 ? -c : c);
    }
    return k;
}

std::vector<LaurentV> binomial_shift_expand(int s, int m) {
    if (m < 0) throw std::invalid_argument("binomial_shift_expand: m must be >= 0");
    std::vector<LaurentV> coeffs;
    for (int j = 0; j <= m; ++j) {
        LaurentV c = qbinom(m, j).shifted(2 * (-j * m) + j * (j + 1));
        c *= shifted_poch(s + j, m - j);
        coeffs.push_back(j % 2 ? -c : c);
    }
    // Verify as a polynomial identity in x.
    UniPoly lhs(LaurentV(1));
    for (int i = 0; i < m; ++i)
        lhs = lhs * (UniPoly::x() - UniPoly(LaurentV::q_pow(s + i)));
    UniPoly rhs;
    for (int j = 0; j <= m; ++j) rhs += f_uni(j).scaled(coeffs[static_cast<std::size_t>(j)]);
    if (lhs != rhs) throw std::logic_error("binomial_shift_expand: identity failed");
    return coeffs;
}

namespace {

struct PartitionKey {
    int N;
    std::vector<int> parts;
    bool operator<(const PartitionKey& o) const {
        return std::tie(N, parts) < std::tie(o.N, o.parts);
    }
};

MultiPoly f_row_product(const Partition& lambda, int N) {
    MultiPoly p = MultiPoly::constant(N, LaurentV(1));
    for (int i = 1; i <= N; ++i)
        p = p * MultiPoly::from_univariate(f_uni(lambda.part(i - 1) + N - i), N, i - 1);
    return p;
}

}  // namespace

SymPoly F_poly(const Partition& lambda, int N) {
    if (lambda.length() > N) throw std::invalid_argument("F_poly: partition has more than N parts");

    static std::map<PartitionKey, SymPoly> memo;
    static std::mutex mu;
    const PartitionKey key{N, lambda.parts()};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    // Divided differences along a reduced word of the longest permutation,
    // applied to f_{lambda_1+N-1}(x_1) ... f_{lambda_N}(x_N).
    MultiPoly p = f_row_product(lambda, N);
    for (int k = 1; k <= N - 1; ++k)
        for (int i = k; i >= 1; --i) p = p.divided_difference(i - 1);
    SymPoly result = SymPoly::from_multipoly(p);

    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, result);
    return result;
}

SymPoly F_poly_determinant(const Partition& lambda, int N) {
    if (lambda.length() > N)
        throw std::invalid_argument("F_poly_determinant: partition has more than N parts");
    MultiPoly det(N);
    std::vector<int> perm(static_cast<std::size_t>(N));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inv;
        MultiPoly prod = MultiPoly::constant(N, LaurentV(inv % 2 ? -1 : 1));
        for (int i = 0; i < N; ++i)
            prod = prod * MultiPoly::from_univariate(f_uni(lambda.part(i) + N - i - 1), N,
                                                     perm[static_cast<std::size_t>(i)]);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) det = det.divided_by_var_difference(i, j);
    return SymPoly::from_multipoly(det);
}

LaurentV c_entry(const Partition& lambda, const Partition& mu, int N) {
    if (lambda.length() > N || mu.length() > N)
        throw std::invalid_argument("c_entry: partition has more than N parts");
    return F_poly(lambda, N).eval(EvalPoint::node(mu, N));
}

LaurentV FactoredValue::unit() const {
    return LaurentV::q_pow(q_exp, sign);
}

LaurentV FactoredValue::expand() const {
    LaurentV r = unit();
    for (const auto& [j, m] : factors)
        for (int t = 0; t < m; ++t) r *= (LaurentV(1) - LaurentV::q_pow(j));
    return r;
}

FactoredValue FactoredValue::q_inverted() const {
    // (1-q^{-j}) = -q^{-j}(1-q^j).
    FactoredValue r;
    r.sign = sign;
    r.q_exp = -q_exp;
    r.factors = factors;
    for (const auto& [j, m] : factors) {
        if (m % 2) r.sign = -r.sign;
        r.q_exp -= j * m;
    }
    return r;
}

FactoredValue diag_value_factored(const Partition& lambda, int N) {
    if (lambda.length() > N)
        throw std::invalid_argument("diag_value_factored: partition has more than N parts");
    // (-1)^{binom(N,2)} q^{n + binom(N,3)} prod (1-q^{-h})
    //   = (-1)^{binom(N,2)+|lambda|} q^{binom(N,3) - n' - |lambda|} prod (1-q^h).
    FactoredValue f;
    f.sign = (binom(N, 2) + lambda.size()) % 2 ? -1 : 1;
    f.q_exp = static_cast<int>(binom(N, 3)) - lambda.n_stat_transpose() - lambda.size();
    for (const Cell& c : lambda.cells()) ++f.factors[c.hook];
    return f;
}

LaurentV diag_value(const Partition& lambda, int N) {
    return diag_value_factored(lambda, N).expand();
}

RationalQ d_entry_okounkov(const Partition& inner, const Partition& outer, int N) {
    if (!outer.contains(inner)) return RationalQ();
    const LaurentV c_star_io = c_entry(inner, outer, N).v_inverted();
    const LaurentV den = diag_value(outer, N) * diag_value(inner, N).v_inverted();
    LaurentV num = c_star_io.shifted(2 * (inner.content_sum() - outer.content_sum()));
    if ((outer.size() - inner.size()) % 2) num = -num;
    return RationalQ(num, den);
}

LaurentV hopf_norm(const Partition& lambda, int N) {
    if (lambda.length() > N) throw std::invalid_argument("hopf_norm: length > N");
    LaurentV r = LaurentV::q_pow(-lambda.size() + 2 * static_cast<int>(binom(N, 3)));
    for (const Cell& c : lambda.cells()) r *= (LaurentV(1) - LaurentV::q_pow(N + c.content));
    return r;
}

std::map<Partition, LaurentV> schur_expansion_F(const Partition& lambda, int N) {
    return F_poly(lambda, N).schur_expansion();
}

RationalQ d_entry_hopf(const Partition& outer, const Partition& inner, int N) {
    if (!outer.contains(inner)) return RationalQ();
    const auto expansion = schur_expansion_F(outer, N);
    auto it = expansion.find(inner);
    const LaurentV b = it == expansion.end() ? LaurentV() : it->second;
    return RationalQ(b * schur_principal(inner, N), hopf_norm(outer, N));
}

LaurentV CMatrix::at(const Partition& inner, const Partition& outer) const {
    auto it = entries.find({inner, outer});
    return it == entries.end() ? LaurentV() : it->second;
}

RationalQ DMatrix::at(const Partition& inner, const Partition& outer) const {
    auto it = entries.find({inner, outer});
    return it == entries.end() ? RationalQ() : it->second;
}

CMatrix build_c_matrix(int N, const Partition& bound) {
    CMatrix m;
    m.N = N;
    m.bound = bound;
    const auto subs = subpartitions(bound);
    for (const auto& outer : subs) {
        for (const auto& inner : subs) {
            if (!outer.contains(inner)) continue;
            LaurentV v = c_entry(inner, outer, N);
            if (inner == outer && v != diag_value(inner, N))
                throw std::logic_error("c matrix diagonal mismatch with closed form");
            if (!v.is_zero()) m.entries.emplace(std::make_pair(inner, outer), std::move(v));
        }
    }
    return m;
}

DMatrix build_d_matrix(int N, const Partition& bound) {
    DMatrix m;
    m.N = N;
    m.bound = bound;
    const auto subs = subpartitions(bound);
    for (const auto& outer : subs)
        for (const auto& inner : subs) {
            if (!outer.contains(inner)) continue;
            RationalQ v = d_entry_okounkov(inner, outer, N);
            if (!v.is_zero()) m.entries.emplace(std::make_pair(inner, outer), std::move(v));
        }
    return m;
}

bool check_inverse_pair(const CMatrix& C, const DMatrix& D) {
    if (C.N != D.N || !(C.bound == D.bound)) return false;
    const auto subs = subpartitions(C.bound);
    for (const auto& a : subs) {
        for (const auto& b : subs) {
            RationalQ cd, dc;
            for (const auto& mid : subs) {
                cd += RationalQ(C.at(a, mid)) * D.at(mid, b);
                dc += D.at(a, mid) * RationalQ(C.at(mid, b));
            }
            const RationalQ expect = a == b ? RationalQ(1) : RationalQ();
            if (cd != expect || dc != expect) return false;
        }
    }
    return true;
}

RationalQ homfly_coeff(const Partition& lambda, const Partition& mu, int N) {
    if (!lambda.contains(mu)) return RationalQ();
    // bbar = (-1)^{binom(N,2)} q^{binom(N,3)} d[mu][lambda]
    //        * q^{-|lambda|-|mu|-n(mu)} prod_{mu} (1-q^{h}).
    RationalQ d = d_entry_okounkov(mu, lambda, N);
    LaurentV scale = LaurentV::q_pow(static_cast<int>(binom(N, 3)) - lambda.size() -
                                     mu.size() - mu.n_stat());
    if (binom(N, 2) % 2) scale = -scale;
    for (const Cell& c : mu.cells()) scale *= (LaurentV(1) - LaurentV::q_pow(c.hook));
    return d * RationalQ(scale);
}

RationalQ homfly_coeff(const Partition& lambda, const Partition& mu) {
    return homfly_coeff(lambda, mu, std::max(1, lambda.length()));
}

RationalQ one_row_coeff(int m, int j) {
    if (j < 0 || j > m) return RationalQ();
    LaurentV num = LaurentV::q_pow(0, j % 2 ? -1 : 1).shifted(j * (j - 3));
    return RationalQ(num, poch(m - j));
}

SymPoly restrict_last_var(const Partition& lambda, int N) {
    if (N < 2) throw std::invalid_argument("restrict_last_var: N must be >= 2");
    if (lambda.length() > N)
        throw std::invalid_argument("restrict_last_var: partition has more than N parts");
    MultiPoly p = F_poly(lambda, N).expanded().substituted(N - 1, 0);
    return SymPoly::from_multipoly(p);
}

bool check_stability(const Partition& lambda, int N) {
    const SymPoly restricted = restrict_last_var(lambda, N);
    if (lambda.length() == N) return restricted.is_zero();
    MultiPoly expect = F_poly(lambda, N - 1).expanded().all_vars_scaled_by_v_pow(2);
    expect = expect.scaled(LaurentV::q_pow(static_cast<int>(binom(N - 1, 2)),
                                           (N - 1) % 2 ? -1 : 1));
    return restricted.expanded() == expect;
}

bool check_add_column(const Partition& lambda, int k, int N) {
    const Partition shifted = lambda.with_column_added(k, N);
    MultiPoly lhs = F_poly(shifted, N).expanded();
    MultiPoly rhs = F_poly(lambda, N).expanded().all_vars_scaled_by_v_pow(2 * k);
    for (int i = 0; i < N; ++i) rhs = rhs * MultiPoly::from_univariate(f_uni(k), N, i);
    rhs = rhs.scaled(LaurentV::q_pow(k * static_cast<int>(binom(N, 2))));
    return lhs == rhs;
}

namespace {

// Straighten a composition to (sign, partition) via the strictly decreasing
// degree vector a_i + N - i; returns sign 0 when two degrees collide.
struct Straightened {
    int sign = 0;
    Partition shape;
};

Straightened straighten(const std::vector<int>& comp, int N) {
    std::vector<int> degrees(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i) degrees[static_cast<std::size_t>(i)] =
        comp[static_cast<std::size_t>(i)] + N - i - 1;
    // Count inversions of the sorting permutation; collisions kill the term.
    int inv = 0;
    for (std::size_t a = 0; a < degrees.size(); ++a)
        for (std::size_t b = a + 1; b < degrees.size(); ++b) {
            if (degrees[a] == degrees[b]) return {};
            if (degrees[a] < degrees[b]) ++inv;
        }
    std::vector<int> sorted = degrees;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    std::vector<int> parts(static_cast<std::size_t>(N));
    for (int i = 0; i < N; ++i)
        parts[static_cast<std::size_t>(i)] = sorted[static_cast<std::size_t>(i)] - N + i + 1;
    return {inv % 2 ? -1 : 1, Partition(parts)};
}

}  // namespace

std::map<Partition, LaurentV> mul_by_eN(const Partition& lambda, int N) {
    if (lambda.length() > N) throw std::invalid_argument("mul_by_eN: length > N");
    std::map<Partition, LaurentV> out;
    const std::vector<int> pad = lambda.padded(N);
    const LaurentV pref = LaurentV::q_pow(-lambda.size() - static_cast<int>(binom(N, 2)));
    for (int mask = 0; mask < (1 << N); ++mask) {
        std::vector<int> comp = pad;
        int bits = 0;
        for (int i = 0; i < N; ++i)
            if (mask & (1 << i)) {
                ++comp[static_cast<std::size_t>(i)];
                ++bits;
            }
        // Only weakly decreasing shifts survive (repeated degrees cancel).
        bool ok = true;
        for (int i = 0; i + 1 < N; ++i)
            if (comp[static_cast<std::size_t>(i)] < comp[static_cast<std::size_t>(i + 1)])
                ok = false;
        if (!ok) continue;
        LaurentV c = bits % 2 ? -pref : pref;
        auto [it, inserted] = out.emplace(Partition(comp), c);
        if (!inserted) it->second += c;
    }
    // Structural verification as a polynomial identity.
    MultiPoly lhs = F_poly(lambda, N).expanded();
    for (int i = 0; i < N; ++i) lhs = lhs * MultiPoly::variable(N, i);
    MultiPoly rhs(N);
    for (const auto& [shape, c] : out) rhs += F_poly(shape, N).expanded().scaled(c);
    if (lhs != rhs) throw std::logic_error("mul_by_eN: identity failed");
    return out;
}

std::map<Partition, LaurentV> inv_eN_series(const Partition& lambda, int N, int order) {
    if (lambda.length() > N) throw std::invalid_argument("inv_eN_series: length > N");
    if (order < 0) throw std::invalid_argument("inv_eN_series: negative order");
    std::map<Partition, LaurentV> out;
    const std::vector<int> pad = lambda.padded(N);

    // Sum over lattice shifts v with |v| <= order of q^{binom(N,2)+|lambda|+|v|}
    // F_{lambda+v}, straightening non-partition indices through the alternant.
    std::vector<int> shift(static_cast<std::size_t>(N), 0);
    const int base = static_cast<int>(binom(N, 2)) + lambda.size();
    auto emit = [&](const std::vector<int>& s, int total) {
        std::vector<int> comp = pad;
        for (int i = 0; i < N; ++i) comp[static_cast<std::size_t>(i)] += s[static_cast<std::size_t>(i)];
        const Straightened st = straighten(comp, N);
        if (st.sign == 0) return;
        LaurentV c = LaurentV::q_pow(base + total, st.sign);
        auto [it, inserted] = out.emplace(st.shape, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    // Enumerate all shift vectors with coordinate sum <= order.
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == N) {
            emit(shift, used);
            return;
        }
        for (int s = 0; s + used <= order; ++s) {
            shift[static_cast<std::size_t>(i)] = s;
            rec(i + 1, used + s);
        }
        shift[static_cast<std::size_t>(i)] = 0;
    };
    rec(0, 0);
    return out;
}

bool check_inv_eN_series(const Partition& lambda, int N, int order) {
    const auto series = inv_eN_series(lambda, N, order);
    // Multiply back by x_1...x_N in the F basis and drop sizes beyond the
    // truncation; the result must be exactly F_lambda.
    std::map<Partition, LaurentV> product;
    for (const auto& [shape, coeff] : series) {
        for (const auto& [shifted, c] : mul_by_eN(shape, N)) {
            auto [it, inserted] = product.emplace(shifted, coeff * c);
            if (!inserted) {
                it->second += coeff * c;
                if (it->second.is_zero()) product.erase(it);
            }
        }
    }
    const int cutoff = lambda.size() + order;
    for (const auto& [shape, c] : product) {
        if (shape.size() > cutoff) continue;
        if (shape == lambda) {
            if (c != LaurentV(1)) return false;
        } else {
            return false;
        }
    }
    return product.count(lambda) == 1;
}

DivisibilityCertificate divisibility_certificate(const Partition& lambda,
                                                 const std::vector<int>& q_exponents, int N) {
    if (lambda.length() > N)
        throw std::invalid_argument("divisibility_certificate: partition has more than N parts");
    if (static_cast<int>(q_exponents.size()) != N)
        throw std::invalid_argument("divisibility_certificate: point length mismatch");
    DivisibilityCertificate cert;
    cert.k = lambda.size() / static_cast<int>(binom(N + 1, 2));
    cert.value = F_poly(lambda, N).eval(EvalPoint::from_q_exponents(q_exponents));
    cert.quotient = divide_exact(cert.value, poch(cert.k));
    return cert;
}

std::map<Partition, RationalQ> interpolate_sym(const std::map<Partition, LaurentV>& values,
                                               int N, const Partition& bound) {
    const auto subs = subpartitions(bound);
    for (const auto& mu : subs)
        if (!values.count(mu))
            throw std::invalid_argument("interpolate_sym: missing node value at " + mu.str());

    const DMatrix D = build_d_matrix(N, bound);
    std::map<Partition, RationalQ> out;
    for (const auto& outer : subs) {
        RationalQ acc;
        for (const auto& inner : subs)
            if (outer.contains(inner)) acc += D.at(inner, outer) * RationalQ(values.at(inner));
        out.emplace(outer, std::move(acc));
    }

    // Triangular back-substitution cross-check: values reproduce at every node.
    for (const auto& mu : subs) {
        RationalQ reconstructed;
        for (const auto& lam : subs)
            if (mu.contains(lam))
                reconstructed += out.at(lam) * RationalQ(c_entry(lam, mu, N));
        if (reconstructed != RationalQ(values.at(mu)))
            throw std::logic_error("interpolate_sym: node reconstruction failed at " + mu.str());
    }
    return out;
}

}  // namespace qinterp
