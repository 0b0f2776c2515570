#include "qinterp/sympoly.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qinterp/errors.hpp"
#include "qinterp/qseries.hpp"

namespace qinterp {

EvalPoint EvalPoint::from_q_exponents(const std::vector<int>& q_exps) {
    EvalPoint p;
    p.v_exponents.reserve(q_exps.size());
    for (int e : q_exps) p.v_exponents.push_back(2 * e);
    return p;
}

EvalPoint EvalPoint::node(const Partition& mu, int N) {
    EvalPoint p;
    for (int i = 1; i <= N; ++i) p.v_exponents.push_back(2 * (-mu.part(i - 1) - N + i));
    return p;
}

EvalPoint EvalPoint::staircase(int N) {
    EvalPoint p;
    for (int i = 1; i <= N; ++i) p.v_exponents.push_back(2 * (i - N));
    return p;
}

EvalPoint EvalPoint::rho(int N) {
    EvalPoint p;
    for (int i = 1; i <= N; ++i) p.v_exponents.push_back(N + 1 - 2 * i);
    return p;
}

EvalPoint EvalPoint::mu_plus_rho(const Partition& mu, int N) {
    EvalPoint p;
    for (int i = 1; i <= N; ++i) p.v_exponents.push_back(2 * mu.part(i - 1) + N + 1 - 2 * i);
    return p;
}

namespace {

std::vector<int> canonical_key(std::vector<int> exps) {
    std::sort(exps.begin(), exps.end(), std::greater<int>());
    while (!exps.empty() && exps.back() == 0) exps.pop_back();
    return exps;
}

// Distinct permutations of the padded exponent vector.
std::vector<std::vector<int>> orbit(const std::vector<int>& key, int nvars) {
    std::vector<int> padded = key;
    padded.resize(static_cast<std::size_t>(nvars), 0);
    std::sort(padded.begin(), padded.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(padded);
    } while (std::next_permutation(padded.begin(), padded.end()));
    return out;
}

}  // namespace

SymPoly SymPoly::constant(int nvars, LaurentV c) {
    SymPoly p(nvars);
    p.add_term({}, c);
    return p;
}

SymPoly SymPoly::monomial(int nvars, const Partition& lambda) {
    if (lambda.length() > nvars)
        throw std::invalid_argument("SymPoly::monomial: too many parts");
    SymPoly p(nvars);
    p.add_term(lambda.parts(), LaurentV(1));
    return p;
}

LaurentV SymPoly::coeff(const Partition& key) const {
    auto it = terms_.find(key.parts());
    return it == terms_.end() ? LaurentV() : it->second;
}

int SymPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

void SymPoly::add_term(const std::vector<int>& sorted_exps, const LaurentV& c) {
    if (c.is_zero()) return;
    std::vector<int> key = canonical_key(sorted_exps);
    if (static_cast<int>(key.size()) > nvars_)
        throw std::invalid_argument("SymPoly::add_term: more parts than variables");
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("SymPoly: nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
    if (nvars_ != o.nvars_) throw std::invalid_argument("SymPoly: nvars mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("SymPoly: nvars mismatch");
    return SymPoly::from_multipoly(a.expanded() * b.expanded());
}

SymPoly SymPoly::scaled(const LaurentV& c) const {
    SymPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
    return r;
}

LaurentV SymPoly::eval(const EvalPoint& p) const {
    if (static_cast<int>(p.v_exponents.size()) != nvars_)
        throw std::invalid_argument("SymPoly::eval: point length mismatch");
    LaurentV out;
    for (const auto& [key, c] : terms_) {
        for (const auto& perm : orbit(key, nvars_)) {
            int shift = 0;
            for (std::size_t k = 0; k < perm.size(); ++k)
                shift += perm[k] * p.v_exponents[k];
            out += c.shifted(shift);
        }
    }
    return out;
}

MultiPoly SymPoly::expanded() const {
    MultiPoly out(nvars_);
    for (const auto& [key, c] : terms_)
        for (const auto& perm : orbit(key, nvars_)) out.add_term(perm, c);
    return out;
}

SymPoly SymPoly::from_multipoly(const MultiPoly& p) {
    SymPoly out(p.nvars());
    // Keep only the canonical (weakly decreasing) representative of each
    // orbit; symmetry is verified against the full expansion afterwards.
    for (const auto& [e, c] : p.terms()) {
        const bool decreasing =
            std::is_sorted(e.begin(), e.end(), [](int a, int b) { return a > b; });
        if (decreasing) out.terms_.emplace(canonical_key(e), c);
    }
    if (out.expanded() != p)
        throw std::invalid_argument("from_multipoly: polynomial is not symmetric");
    return out;
}

std::map<Partition, LaurentV> SymPoly::schur_expansion() const {
    std::map<Partition, LaurentV> out;
    SymPoly rest = *this;
    while (!rest.is_zero()) {
        // Largest key under (degree, lex); within a degree, dominance order
        // implies lex order, so subtracting c * s_key only leaves smaller keys.
        auto best = rest.terms_.begin();
        int best_deg = std::accumulate(best->first.begin(), best->first.end(), 0);
        for (auto it = std::next(rest.terms_.begin()); it != rest.terms_.end(); ++it) {
            const int deg = std::accumulate(it->first.begin(), it->first.end(), 0);
            if (deg > best_deg || (deg == best_deg && it->first > best->first)) {
                best = it;
                best_deg = deg;
            }
        }
        const Partition key(best->first);
        const LaurentV c = best->second;
        out.emplace(key, c);
        rest -= schur(key, nvars_).scaled(c);
    }
    return out;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream outs;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) outs << " + ";
        first = false;
        outs << "(" << c.str() << ")*m" << Partition(key).str();
    }
    return outs.str();
}

namespace {

struct SchurKey {
    int N;
    std::vector<int> parts;
    bool operator<(const SchurKey& o) const {
        return std::tie(N, parts) < std::tie(o.N, o.parts);
    }
};

}  // namespace

SymPoly schur(const Partition& lambda, int N) {
    if (lambda.length() > N) return SymPoly(N);

    static std::map<SchurKey, SymPoly> memo;
    static std::mutex mu;
    const SchurKey key{N, lambda.parts()};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    // Bialternant: det(x_j^{lambda_i + N - i}) / det(x_j^{N - i}).
    const std::vector<int> pad = lambda.padded(N);
    MultiPoly det(N);
    std::vector<int> perm(static_cast<std::size_t>(N));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b)
                if (perm[a] > perm[b]) ++inv;
        std::vector<int> exps(static_cast<std::size_t>(N), 0);
        for (int i = 0; i < N; ++i)
            exps[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] =
                pad[static_cast<std::size_t>(i)] + N - i - 1;
        det.add_term(std::move(exps), LaurentV(inv % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) det = det.divided_by_var_difference(i, j);

    SymPoly result = SymPoly::from_multipoly(det);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, result);
    return result;
}

LaurentV schur_principal(const Partition& lambda, int N) {
    if (lambda.length() > N) throw std::invalid_argument("schur_principal: length > N");
    // q^{-n(lambda)} prod (1 - q^{-N-c}) / (1 - q^{-h}).
    LaurentV num = LaurentV::q_pow(-lambda.n_stat());
    LaurentV den = 1;
    for (const Cell& c : lambda.cells()) {
        num *= LaurentV(1) - LaurentV::q_pow(-N - c.content);
        den *= LaurentV(1) - LaurentV::q_pow(-c.hook);
    }
    return divide_exact(num, den);
}

LaurentV dimq(const Partition& lambda, int N) {
    if (lambda.length() > N) throw std::invalid_argument("dimq: length > N");
    LaurentV num = 1, den = 1;
    for (const Cell& c : lambda.cells()) {
        num *= balanced_qnum(N + c.content);
        den *= balanced_qnum(c.hook);
    }
    return divide_exact(num, den);
}

LaurentV hopf_schur(const Partition& lambda, const Partition& mu, int N) {
    if (lambda.length() > N || mu.length() > N)
        throw std::invalid_argument("hopf_schur: length > N");
    return schur(lambda, N).eval(EvalPoint::mu_plus_rho(mu, N)) * dimq(mu, N);
}

LaurentV sym_pair(const SymPoly& f, const SymPoly& g) {
    const int N = g.nvars();
    LaurentV out;
    for (const auto& [mu, c] : g.schur_expansion())
        out += c * f.eval(EvalPoint::node(mu, N)) * schur_principal(mu, N);
    return out;
}

}  // namespace qinterp
