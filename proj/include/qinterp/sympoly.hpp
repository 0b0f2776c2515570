#pragma once

#include <map>
#include <string>
#include <vector>

#include "qinterp/multipoly.hpp"
#include "qinterp/partition.hpp"

namespace qinterp {

// Evaluation point (v^{e_1}, ..., v^{e_N}) given by its integer v-exponents.
struct EvalPoint {
    std::vector<int> v_exponents;

    static EvalPoint from_q_exponents(const std::vector<int>& q_exps);
    // Interpolation node of mu: x_i = q^{-mu_i - N + i}.
    static EvalPoint node(const Partition& mu, int N);
    // Staircase (q^{1-N}, q^{2-N}, ..., 1).
    static EvalPoint staircase(int N);
    // rho-point (v^{N-1}, v^{N-3}, ..., v^{1-N}).
    static EvalPoint rho(int N);
    // (v^{2 mu_i + N + 1 - 2i})_i, the mu-shifted rho-point.
    static EvalPoint mu_plus_rho(const Partition& mu, int N);
};

// Symmetric polynomial in N variables over LaurentV, stored in the
// monomial-symmetric basis. Keys are decreasing exponent vectors with
// trailing zeros trimmed (at most N parts; zero parts are legal mid-key
// only as padding, so trimming gives a canonical orbit label).
class SymPoly {
public:
    explicit SymPoly(int nvars = 0) : nvars_(nvars) {}
    static SymPoly constant(int nvars, LaurentV c);
    // Monomial symmetric function m_lambda.
    static SymPoly monomial(int nvars, const Partition& lambda);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, LaurentV>& terms() const { return terms_; }
    LaurentV coeff(const Partition& key) const;
    int degree() const;  // -1 for zero

    SymPoly operator-() const;
    SymPoly& operator+=(const SymPoly& o);
    SymPoly& operator-=(const SymPoly& o);
    friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
    friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
    friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
    SymPoly scaled(const LaurentV& c) const;
    bool operator==(const SymPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    LaurentV eval(const EvalPoint& p) const;
    MultiPoly expanded() const;  // full orbit expansion
    // Validates symmetry and converts; throws invalid_argument otherwise.
    static SymPoly from_multipoly(const MultiPoly& p);

    // Exact Schur expansion by triangular elimination against leading
    // monomials; every Schur coefficient is returned (no zeros stored).
    std::map<Partition, LaurentV> schur_expansion() const;

    void add_term(const std::vector<int>& sorted_exps, const LaurentV& c);

    std::string str() const;

private:
    int nvars_;
    std::map<std::vector<int>, LaurentV> terms_;
};

// Schur polynomial s_lambda(x_1..x_N) via the bialternant quotient;
// zero when lambda has more than N parts. Memoized.
SymPoly schur(const Partition& lambda, int N);

// Principal specialization s_lambda(q^{1-N},...,q^0) as the closed hook /
// content product; equals eval(schur(lambda,N), staircase(N)).
LaurentV schur_principal(const Partition& lambda, int N);

// Balanced quantum dimension prod_cells [N + content]/[hook]; palindromic in v.
LaurentV dimq(const Partition& lambda, int N);

// Hopf pairing of irreducibles: s_lambda at the mu-shifted rho-point times
// dimq(mu); symmetric in (lambda, mu).
LaurentV hopf_schur(const Partition& lambda, const Partition& mu, int N);

// Bilinear pairing on symmetric polynomials with
// (f, s_mu) = f(node mu) * s_mu(staircase); diagonalized by the
// interpolation basis.
LaurentV sym_pair(const SymPoly& f, const SymPoly& g);

}  // namespace qinterp
