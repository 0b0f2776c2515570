#pragma once

#include <map>
#include <vector>

#include "qinterp/partition.hpp"
#include "qinterp/qseries.hpp"
#include "qinterp/rational.hpp"
#include "qinterp/sympoly.hpp"

namespace qinterp {

// One-variable interpolation basis f_m(x) = (x;q)_m.
UniPoly f_uni(int m);

// Newton interpolation at the nodes q^{-k}: given values[k] = f(q^{-k}) for
// k = 0..M, returns the coefficients a_m of f = sum a_m f_m. Computed by the
// closed orthogonality formula and cross-checked against triangular
// back-substitution.
std::vector<RationalQ> newton_1d(const std::map<int, LaurentV>& values);

// Transition x^a = sum_b k_{a,b} f_b(x); returns k_{a,b} for b = 0..a.
std::vector<LaurentV> monomial_to_f(int a);

// (x-q^s)(x-q^{s+1})...(x-q^{s+m-1}) = sum_j coeff_j f_j(x); returns the
// coefficients for j = 0..m. The identity is verified as a UniPoly equality.
std::vector<LaurentV> binomial_shift_expand(int s, int m);

// N-variable interpolation polynomial, built by the divided-difference
// recursion applied to f_{lambda_1+N-1}(x_1)...f_{lambda_N}(x_N). Memoized.
SymPoly F_poly(const Partition& lambda, int N);
// Independent construction: alternant determinant divided by the Vandermonde.
SymPoly F_poly_determinant(const Partition& lambda, int N);

// c_{lambda,mu} = F_lambda evaluated at the node of mu.
LaurentV c_entry(const Partition& lambda, const Partition& mu, int N);
// Closed form of the diagonal value c_{lambda,lambda}.
LaurentV diag_value(const Partition& lambda, int N);

// Diagonal value as unit * prod_j (1-q^j)^{mult_j}; the factored form keeps
// the cyclotomic-expansion sums in pure Laurent arithmetic.
struct FactoredValue {
    int sign = 1;           // +-1
    int q_exp = 0;          // unit q^{q_exp}
    std::map<int, int> factors;  // j -> multiplicity of (1 - q^j)

    LaurentV unit() const;       // sign * q^{q_exp}
    LaurentV expand() const;     // full product
    FactoredValue q_inverted() const;
};
FactoredValue diag_value_factored(const Partition& lambda, int N);

// Interpolation matrix entries d[inner][outer] (inner contained in outer),
// the inverse of c[inner][outer] = F_inner(node of outer).
// Okounkov route: (-1)^{|outer|-|inner|} q^{c(inner)-c(outer)}
//                 c*_{inner,outer} / (c_{outer,outer} c*_{inner,inner}).
RationalQ d_entry_okounkov(const Partition& inner, const Partition& outer, int N);
// Hopf route, written with the outer partition first as in the pairing
// derivation: b_{outer,inner} * s_inner(staircase) / (F_outer, F_outer).
// Equals d_entry_okounkov(inner, outer, N).
RationalQ d_entry_hopf(const Partition& outer, const Partition& inner, int N);

// (F_lambda, F_lambda) = q^{-|lambda| + 2 binom(N,3)} prod (1 - q^{N + content}).
LaurentV hopf_norm(const Partition& lambda, int N);

// Schur coefficients of F_lambda.
std::map<Partition, LaurentV> schur_expansion_F(const Partition& lambda, int N);

// Triangular matrices over the ideal of subpartitions of `bound`; absent
// entries are structural zeros. Entries are stored as (inner, outer) pairs.
struct CMatrix {
    int N = 0;
    Partition bound;
    std::map<std::pair<Partition, Partition>, LaurentV> entries;

    LaurentV at(const Partition& inner, const Partition& outer) const;
};
struct DMatrix {
    int N = 0;
    Partition bound;
    std::map<std::pair<Partition, Partition>, RationalQ> entries;

    RationalQ at(const Partition& inner, const Partition& outer) const;
};
CMatrix build_c_matrix(int N, const Partition& bound);
DMatrix build_d_matrix(int N, const Partition& bound);
// Both products C*D and D*C restricted to the bound ideal equal the identity.
bool check_inverse_pair(const CMatrix& C, const DMatrix& D);

// N-independent Schur-expansion coefficients of the A = q^N stabilisation:
// bbar_{lambda,mu} recovered from a single N by the hook normalisation.
RationalQ homfly_coeff(const Partition& lambda, const Partition& mu, int N);
RationalQ homfly_coeff(const Partition& lambda, const Partition& mu);
// Closed form for one-row shapes: bbar_{(m),(j)} = (-1)^j q^{j(j-3)/2}/(q;q)_{m-j}.
RationalQ one_row_coeff(int m, int j);

// F_{lambda;N}(x_1,...,x_{N-1},1) as a polynomial in N-1 variables; equals
// (-1)^{N-1} q^{binom(N-1,2)} F_{lambda;N-1}(q x) when lambda_N = 0 and
// vanishes otherwise.
SymPoly restrict_last_var(const Partition& lambda, int N);
// Structural check of the restriction identity above.
bool check_stability(const Partition& lambda, int N);

// F_{lambda + k^N} = q^{k binom(N,2)} prod_i f_k(x_i) * F_lambda(q^k x),
// verified as an exact polynomial identity.
bool check_add_column(const Partition& lambda, int k, int N);

// x_1...x_N * F_lambda = q^{-|lambda|-binom(N,2)} sum_I (-1)^{|I|} F_{lambda+e_I};
// returns the F-basis coefficient map of the product (verified structurally).
std::map<Partition, LaurentV> mul_by_eN(const Partition& lambda, int N);

// Truncated expansion of (x_1...x_N)^{-1} F_lambda in the F basis, including
// all terms of size <= |lambda| + order. Multiplying back and discarding
// sizes beyond the truncation recovers F_lambda.
std::map<Partition, LaurentV> inv_eN_series(const Partition& lambda, int N, int order);
// The multiply-back verification of the series.
bool check_inv_eN_series(const Partition& lambda, int N, int order);

// Exact-division certificate: F_lambda(q^{a_1},...,q^{a_N}) is divisible by
// (q;q)_k with k = floor(|lambda| / binom(N+1,2)). Throws NotDivisible if the
// division fails (which would falsify the divisibility lemma).
struct DivisibilityCertificate {
    int k = 0;
    LaurentV value;
    LaurentV quotient;
};
DivisibilityCertificate divisibility_certificate(const Partition& lambda,
                                                 const std::vector<int>& q_exponents, int N);

// Interpolate a symmetric function from its node values over all
// subpartitions of `bound`: returns coefficients a_lambda of sum a_lambda
// F_lambda. Computed by D-matrix application and cross-checked against
// triangular back-substitution; missing nodes are rejected.
std::map<Partition, RationalQ> interpolate_sym(const std::map<Partition, LaurentV>& values,
                                               int N, const Partition& bound);

}  // namespace qinterp
