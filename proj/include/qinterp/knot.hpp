#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qinterp/habiro.hpp"
#include "qinterp/interp.hpp"
#include "qinterp/partition.hpp"
#include "qinterp/rational.hpp"

namespace qinterp {

// Table of colored invariant values J_K(V(mu), q), normalized to 1 on the
// unknot. For N = 2 the value depends only on mu_1 - mu_2.
class KnotTable {
public:
    enum class Provenance { builtin, ingested };

    KnotTable(int N, std::map<Partition, LaurentV> values, Provenance prov,
              bool sl2_collapse);

    int N() const { return N_; }
    Provenance provenance() const { return provenance_; }
    bool covers(const Partition& mu) const { return values_.count(mu) > 0; }
    const LaurentV& value(const Partition& mu) const;
    const std::map<Partition, LaurentV>& values() const { return values_; }

private:
    int N_;
    std::map<Partition, LaurentV> values_;
    Provenance provenance_;
};

// Colored Jones polynomial of the figure-eight knot (normalized), generated by
// the cyclotomic product formula and certified against the three tabulated
// low colors before use.
LaurentV figure_eight_jones(int n);
// gl_2 table for the figure-eight knot over all subpartitions of `bound`,
// filled through the two-row collapse J(V(a,b)) = J(V_{a-b}).
KnotTable figure_eight_table(const Partition& bound);
// Unknot table (all values 1) for any N.
KnotTable unknot_table(int N, const Partition& bound);
// Same tables covering exactly the colors of size <= max_size, the coverage
// the unified-invariant truncation rule asks for.
KnotTable figure_eight_table_sized(int max_size);
KnotTable unknot_table_sized(int N, int max_size);

// Cyclotomic-expansion coefficients a_lambda(K); every stored coefficient is
// a genuine Laurent polynomial (integrality is enforced at construction).
struct CycloCoeffs {
    int N = 0;
    std::map<Partition, LaurentV> coeffs;
};

// sigma_lambda acting on V(mu): c_{lambda,mu}(q^{-1}).
LaurentV sigma_scalar(const Partition& lambda, const Partition& mu, int N);

// a_lambda(K) = sum_{mu in lambda} d[mu][lambda](q^{-1}) J_K(V(mu), q) for all
// lambda below `bound`. Throws NotLaurent if a sum fails to collapse.
CycloCoeffs a_coeffs(const KnotTable& table, const Partition& bound);
// Single coefficient.
LaurentV a_coeff(const KnotTable& table, const Partition& lambda, int N);

// Round trip: sum_lambda a_lambda sigma_scalar(lambda, mu) = J_K(V(mu), q).
LaurentV reconstruct(const CycloCoeffs& coeffs, const Partition& mu);

// Coefficient of V(mu) in P'_lambda = v^{-|lambda|} dimq(lambda)
// sum d[mu][lambda](q^{-1}) / dimq(mu) V(mu).
std::map<Partition, RationalQ> pprime_coeffs(const Partition& lambda, int N);

// <P'_lambda, V(nu)> computed through the Hopf pairing. The pairing is
// triangular: it vanishes whenever nu does not contain lambda, and on the
// diagonal equals C_lambda dimq(lambda) with
// C_lambda = (-1)^{|lambda|+binom(N,2)} q^{D_N(lambda)} v^{-N |lambda|}
// (the q-power orientation follows hopf_schur's positive evaluation points).
// Off-diagonal entries with lambda strictly inside nu are nonzero in general.
RationalQ pprime_pairing(const Partition& lambda, const Partition& nu, int N);
// Verifies the vanishing/diagonal structure above.
bool kirby_pairing_check(const Partition& lambda, const Partition& nu, int N);

// Kirby-color weight of lambda:
// (-1)^{|lambda|+binom(N,2)} q^{-+c(lambda)} q^{w_sign(lambda)} with
// w_+ = D_N(lambda) and w_- = D_N(lambda) + N|lambda|.
LaurentV kirby_weight(int sign, const Partition& lambda, int N);

// J_K(P'_lambda) = v^{-|lambda|} dimq(lambda) a_lambda(K), with the largest n
// such that (q;q)_n divides it (after clearing v-units).
struct PPrimeValue {
    LaurentV value;
    int divisibility = 0;
};
PPrimeValue knot_pprime_value(const KnotTable& table, const Partition& lambda, int N);

// Unified invariant of (+-1)-surgery on the knot as a Habiro-ring truncation:
// sum over all lambda with |lambda| < T * binom(N+1,2) of
// kirby_weight * J_K(P'_lambda); every further table-covered term is
// certified to lie in ((q;q)_T). Throws InsufficientBound when the table
// cannot support the truncation.
HabiroElement unified_invariant(const KnotTable& table, int sign, int trunc);

// Size below which terms enter the unified-invariant sum at truncation T.
int unified_required_size(int N, int trunc);

// --- sl_2 cross-check -------------------------------------------------------

// Eigenvalue of the m-th central element on V_j:
// prod_{i=1}^m ((v^{j+1}+v^{-j-1})^2 - (v^i+v^{-i})^2).
LaurentV sl2_sigma_eigen(int m, int j);

// Coefficients a_n with phi = sum a_n sigma_n from the scalars phi_j
// (j = 0..M): a_n = sum_i (-1)^{n-i} {2i+2}{i+1} / ({n+i+2}! {n-i}!) phi_i.
std::vector<LaurentV> sl2_a_coeffs(const std::vector<LaurentV>& phi);

// Coefficients of V_i in P_n = sum_i (-1)^{n-i} [2i+2]/[n+i+2]
// [2n+1 over n+1+i] V_i; all entries are Laurent polynomials in v.
std::vector<LaurentV> sl2_pn_expansion(int n);

}  // namespace qinterp
