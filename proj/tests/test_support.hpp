#pragma once

#include <random>
#include <vector>

#include "qinterp/laurent.hpp"
#include "qinterp/partition.hpp"

namespace qinterp::testsupport {

// Deterministic generator for property-style tests.
class Rng {
public:
    explicit Rng(unsigned seed = 20260809u) : eng_(seed) {}
    int uniform(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }
    LaurentV laurent(int max_terms = 5, int exp_range = 8, int coeff_range = 9) {
        LaurentV p;
        const int n = uniform(0, max_terms);
        for (int i = 0; i < n; ++i)
            p.add_term(uniform(-exp_range, exp_range), uniform(-coeff_range, coeff_range));
        return p;
    }
    LaurentV q_polynomial(int max_terms = 5, int exp_range = 6, int coeff_range = 9) {
        LaurentV p;
        const int n = uniform(0, max_terms);
        for (int i = 0; i < n; ++i)
            p.add_term(2 * uniform(-exp_range, exp_range), uniform(-coeff_range, coeff_range));
        return p;
    }
    LaurentV nonzero_laurent(int max_terms = 5, int exp_range = 8, int coeff_range = 9) {
        for (;;) {
            LaurentV p = laurent(max_terms, exp_range, coeff_range);
            if (!p.is_zero()) return p;
        }
    }

private:
    std::mt19937 eng_;
};

}  // namespace qinterp::testsupport
