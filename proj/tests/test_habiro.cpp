#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qinterp/errors.hpp"
#include "qinterp/habiro.hpp"
#include "qinterp/qseries.hpp"
#include "test_support.hpp"

using namespace qinterp;
using testsupport::Rng;

namespace {
LaurentV q(int e) { return LaurentV::q_pow(e); }
}  // namespace

TEST_CASE("embedding basics") {
    CHECK(HabiroElement::embed(q(1), 3).rep() == q(1));
    CHECK(HabiroElement::embed(poch(4), 4).is_zero());
    CHECK(HabiroElement::embed(poch(5), 4).is_zero());  // multiple of the ideal
    CHECK_THROWS(HabiroElement::embed(LaurentV::v_pow(3), 4));
    // Representative degree bound.
    Rng rng(3u);
    for (int it = 0; it < 40; ++it) {
        LaurentV p = rng.q_polynomial(6, 12, 9);
        for (int T : {1, 2, 3, 5}) {
            const HabiroElement h = HabiroElement::embed(p, T);
            if (!h.is_zero()) {
                CHECK(h.rep().min_exp() >= 0);
                CHECK(h.rep().max_exp() < T * (T + 1));  // v-exponent bound
            }
        }
    }
}

TEST_CASE("q inverse embeds correctly") {
    for (int T = 1; T <= 8; ++T) {
        const HabiroElement inv = HabiroElement::embed(q(-1), T);
        const HabiroElement qq = HabiroElement::embed(q(1), T);
        CHECK(qq * inv == HabiroElement::one(T));
    }
    // Deep negative powers invert too.
    for (int T = 1; T <= 6; ++T) {
        const HabiroElement h = HabiroElement::embed(q(-3), T);
        const HabiroElement q3 = HabiroElement::embed(q(3), T);
        CHECK(q3 * h == HabiroElement::one(T));
    }
}

TEST_CASE("series presentation") {
    CHECK(HabiroElement::from_series({}, 4).is_zero());
    CHECK(HabiroElement::from_series({LaurentV(1)}, 4) == HabiroElement::one(4));
    // f_n = q^n reproduces the class of q^{-1}.
    for (int T = 2; T <= 6; ++T) {
        std::vector<LaurentV> terms;
        for (int n = 0; n < T + 3; ++n) terms.push_back(q(n));
        CHECK(HabiroElement::from_series(terms, T) == HabiroElement::embed(q(-1), T));
    }
    // Terms with index >= T do not contribute.
    Rng rng(5u);
    for (int it = 0; it < 30; ++it) {
        const int T = rng.uniform(1, 5);
        std::vector<LaurentV> base, extended;
        for (int n = 0; n < T; ++n) {
            LaurentV t = rng.q_polynomial(3, 3, 5);
            // keep polynomial representatives
            if (!t.is_zero() && t.min_exp() < 0) t = t.shifted(-t.min_exp());
            base.push_back(t);
            extended.push_back(t);
        }
        for (int n = 0; n < 3; ++n) extended.push_back(rng.q_polynomial(3, 3, 5));
        CHECK(HabiroElement::from_series(base, T) == HabiroElement::from_series(extended, T));
    }
}

TEST_CASE("embedding is a ring homomorphism") {
    Rng rng(9u);
    for (int it = 0; it < 50; ++it) {
        const int T = rng.uniform(1, 6);
        LaurentV p = rng.q_polynomial();
        LaurentV r = rng.q_polynomial();
        CHECK(HabiroElement::embed(p * r, T) ==
              HabiroElement::embed(p, T) * HabiroElement::embed(r, T));
        CHECK(HabiroElement::embed(p + r, T) ==
              HabiroElement::embed(p, T) + HabiroElement::embed(r, T));
    }
}

TEST_CASE("truncation compatibility") {
    Rng rng(13u);
    for (int it = 0; it < 40; ++it) {
        const int T = rng.uniform(2, 7);
        const int Tp = rng.uniform(1, T);
        LaurentV p = rng.q_polynomial();
        LaurentV r = rng.q_polynomial();
        const HabiroElement hp = HabiroElement::embed(p, T);
        const HabiroElement hr = HabiroElement::embed(r, T);
        CHECK((hp * hr).reduce_to(Tp) == hp.reduce_to(Tp) * hr.reduce_to(Tp));
        CHECK((hp + hr).reduce_to(Tp) == hp.reduce_to(Tp) + hr.reduce_to(Tp));
        CHECK(hp.reduce_to(Tp) == HabiroElement::embed(p, Tp));
    }
}

TEST_CASE("evaluation at roots of unity") {
    CHECK(HabiroElement::embed(q(1), 3).eval_root(1).integer_value() == 1);
    // Inverse of q at a cube root of unity is q^2.
    const HabiroElement h = HabiroElement::embed(q(-1), 4);
    CHECK(h.eval_root(3) == CyclotomicResidue::q_power(2, 3));
    CHECK_THROWS(HabiroElement::embed(q(1), 3).eval_root(4));

    // Well-definedness under representative change: adding ideal multiples
    // does not change any in-range evaluation.
    Rng rng(17u);
    for (int it = 0; it < 20; ++it) {
        const int T = rng.uniform(1, 6);
        LaurentV p = rng.q_polynomial();
        LaurentV mult = rng.q_polynomial();
        LaurentV p2 = p + mult * poch(T);
        CHECK(HabiroElement::embed(p, T) == HabiroElement::embed(p2, T));
        for (int n = 1; n <= T; ++n)
            CHECK(eval_at_root(p, n) == eval_at_root(p2, n));
    }
}

TEST_CASE("taylor digits at q=1") {
    // 1 - q has digits (0, -1, 0, ...).
    const HabiroElement h = HabiroElement::embed(LaurentV(1) - q(1), 5);
    const auto d = h.taylor_at_1(3);
    CHECK(d == std::vector<Int>({Int(0), Int(-1), Int(0), Int(0)}));
    CHECK_THROWS(h.taylor_at_1(5));
    // Well-defined under representative change within the guaranteed digits.
    Rng rng(21u);
    for (int it = 0; it < 20; ++it) {
        const int T = rng.uniform(2, 6);
        LaurentV p = rng.q_polynomial(4, 4, 6);
        if (!p.is_zero() && p.min_exp() < 0) p = p.shifted(-p.min_exp());
        LaurentV p2 = p + rng.q_polynomial(3, 2, 4) * poch(T);
        if (!p2.is_zero() && p2.min_exp() < 0) continue;
        const auto d1 = HabiroElement::embed(p, T).taylor_at_1(T - 1);
        // Direct Taylor digits of the unreduced polynomial p2 agree up to T-1.
        std::vector<Int> direct(static_cast<std::size_t>(T), Int(0));
        for (const auto& [ve, c] : p2.terms()) {
            Int coeff = 1;
            const int e = ve / 2;
            for (int j = 0; j <= T - 1 && j <= e; ++j) {
                if (j > 0) coeff = coeff * (e - j + 1) / j;
                direct[static_cast<std::size_t>(j)] += c * coeff;
            }
        }
        CHECK(d1 == direct);
    }
}

TEST_CASE("laurent membership certificates") {
    CHECK(HabiroElement::embed(q(3), 5).laurent_membership(q(3)));
    CHECK_FALSE(HabiroElement::embed(q(-1), 5).laurent_membership(-q(-1)));
    CHECK(HabiroElement::embed(q(-2) + LaurentV(1), 6).laurent_membership(q(-2) + LaurentV(1)));
}
