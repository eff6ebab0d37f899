/*
   Copyright 2026 The drinfeld-survey authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "drinfeld/module.hpp"

using namespace drinfeld;

namespace {

DrinfeldModuleSpec default_psi(int q) {
    return DrinfeldModuleSpec(q, RatFunc::parse(q, "1"), RatFunc::parse(q, "1"));
}

Poly random_poly(std::mt19937& rng, int q, int max_deg) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    std::uniform_int_distribution<int> dc(0, q - 1);
    std::vector<int> c(static_cast<std::size_t>(dd(rng)) + 1);
    for (auto& x : c) x = dc(rng);
    return Poly(q, std::move(c));
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS(DrinfeldModuleSpec(3, RatFunc::parse(3, "1"), RatFunc::parse(3, "0")));
    CHECK_THROWS(DrinfeldModuleSpec(6, RatFunc::parse(3, "1"), RatFunc::parse(3, "1")));
}

TEST_CASE("good_reduction") {
    int q = 3;
    // psi_T = T + (1/(T+1)) tau + tau^2
    DrinfeldModuleSpec psi(q, RatFunc::parse(q, "1/1,1"), RatFunc::parse(q, "1"));
    CHECK(!good_reduction(psi, Poly(q, {1, 1})));
    CHECK(good_reduction(psi, Poly::T(q)));
    CHECK_THROWS(good_reduction(psi, Poly(q, {2, 0, 1})));  // reducible p

    // integral coefficients: bad primes are exactly the divisors of g2's numerator
    DrinfeldModuleSpec chi(q, RatFunc::parse(q, "0,1"), RatFunc::parse(q, "1,0,2"));
    // num(g2) = 2T^2+1 = 2(T^2+2) = 2(T+1)(T+2)
    auto bad = bad_primes(chi);
    REQUIRE(bad.size() == 2);
    CHECK(bad[0] == Poly(q, {1, 1}));
    CHECK(bad[1] == Poly(q, {2, 1}));
    for (const auto& p : monic_irreducibles(q, 1)) {
        bool listed = false;
        for (const auto& b : bad) listed = listed || b == p;
        CHECK(good_reduction(chi, p) == !listed);
    }
    // den(g1) contributes too
    DrinfeldModuleSpec rho(q, RatFunc::parse(q, "1/0,1"), RatFunc::parse(q, "1"));
    auto bad2 = bad_primes(rho);
    REQUIRE(bad2.size() == 1);
    CHECK(bad2[0] == Poly::T(q));
}

TEST_CASE("reduce_mod") {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    ReducedModule m = reduce_mod(psi, Poly::T(q));
    // T reduces to 0: psi_T = tau + tau^2 over F_T
    SkewPoly pt = m.psi_T();
    CHECK(pt.deg_tau() == 2);
    CHECK(pt.coeff(0).is_zero());
    CHECK(pt.coeff(1) == m.field.one());
    CHECK(pt.coeff(2) == m.field.one());

    // g1 = 1/(T-1) at p = T: (T-1)^{-1} mod T = (-1)^{-1} = 2
    DrinfeldModuleSpec frac(q, RatFunc::parse(q, "1/2,1"), RatFunc::parse(q, "1"));
    ReducedModule mf = reduce_mod(frac, Poly::T(q));
    CHECK(mf.gbar1 == Poly::constant(q, 2));

    // A-coefficients of degree < deg p reduce to themselves
    DrinfeldModuleSpec intg(q, RatFunc::parse(q, "0,1"), RatFunc::parse(q, "2"));
    Poly p2(q, {1, 0, 1});
    ReducedModule mi = reduce_mod(intg, p2);
    CHECK(mi.gbar1 == Poly::T(q));
    CHECK(mi.gbar2 == Poly::constant(q, 2));

    CHECK_THROWS(reduce_mod(DrinfeldModuleSpec(q, RatFunc::parse(q, "1/0,1"),
                                               RatFunc::parse(q, "1")),
                            Poly::T(q)));
}

TEST_CASE("psi_a homomorphism") {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    ReducedModule m = reduce_mod(psi, Poly(q, {1, 0, 1}));
    const ResidueField& F = m.field;

    // constants map to themselves
    for (int c = 0; c < q; ++c) CHECK(psi_a(m, Poly::constant(q, c)) == skew_const(F, F.from_int(c)));

    // psi_{T^2} = psi_T psi_T
    CHECK(psi_a(m, Poly(q, {0, 0, 1})) == skew_mul(F, m.psi_T(), m.psi_T()));

    std::mt19937 rng(321);
    for (int i = 0; i < 60; ++i) {
        Poly a = random_poly(rng, q, 3);
        Poly b = random_poly(rng, q, 3);
        CHECK(psi_a(m, a + b) == skew_add(F, psi_a(m, a), psi_a(m, b)));
        CHECK(psi_a(m, a * b) == skew_mul(F, psi_a(m, a), psi_a(m, b)));
        if (!a.is_zero()) CHECK(psi_a(m, a).deg_tau() == 2 * a.deg());
        // centralizer property
        CHECK(skew_mul(F, psi_a(m, a), m.psi_T()) == skew_mul(F, m.psi_T(), psi_a(m, a)));
    }
}

TEST_CASE("psi_a over the generic fiber and reduction compatibility") {
    int q = 3;
    DrinfeldModuleSpec psi(q, RatFunc::parse(q, "0,1"), RatFunc::parse(q, "2"));
    std::mt19937 rng(654);
    for (const auto& p : monic_irreducibles(q, 2)) {
        if (!good_reduction(psi, p)) continue;
        ReducedModule m = reduce_mod(psi, p);
        for (int i = 0; i < 10; ++i) {
            Poly a = random_poly(rng, q, 2);
            SkewRat generic = psi_a(psi, a);
            SkewPoly reduced = psi_a(m, a);
            // reduce the generic coefficients mod p and compare
            CHECK(generic.deg_tau() == reduced.deg_tau());
            for (int k = 0; k <= generic.deg_tau(); ++k) {
                const RatFunc& g = generic.c[static_cast<std::size_t>(k)];
                REQUIRE(g.is_integral());
                CHECK(m.field.reduce(g.num()) == reduced.coeff(k));
            }
        }
    }
}

TEST_CASE("torsion_poly") {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    ReducedModule m = reduce_mod(psi, Poly::T(q));
    const ResidueField& F = m.field;

    // a = 1 -> x
    CHECK(torsion_poly(m, Poly::constant(q, 1)) == fp_x(F));
    // psi tensor F_T: torsion_poly(T) = x^3 + x^9
    FpPoly t = torsion_poly(m, Poly::T(q));
    CHECK(t.deg() == 9);
    std::vector<Poly> expect(10, F.zero());
    expect[3] = F.one();
    expect[9] = F.one();
    CHECK(t == fp_make(F, expect));
    CHECK_THROWS(torsion_poly(m, Poly::zero(q)));

    // composition law on a larger field
    ReducedModule m2 = reduce_mod(psi, Poly(q, {1, 0, 1}));
    const ResidueField& F2 = m2.field;
    Poly a = Poly(q, {1, 1});
    Poly b = Poly(q, {2, 1});
    FpPoly lhs = torsion_poly(m2, a * b);
    // evaluate the composition pointwise (degrees are too large to expand)
    for (const auto& x : F2.elements()) {
        Poly inner = fp_eval(F2, torsion_poly(m2, b), x);
        CHECK(fp_eval(F2, lhs, x) == fp_eval(F2, torsion_poly(m2, a), inner));
    }
}

TEST_CASE("j_invariant") {
    int q = 3;
    CHECK(j_invariant(default_psi(q)) == RatFunc::parse(q, "1"));
    CHECK(j_invariant(DrinfeldModuleSpec(q, RatFunc::parse(q, "0"), RatFunc::parse(q, "0,1")))
              .is_zero());
    // g1 = T, g2 = 2: j = T^4 / 2 = 2 T^4
    RatFunc j = j_invariant(DrinfeldModuleSpec(q, RatFunc::parse(q, "0,1"), RatFunc::parse(q, "2")));
    CHECK(j == RatFunc(Poly(q, {0, 0, 0, 0, 2})));

    // conjugation by a constant preserves j over the residue field:
    // c^{-1} psi_T c has g1' = g1 c^{q-1}, g2' = g2 c^{q^2-1}
    DrinfeldModuleSpec psi(q, RatFunc::parse(q, "0,1"), RatFunc::parse(q, "2"));
    ReducedModule m = reduce_mod(psi, Poly(q, {1, 0, 1}));
    const ResidueField& F = m.field;
    for (const auto& c : F.elements()) {
        if (c.is_zero()) continue;
        ReducedModule twisted{F, F.mul(m.gbar1, F.pow(c, q - 1)),
                              F.mul(m.gbar2, F.pow(c, q * q - 1))};
        CHECK(j_invariant(twisted) == j_invariant(m));
    }
}
