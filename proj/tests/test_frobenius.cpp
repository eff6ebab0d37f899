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

#include "drinfeld/frobenius.hpp"
#include "drinfeld/quadform.hpp"

using namespace drinfeld;

namespace {

DrinfeldModuleSpec default_psi(int q) {
    return DrinfeldModuleSpec(q, RatFunc::parse(q, "1"), RatFunc::parse(q, "1"));
}

}  // namespace

TEST_CASE("char_poly worked instance") {
    int q = 3;
    ReducedModule m = reduce_mod(default_psi(q), Poly::T(q));
    CharPolyResult cp = char_poly(m);
    CHECK(cp.a_p == Poly::constant(q, 1));
    CHECK(cp.mu_p == 2);

    // direct substitution: tau^2 + psi_{a_p} tau + psi_{mu_p p} = 0
    const ResidueField& F = m.field;
    SkewPoly check = skew_add(
        F,
        skew_add(F, skew_tau_power(F, 2),
                 skew_mul(F, psi_a(m, cp.a_p), skew_tau_power(F, 1))),
        psi_a(m, m.field.modulus().times(cp.mu_p)));
    CHECK(check.is_zero());
}

TEST_CASE("trace bound over a small sweep") {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    for (int x = 1; x <= 4; ++x)
        for (const auto& p : monic_irreducibles(q, x)) {
            ReducedModule m = reduce_mod(psi, p);
            CharPolyResult cp = char_poly(m);
            CHECK(2 * cp.a_p.deg() <= p.deg());  // deg a_p <= deg p / 2
            CHECK(cp.mu_p != 0);
            // supersingular specialization: tau^{2d} = -psi_{mu p}
            if (cp.a_p.is_zero()) {
                const ResidueField& F = m.field;
                CHECK(skew_tau_power(F, 2 * F.d()) ==
                      skew_neg(F, psi_a(m, p.times(cp.mu_p))));
            }
        }
}

TEST_CASE("conductor_chain worked instance") {
    int q = 3;
    ReducedModule m = reduce_mod(default_psi(q), Poly::T(q));
    CharPolyResult cp = char_poly(m);
    ConductorChain ch = conductor_chain(m, cp.a_p, cp.mu_p);
    // disc = 1 - 8T = 1 + T mod 3
    CHECK(ch.b_max.is_one());
    CHECK(ch.delta_K == Poly(q, {1, 1}));
    CHECK(ch.b_p.is_one());
    CHECK(ch.c_p.is_one());
    CHECK(ch.delta_p == Poly(q, {1, 1}));
}

TEST_CASE("membership test basics") {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    for (const auto& p : monic_irreducibles(q, 3)) {
        ReducedModule m = reduce_mod(psi, p);
        CharPolyResult cp = char_poly(m);
        // m0 = 1 always passes
        CHECK(conductor_divides(m, cp.a_p, Poly::constant(q, 1)));
        CHECK(divisibility_oracle(m, Poly::constant(q, 1)));
    }
}

TEST_CASE("supersingular branch") {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    int seen = 0;
    for (const auto& p : monic_irreducibles(q, 3)) {
        FrobeniusRecord r = build_record(psi, p);
        if (!r.supersingular) continue;
        ++seen;
        CHECK(r.a_p.is_zero());
        CHECK(r.b_max.is_one());
        CHECK(r.b_p.is_one());
        CHECK(r.c_p.is_one());
        CHECK(r.delta_p == p.times(-4 * r.mu_p));
        CHECK(r.d1.is_one());
        // d2 = p - beta for a unit beta
        Poly beta = p - r.d2;
        CHECK(beta.is_constant());
        CHECK(!beta.is_zero());
    }
    CHECK(seen == 3);  // the three supersingular cubics for the default module
}

TEST_CASE("module_structure worked instance") {
    int q = 3;
    ReducedModule m = reduce_mod(default_psi(q), Poly::T(q));
    // T acts on F_3 as lambda -> lambda^3 + lambda^9 = 2 lambda
    ModuleStructure ms = module_structure(m);
    CHECK(ms.d1.is_one());
    CHECK(ms.d2 == Poly(q, {1, 1}));
    ModuleStructure scan = module_structure_torsion_scan(m);
    CHECK(scan.d1 == ms.d1);
    CHECK(scan.d2 == ms.d2);
}

TEST_CASE("module structure invariants across degree <= 3") {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    for (int x = 1; x <= 3; ++x)
        for (const auto& p : monic_irreducibles(q, x)) {
            FrobeniusRecord r = build_record(psi, p);
            CHECK(divides(r.d1, r.d2));
            CHECK(r.d1.deg() + r.d2.deg() == p.deg());  // |d1 d2| = |p|
            CHECK(2 * r.d2.deg() >= p.deg());
            // Euler-characteristic identity: monic(d1 d2) = monic(P(1))
            Poly p1 = Poly::constant(q, 1) + r.a_p + p.times(r.mu_p);
            CHECK(r.d1 * r.d2 == p1.monic());
            // brute-force agreement
            ModuleStructure scan = module_structure_torsion_scan(reduce_mod(psi, p));
            CHECK(scan.d1 == r.d1);
            CHECK(scan.d2 == r.d2);
        }
}

TEST_CASE("centralizer") {
    int q = 3;
    ReducedModule m = reduce_mod(default_psi(q), Poly(q, {1, 0, 1}));
    const ResidueField& F = m.field;
    // B = 0: constants commuting with psi_T are exactly F_q
    Centralizer c0 = centralizer(m, 0);
    CHECK(c0.dim == 1);
    REQUIRE(c0.basis.size() == 1);
    CHECK(c0.basis[0].coeff(0).is_constant());
    // every psi_a with 2 deg a <= B lies in the centralizer
    Centralizer c4 = centralizer(m, 4);
    for (const auto& u : c4.basis)
        CHECK(skew_mul(F, u, m.psi_T()) == skew_mul(F, m.psi_T(), u));
    CHECK(c4.dim >= 3);  // 1, psi_T, psi_{T^2} are independent
}

TEST_CASE("record invariants: disc relations and no-cancellation") {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    for (int x = 1; x <= 4; ++x)
        for (const auto& p : monic_irreducibles(q, x)) {
            FrobeniusRecord r = build_record(psi, p);
            CHECK(r.disc == r.a_p * r.a_p - p.times(4 * r.mu_p));
            CHECK(r.b_max * r.b_max * r.delta_K == r.disc);
            CHECK(r.b_p * r.c_p == r.b_max);
            CHECK(r.b_p * r.b_p * r.delta_p == r.disc);
            CHECK(r.delta_p == r.c_p * r.c_p * r.delta_K);
            // |disc| = |b_p|^2 |delta_p| on the exact log scale
            CHECK(r.disc.norm() == r.b_p.norm() * r.b_p.norm() * r.delta_p.norm());
            // delta_K imaginary: odd degree or non-square leading coefficient
            CHECK(is_imaginary(r.delta_K));
            Fq F(q);
            bool odd = r.delta_K.deg() % 2 == 1;
            bool nonsquare_lc = !F.is_square(r.delta_K.lc());
            CHECK((odd || nonsquare_lc));
            CHECK(r.j_bar == j_invariant(reduce_mod(psi, p)));
        }
}

TEST_CASE("three-way oracle agreement on degree <= 4") {
    int q = 3;
    DrinfeldModuleSpec psi = default_psi(q);
    for (int x = 1; x <= 4; ++x)
        for (const auto& p : monic_irreducibles(q, x)) {
            ReducedModule m = reduce_mod(psi, p);
            FrobeniusRecord r = build_record(psi, p);
            for (int dm = 1; 2 * dm <= x; ++dm)
                for (const auto& m0 : monic_polys(q, dm)) {
                    if (divides(p, m0)) continue;
                    bool skew = conductor_divides(m, r.a_p, m0);
                    bool scalar = divisibility_oracle(m, m0);
                    bool cent = centralizer_membership(m, r.a_p, m0);
                    CHECK(skew == scalar);
                    CHECK(skew == cent);
                    // membership implies divisor-closedness
                    if (skew)
                        for (const auto& [l, e] : factor(m0).factors)
                            CHECK(conductor_divides(m, r.a_p, l));
                    // and membership forces m0 | b_p
                    CHECK(skew == divides(m0, r.b_p));
                }
        }
}

TEST_CASE("a second module exercises nontrivial b_p") {
    // find any record with b_p != 1 among small primes of a few modules
    int q = 3;
    int nontrivial = 0;
    std::vector<DrinfeldModuleSpec> mods{
        default_psi(q),
        DrinfeldModuleSpec(q, RatFunc::parse(q, "0,1"), RatFunc::parse(q, "1")),
        DrinfeldModuleSpec(q, RatFunc::parse(q, "2"), RatFunc::parse(q, "0,0,1")),
    };
    for (const auto& psi : mods)
        for (int x = 2; x <= 5; ++x)
            for (const auto& p : monic_irreducibles(q, x)) {
                if (!good_reduction(psi, p)) continue;
                FrobeniusRecord r = build_record(psi, p);
                if (!r.b_p.is_one()) ++nontrivial;
            }
    CHECK(nontrivial > 0);
}
