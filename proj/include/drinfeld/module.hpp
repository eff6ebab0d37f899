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

#ifndef DRINFELD_MODULE_HPP
#define DRINFELD_MODULE_HPP

#include <vector>

#include "drinfeld/ratfunc.hpp"
#include "drinfeld/residue.hpp"

namespace drinfeld {

/// Rank-2 Drinfeld module over F = F_q(T): psi_T = T + g1 tau + g2 tau^2.
struct DrinfeldModuleSpec {
    int q;
    RatFunc g1;
    RatFunc g2;

    DrinfeldModuleSpec(int q_, RatFunc g1_, RatFunc g2_)
        : q(q_), g1(std::move(g1_)), g2(std::move(g2_)) {
        Fq check(q);  // validates q
        if (g2.is_zero()) throw std::invalid_argument("DrinfeldModuleSpec: g2 must be nonzero");
    }
};

/// psi tensor F_p: psi_T reduced at a prime of good reduction.
struct ReducedModule {
    ResidueField field;
    Poly gbar1;
    Poly gbar2;

    SkewPoly psi_T() const {
        return skew_make(field, {field.reduce(Poly::T(field.q())), gbar1, gbar2});
    }
};

/// Skew polynomial with coefficients in F_q(T); tau c = c^q tau still.
/// Only what psi_a over the generic fiber needs.
struct SkewRat {
    std::vector<RatFunc> c;

    int deg_tau() const noexcept { return c.empty() ? kNegInf : static_cast<int>(c.size()) - 1; }
};

SkewRat skew_rat_add(const SkewRat& u, const SkewRat& v);
SkewRat skew_rat_mul(int q, const SkewRat& u, const SkewRat& v);

/// ord_p(g1) >= 0 and ord_p(g2) = 0. Throws if p is not monic irreducible.
bool good_reduction(const DrinfeldModuleSpec& psi, const Poly& p);

/// The finite set of bad-reduction primes: divisors of den(g1)*den(g2)*num(g2).
std::vector<Poly> bad_primes(const DrinfeldModuleSpec& psi);

/// Throws on a bad-reduction prime.
ReducedModule reduce_mod(const DrinfeldModuleSpec& psi, const Poly& p);

/// psi_a by Horner over the base-T digits of a.
SkewPoly psi_a(const ReducedModule& m, const Poly& a);
SkewRat psi_a(const DrinfeldModuleSpec& psi, const Poly& a);

/// The additive polynomial psi_a(x), degree q^(2 deg a). a != 0.
FpPoly torsion_poly(const ReducedModule& m, const Poly& a);

/// j = g1^(q+1) / g2.
RatFunc j_invariant(const DrinfeldModuleSpec& psi);
Poly j_invariant(const ReducedModule& m);

}  // namespace drinfeld

#endif
