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

#include "drinfeld/module.hpp"

#include <algorithm>

namespace drinfeld {

SkewRat skew_rat_add(const SkewRat& u, const SkewRat& v) {
    if (u.c.empty()) return v;
    if (v.c.empty()) return u;
    int q = u.c[0].q();
    std::vector<RatFunc> c(std::max(u.c.size(), v.c.size()), RatFunc(q));
    for (std::size_t i = 0; i < c.size(); ++i) {
        RatFunc x = i < u.c.size() ? u.c[i] : RatFunc(q);
        RatFunc y = i < v.c.size() ? v.c[i] : RatFunc(q);
        c[i] = x + y;
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return SkewRat{std::move(c)};
}

SkewRat skew_rat_mul(int q, const SkewRat& u, const SkewRat& v) {
    if (u.c.empty() || v.c.empty()) return SkewRat{};
    std::vector<RatFunc> c(u.c.size() + v.c.size() - 1, RatFunc(q));
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (u.c[i].is_zero()) continue;
        for (std::size_t k = 0; k < v.c.size(); ++k) {
            if (v.c[k].is_zero()) continue;
            c[i + k] = c[i + k] + u.c[i] * v.c[k].pow(q_pow(q, static_cast<int>(i)));
        }
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return SkewRat{std::move(c)};
}

bool good_reduction(const DrinfeldModuleSpec& psi, const Poly& p) {
    if (!p.is_monic() || !is_irreducible(p))
        throw std::invalid_argument("good_reduction: p must be monic irreducible");
    // Fractions are reduced, so ord_p(g) >= 0 iff p does not divide the
    // denominator, and ord_p(g) = 0 iff additionally p does not divide the
    // numerator.
    if (divides(p, psi.g1.den())) return false;
    if (divides(p, psi.g2.den()) || divides(p, psi.g2.num())) return false;
    return true;
}

std::vector<Poly> bad_primes(const DrinfeldModuleSpec& psi) {
    Poly prod = psi.g1.den() * psi.g2.den() * psi.g2.num();
    std::vector<Poly> out;
    for (const auto& [l, e] : factor(prod).factors) out.push_back(l);
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return lex_less(a, b);
    });
    return out;
}

ReducedModule reduce_mod(const DrinfeldModuleSpec& psi, const Poly& p) {
    if (!good_reduction(psi, p))
        throw std::invalid_argument("reduce_mod: bad-reduction prime");
    ResidueField F(p);
    auto red = [&](const RatFunc& g) {
        Poly num = F.reduce(g.num());
        Poly den = F.reduce(g.den());
        return F.mul(num, F.inv(den));
    };
    return ReducedModule{F, red(psi.g1), red(psi.g2)};
}

SkewPoly psi_a(const ReducedModule& m, const Poly& a) {
    const ResidueField& F = m.field;
    SkewPoly pt = m.psi_T();
    SkewPoly r = skew_zero();
    for (int i = a.deg(); i >= 0; --i) {
        r = skew_mul(F, r, pt);
        r = skew_add(F, r, skew_const(F, F.from_int(a.coeff(i))));
    }
    return r;
}

SkewRat psi_a(const DrinfeldModuleSpec& psi, const Poly& a) {
    int q = psi.q;
    SkewRat pt{{RatFunc(Poly::T(q)), psi.g1, psi.g2}};
    SkewRat r{};
    for (int i = a.deg(); i >= 0; --i) {
        r = skew_rat_mul(q, r, pt);
        SkewRat digit{{RatFunc(Poly::constant(q, a.coeff(i)))}};
        r = skew_rat_add(r, digit);
    }
    return r;
}

FpPoly torsion_poly(const ReducedModule& m, const Poly& a) {
    if (a.is_zero()) throw std::domain_error("torsion_poly: zero input");
    return as_additive_poly(m.field, psi_a(m, a));
}

RatFunc j_invariant(const DrinfeldModuleSpec& psi) {
    return psi.g1.pow(psi.q + 1) / psi.g2;
}

Poly j_invariant(const ReducedModule& m) {
    const ResidueField& F = m.field;
    return F.mul(F.pow(m.gbar1, F.q() + 1), F.inv(m.gbar2));
}

}  // namespace drinfeld
