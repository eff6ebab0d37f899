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

#include "drinfeld/frobenius.hpp"

#include <algorithm>

#include "drinfeld/quadform.hpp"

namespace drinfeld {

namespace {

Poly scaled_prime(const ReducedModule& m, int mu) {
    // mu_p * p as an element of A
    return m.field.modulus().times(mu);
}

SkewPoly two_pi_plus_a(const ReducedModule& m, const Poly& a_p) {
    const ResidueField& F = m.field;
    std::vector<Poly> mono(static_cast<std::size_t>(F.d()) + 1, F.zero());
    mono.back() = F.from_int(2);
    return skew_add(F, SkewPoly{std::move(mono)}, psi_a(m, a_p));
}

std::vector<int> flatten(const SkewPoly& u, int len_tau, int d) {
    std::vector<int> v(static_cast<std::size_t>(len_tau) * d, 0);
    for (int i = 0; i <= u.deg_tau() && i < len_tau; ++i)
        for (int j = 0; j < d; ++j)
            v[static_cast<std::size_t>(i) * d + j] = u.coeff(i).coeff(j);
    return v;
}

std::vector<Poly> monic_divisors(const Poly& b) {
    int q = b.q();
    std::vector<Poly> divs{Poly::constant(q, 1)};
    if (b.is_constant()) return divs;
    for (const auto& [l, e] : factor(b).factors) {
        std::vector<Poly> next;
        Poly power = Poly::constant(q, 1);
        for (int j = 0; j <= e; ++j) {
            for (const auto& d : divs) next.push_back(d * power);
            power = power * l;
        }
        divs = std::move(next);
    }
    return divs;
}

}  // namespace

CharPolyResult char_poly(const ReducedModule& m) {
    const ResidueField& F = m.field;
    int d = F.d();
    int q = F.q();
    SkewPoly tau2d = skew_tau_power(F, 2 * d);
    SkewPoly taud = skew_tau_power(F, d);
    CharPolyResult found{Poly::zero(q), 0};
    int hits = 0;
    for (int mu = 1; mu < q; ++mu) {
        SkewPoly w = skew_add(F, tau2d, psi_a(m, scaled_prime(m, mu)));
        bool low_zero = true;
        for (int i = 0; i < d && low_zero; ++i)
            if (!w.coeff(i).is_zero()) low_zero = false;
        if (!low_zero) continue;
        Poly a = -w.coeff(d);  // lift of gamma(a_p), degree < d
        if (2 * a.deg() > d) continue;
        SkewPoly check = skew_add(F, w, skew_mul(F, psi_a(m, a), taud));
        if (!check.is_zero()) continue;
        found = {a, mu};
        ++hits;
    }
    if (hits != 1)
        throw std::logic_error("char_poly: expected exactly one (a_p, mu_p) for p = " +
                               F.modulus().to_string() + ", got " + std::to_string(hits));
    return found;
}

bool conductor_divides(const ReducedModule& m, const Poly& a_p, const Poly& m0) {
    if (!m0.is_monic()) throw std::invalid_argument("conductor_divides: m0 must be monic");
    if (m0.is_one()) return true;
    const ResidueField& F = m.field;
    SkewPoly v = two_pi_plus_a(m, a_p);
    SkewPoly w = psi_a(m, m0);
    return right_divmod(F, v, w).rem.is_zero();
}

ConductorChain conductor_chain(const ReducedModule& m, const Poly& a_p, int mu_p) {
    int q = m.field.q();
    Poly disc = a_p * a_p - scaled_prime(m, mu_p).times(4);
    SquarefreeSplit split = squarefree_split(disc);
    Poly b_p = Poly::constant(q, 1);
    if (!split.b_max.is_one()) {
        for (const auto& [l, e] : factor(split.b_max).factors) {
            Poly power = Poly::constant(q, 1);
            Poly best = power;
            for (int j = 1; j <= e; ++j) {
                power = power * l;
                if (!conductor_divides(m, a_p, power)) break;
                best = power;
            }
            b_p = b_p * best;
        }
    }
    Poly c_p = divmod(split.b_max, b_p).quot;
    Poly delta_p = c_p * c_p * split.delta;
    return ConductorChain{split.b_max, split.delta, b_p, c_p, delta_p};
}

bool divisibility_oracle(const ReducedModule& m, const Poly& m0) {
    if (!m0.is_monic()) throw std::invalid_argument("divisibility_oracle: m0 must be monic");
    const ResidueField& F = m.field;
    if (divides(F.modulus(), m0) && !m0.is_one())
        throw std::invalid_argument("divisibility_oracle: m0 not coprime to p");
    if (m0.is_one()) return true;
    FpPoly t = torsion_poly(m, m0);
    FpPoly xqd = fp_powmod(F, fp_x(F), q_pow(F.q(), F.d()), t);
    // scalar candidates a with deg a < deg m0
    std::int64_t total = q_pow(F.q(), m0.deg());
    for (std::int64_t n = 0; n < total; ++n) {
        std::vector<int> coeffs;
        std::int64_t v = n;
        for (int i = 0; i < m0.deg(); ++i) {
            coeffs.push_back(static_cast<int>(v % F.q()));
            v /= F.q();
        }
        Poly a(F.q(), std::move(coeffs));
        FpPoly pa = a.is_zero() ? FpPoly{} : fp_divmod(F, as_additive_poly(F, psi_a(m, a)), t).rem;
        if (fp_sub(F, xqd, pa).is_zero()) return true;
    }
    return false;
}

Centralizer centralizer(const ReducedModule& m, int deg_bound) {
    if (deg_bound < 0) throw std::invalid_argument("centralizer: negative degree bound");
    const ResidueField& F = m.field;
    int d = F.d();
    int unknowns = (deg_bound + 1) * d;
    int len_tau = deg_bound + 3;  // u psi_T - psi_T u has tau-degree <= deg_bound + 2
    SkewPoly pt = m.psi_T();
    FqMat sys(F.q(), len_tau * d, unknowns);
    for (int i = 0; i <= deg_bound; ++i)
        for (int k = 0; k < d; ++k) {
            std::vector<Poly> c(static_cast<std::size_t>(i) + 1, F.zero());
            c.back() = Poly::monomial(F.q(), k);
            SkewPoly u{std::move(c)};
            SkewPoly img = skew_sub(F, skew_mul(F, u, pt), skew_mul(F, pt, u));
            std::vector<int> col = flatten(img, len_tau, d);
            for (std::size_t r = 0; r < col.size(); ++r)
                sys.at(static_cast<int>(r), i * d + k) = col[r];
        }
    std::vector<std::vector<int>> null = nullspace(sys);
    Centralizer result{static_cast<int>(null.size()), {}};
    for (const auto& vec : null) {
        std::vector<Poly> c;
        for (int i = 0; i <= deg_bound; ++i) {
            std::vector<int> coeffs(vec.begin() + i * d, vec.begin() + (i + 1) * d);
            c.emplace_back(F.q(), std::move(coeffs));
        }
        result.basis.push_back(skew_make(F, std::move(c)));
    }
    return result;
}

bool centralizer_membership(const ReducedModule& m, const Poly& a_p, const Poly& m0) {
    if (m0.is_one()) return true;
    const ResidueField& F = m.field;
    int d = F.d();
    int bound = 2 * d - 2 * m0.deg();
    if (bound < 0) return false;
    Centralizer cent = centralizer(m, bound);
    SkewPoly w = psi_a(m, m0);
    SkewPoly v = two_pi_plus_a(m, a_p);
    int len_tau = 2 * d + 1;
    FqMat sys(F.q(), len_tau * d, cent.dim);
    for (int j = 0; j < cent.dim; ++j) {
        std::vector<int> col =
            flatten(skew_mul(F, cent.basis[static_cast<std::size_t>(j)], w), len_tau, d);
        for (std::size_t r = 0; r < col.size(); ++r) sys.at(static_cast<int>(r), j) = col[r];
    }
    return solve(sys, flatten(v, len_tau, d)).has_value();
}

ModuleStructure module_structure(const ReducedModule& m) {
    const ResidueField& F = m.field;
    int d = F.d();
    int q = F.q();
    FqMat act = frobenius_action_matrix(F, m.psi_T());
    std::vector<std::vector<Poly>> tmat(static_cast<std::size_t>(d),
                                        std::vector<Poly>(static_cast<std::size_t>(d), Poly::zero(q)));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Poly e = Poly::constant(q, (q - act.at(i, j)) % q);
            if (i == j) e = e + Poly::T(q);
            tmat[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
        }
    std::vector<Poly> inv = smith_invariant_factors(std::move(tmat));
    for (std::size_t i = 0; i + 2 < inv.size(); ++i)
        if (!inv[i].is_one())
            throw std::logic_error("module_structure: more than two nontrivial invariant factors");
    Poly d2 = inv.back();
    Poly d1 = inv.size() >= 2 ? inv[inv.size() - 2] : Poly::constant(q, 1);
    return ModuleStructure{d1, d2};
}

ModuleStructure module_structure_torsion_scan(const ReducedModule& m) {
    const ResidueField& F = m.field;
    int q = F.q();
    int d = F.d();
    auto eval_action = [&](const Poly& a, const Poly& lambda) {
        SkewPoly u = psi_a(m, a);
        Poly r = F.zero();
        for (int i = 0; i <= u.deg_tau(); ++i) {
            if (u.coeff(i).is_zero()) continue;
            r = r + F.mul(u.coeff(i), F.frob(i, lambda));
        }
        return r;
    };
    std::vector<Poly> elems = F.elements();
    // exponent d2 = lcm of the element orders
    Poly d2 = Poly::constant(q, 1);
    for (const auto& lambda : elems) {
        if (lambda.is_zero()) continue;
        Poly ord = Poly::zero(q);
        for (int k = 0; k <= d && ord.is_zero(); ++k)
            for (const auto& a : monic_polys(q, k))
                if (eval_action(a, lambda).is_zero()) {
                    ord = a;
                    break;
                }
        if (ord.is_zero()) throw std::logic_error("torsion scan: element order not found");
        Poly g = gcd_monic(d2, ord);
        d2 = (d2 * divmod(ord, g).quot).monic();
    }
    auto kernel_count = [&](const Poly& a) {
        std::int64_t n = 0;
        for (const auto& lambda : elems)
            if (eval_action(a, lambda).is_zero()) ++n;
        return n;
    };
    Poly d1 = Poly::constant(q, 1);
    for (const auto& [l, e] : factor(d2).factors) {
        Poly power = Poly::constant(q, 1);
        for (int j = 1; j <= e; ++j) {
            power = power * l;
            if (kernel_count(power) == q_pow(q, 2 * j * l.deg()))
                d1 = d1 * l;  // level j of the l-primary part is free of rank 2
            else
                break;
        }
    }
    return ModuleStructure{d1.monic(), d2};
}

FrobeniusRecord build_record(const DrinfeldModuleSpec& psi, const Poly& p) {
    return build_record(reduce_mod(psi, p));
}

FrobeniusRecord build_record(const ReducedModule& m) {
    const ResidueField& F = m.field;
    const Poly& p = F.modulus();
    int q = F.q();
    int d = F.d();
    auto fail = [&](const std::string& what) {
        throw std::logic_error("build_record invariant '" + what + "' failed at p = " +
                               p.to_string());
    };

    CharPolyResult cp = char_poly(m);
    // P(pi) = 0 by direct substitution
    SkewPoly subst = skew_add(
        F,
        skew_add(F, skew_tau_power(F, 2 * d),
                 skew_mul(F, psi_a(m, cp.a_p), skew_tau_power(F, d))),
        psi_a(m, scaled_prime(m, cp.mu_p)));
    if (!subst.is_zero()) fail("P(pi) = 0");
    if (2 * cp.a_p.deg() > d) fail("deg a_p <= deg p / 2");

    ConductorChain chain = conductor_chain(m, cp.a_p, cp.mu_p);
    Poly disc = cp.a_p * cp.a_p - scaled_prime(m, cp.mu_p).times(4);
    if (chain.b_max * chain.b_max * chain.delta_K != disc) fail("disc = b_max^2 delta_K");
    if (chain.b_p * chain.c_p != chain.b_max) fail("b_p c_p = b_max");
    if (chain.b_p * chain.b_p * chain.delta_p != disc) fail("disc = b_p^2 delta_p");
    if (chain.delta_p != chain.c_p * chain.c_p * chain.delta_K) fail("delta_p = c_p^2 delta_K");
    if (!is_imaginary(chain.delta_K)) fail("delta_K imaginary");
    // membership is divisor-closed and matches b_p across the whole lattice
    for (const auto& mdiv : monic_divisors(chain.b_max))
        if (conductor_divides(m, cp.a_p, mdiv) != divides(mdiv, chain.b_p))
            fail("divisor lattice agreement");

    ModuleStructure ms = module_structure(m);
    if (!divides(ms.d1, ms.d2)) fail("d1 | d2");
    if (ms.d1.deg() + ms.d2.deg() != d) fail("|d1 d2| = |p|");
    if (2 * ms.d2.deg() < d) fail("2 deg d2 >= deg p");
    Poly p_at_one = Poly::constant(q, 1) + cp.a_p + scaled_prime(m, cp.mu_p);
    if ((ms.d1 * ms.d2).monic() != p_at_one.monic()) fail("monic(d1 d2) = monic(P(1))");

    bool ss = cp.a_p.is_zero();
    if (ss) {
        if (!chain.b_p.is_one() || !chain.c_p.is_one() || !ms.d1.is_one())
            fail("supersingular: b_p = c_p = d1 = 1");
        Poly beta = p - ms.d2;
        if (beta.is_zero() || !beta.is_constant()) fail("supersingular: d2 = p - beta");
    }

    return FrobeniusRecord{p,         cp.a_p,     cp.mu_p,    disc,
                           chain.b_max, chain.delta_K, chain.b_p, chain.c_p,
                           chain.delta_p, ms.d1,   ms.d2,      j_invariant(m),
                           ss};
}

}  // namespace drinfeld
