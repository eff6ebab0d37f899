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

#ifndef DRINFELD_RESIDUE_HPP
#define DRINFELD_RESIDUE_HPP

#include <string>
#include <vector>

#include "drinfeld/linalg.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

/// The residue field F_p = A/pA for a monic irreducible p. Elements are
/// polynomials of degree < deg p. The q-power maps lambda -> lambda^(q^i)
/// are cached as F_q-matrices since they dominate skew multiplication.
class ResidueField {
   public:
    explicit ResidueField(Poly modulus);

    int q() const noexcept { return modulus_.q(); }
    int d() const noexcept { return modulus_.deg(); }
    const Poly& modulus() const noexcept { return modulus_; }
    std::int64_t size() const { return q_pow(q(), d()); }

    Poly reduce(const Poly& a) const { return poly_mod(a, modulus_); }
    Poly zero() const { return Poly::zero(q()); }
    Poly one() const { return Poly::constant(q(), 1); }
    Poly from_int(int c) const { return Poly::constant(q(), ((c % q()) + q()) % q()); }

    Poly add(const Poly& a, const Poly& b) const { return a + b; }
    Poly sub(const Poly& a, const Poly& b) const { return a - b; }
    Poly neg(const Poly& a) const { return -a; }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
    Poly inv(const Poly& a) const;
    Poly pow(const Poly& a, std::int64_t e) const;

    /// a^(q^i), via the cached q-power matrices (i taken mod d).
    Poly frob(int i, const Poly& a) const;

    /// Enumeration of all q^d elements, lexicographic.
    std::vector<Poly> elements() const;

   private:
    Poly modulus_;
    std::vector<FqMat> frob_mats_;  // frob_mats_[i] = matrix of lambda -> lambda^(q^i)
};

/// Element of F_p{tau}: coefficients in F_p, lowest tau-degree first,
/// no trailing zeros. Multiplication twists by tau c = c^q tau.
struct SkewPoly {
    std::vector<Poly> c;

    int deg_tau() const noexcept { return c.empty() ? kNegInf : static_cast<int>(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }
    const Poly& coeff(int i) const;

    friend bool operator==(const SkewPoly& a, const SkewPoly& b) noexcept { return a.c == b.c; }
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) noexcept { return !(a == b); }
};

SkewPoly skew_zero();
SkewPoly skew_const(const ResidueField& F, const Poly& a);
SkewPoly skew_tau_power(const ResidueField& F, int k);  // tau^k
SkewPoly skew_make(const ResidueField& F, std::vector<Poly> coeffs);

SkewPoly skew_add(const ResidueField& F, const SkewPoly& u, const SkewPoly& v);
SkewPoly skew_sub(const ResidueField& F, const SkewPoly& u, const SkewPoly& v);
SkewPoly skew_neg(const ResidueField& F, const SkewPoly& u);
/// Twisted product: coefficient j of u*v is sum_{i+k=j} u_i * v_k^(q^i).
SkewPoly skew_mul(const ResidueField& F, const SkewPoly& u, const SkewPoly& v);

struct SkewDivMod {
    SkewPoly quot;
    SkewPoly rem;
};
/// v = quot*w + rem with deg_tau rem < deg_tau w (right division). Unique.
SkewDivMod right_divmod(const ResidueField& F, const SkewPoly& v, const SkewPoly& w);

std::string skew_to_string(const SkewPoly& u);

/// Commutative polynomial over F_p (dense, low degree first); the codomain
/// of as_additive_poly and the substrate of the torsion-divisibility oracle.
struct FpPoly {
    std::vector<Poly> c;

    int deg() const noexcept { return c.empty() ? kNegInf : static_cast<int>(c.size()) - 1; }
    bool is_zero() const noexcept { return c.empty(); }

    friend bool operator==(const FpPoly& a, const FpPoly& b) noexcept { return a.c == b.c; }
};

FpPoly fp_make(const ResidueField& F, std::vector<Poly> coeffs);
FpPoly fp_x(const ResidueField& F);
FpPoly fp_add(const ResidueField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const ResidueField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const ResidueField& F, const FpPoly& a, const FpPoly& b);
struct FpDivMod {
    FpPoly quot;
    FpPoly rem;
};
FpDivMod fp_divmod(const ResidueField& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_powmod(const ResidueField& F, const FpPoly& base, std::int64_t e, const FpPoly& m);
FpPoly fp_compose_mod(const ResidueField& F, const FpPoly& outer, const FpPoly& inner,
                      const FpPoly& m);
Poly fp_eval(const ResidueField& F, const FpPoly& a, const Poly& x);

/// The F_q-linear polynomial sum u_i x^(q^i) attached to a skew polynomial.
FpPoly as_additive_poly(const ResidueField& F, const SkewPoly& u);

/// Matrix of lambda -> sum u_i lambda^(q^i) on F_p in the basis {1, T, ..., T^(d-1)}.
FqMat frobenius_action_matrix(const ResidueField& F, const SkewPoly& u);

}  // namespace drinfeld

#endif
