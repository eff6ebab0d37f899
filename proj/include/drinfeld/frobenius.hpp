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

#ifndef DRINFELD_FROBENIUS_HPP
#define DRINFELD_FROBENIUS_HPP

#include <vector>

#include "drinfeld/module.hpp"

namespace drinfeld {

/// Per-prime invariants of the reduced module: Frobenius characteristic
/// polynomial, conductor chain and invariant factors.
struct FrobeniusRecord {
    Poly p;        // monic irreducible
    Poly a_p;      // trace coefficient, deg <= deg p / 2
    int mu_p;      // element of F_q^x
    Poly disc;     // a_p^2 - 4 mu_p p
    Poly b_max;    // monic, disc = b_max^2 delta_K
    Poly delta_K;  // squarefree part, unit included
    Poly b_p;      // monic, conductor of A[pi] in the endomorphism ring
    Poly c_p;      // monic, b_max / b_p
    Poly delta_p;  // c_p^2 delta_K; disc = b_p^2 delta_p
    Poly d1;       // monic invariant factors, d1 | d2
    Poly d2;
    Poly j_bar;    // j-invariant of the reduced module
    bool supersingular;
};

struct CharPolyResult {
    Poly a_p;
    int mu_p;
};

/// Coefficients of X^2 + a_p X + mu_p p annihilating tau^(deg p).
CharPolyResult char_poly(const ReducedModule& m);

struct ConductorChain {
    Poly b_max;
    Poly delta_K;
    Poly b_p;
    Poly c_p;
    Poly delta_p;
};

/// Membership test behind b_p: m0 | b_p iff psi_{m0} right-divides
/// 2 tau^d + psi_{a_p} exactly.
bool conductor_divides(const ReducedModule& m, const Poly& a_p, const Poly& m0);

ConductorChain conductor_chain(const ReducedModule& m, const Poly& a_p, int mu_p);

/// Independent oracle: Frobenius acts as a scalar on the m0-torsion, i.e.
/// torsion_poly(m0) divides x^(q^d) - psi_a(x) for some a with deg a < deg m0.
/// Exhaustive over a. m0 must be coprime to p.
bool divisibility_oracle(const ReducedModule& m, const Poly& m0);

struct Centralizer {
    int dim;
    std::vector<SkewPoly> basis;
};

/// F_q-basis of {u : deg_tau u <= deg_bound, u psi_T = psi_T u}.
Centralizer centralizer(const ReducedModule& m, int deg_bound);

/// Third oracle: 2 tau^d + psi_{a_p} lies in the F_q-span of
/// {u * psi_{m0} : u in the centralizer}.
bool centralizer_membership(const ReducedModule& m, const Poly& a_p, const Poly& m0);

struct ModuleStructure {
    Poly d1;
    Poly d2;
};

/// Invariant factors of F_p as an A-module through psi, by Smith normal
/// form of T*I - M with M the matrix of the T-action.
ModuleStructure module_structure(const ReducedModule& m);

/// Brute-force oracle for small fields: element orders and kernel counts.
ModuleStructure module_structure_torsion_scan(const ReducedModule& m);

/// Full pipeline; every record invariant is re-checked before returning.
FrobeniusRecord build_record(const DrinfeldModuleSpec& psi, const Poly& p);
FrobeniusRecord build_record(const ReducedModule& m);

}  // namespace drinfeld

#endif
