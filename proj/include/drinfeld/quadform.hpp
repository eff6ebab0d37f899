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

#ifndef DRINFELD_QUADFORM_HPP
#define DRINFELD_QUADFORM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "drinfeld/poly.hpp"
#include "drinfeld/rat.hpp"

namespace drinfeld {

/// Splitting behavior of the place 1/T in F(sqrt(delta)).
enum class InfinityType { ramified, inert, split };

std::string to_string(InfinityType t);

/// ramified iff deg delta odd; split iff even degree and square leading
/// coefficient; inert otherwise. delta squarefree, not a square unit.
InfinityType infinity_type(const Poly& delta);
bool is_imaginary(const Poly& delta);

/// Quadratic residue symbol (K/ell) for K = F(sqrt(delta)), ell monic
/// irreducible: 0 if ell | delta, else +-1 by the Euler criterion.
int quad_symbol(const Poly& delta, const Poly& ell);

/// Binary quadratic form a x^2 + b xy + c y^2 over A.
struct BinaryForm {
    Poly a, b, c;

    friend bool operator==(const BinaryForm& f, const BinaryForm& g) noexcept {
        return f.a == g.a && f.b == g.b && f.c == g.c;
    }
};

Poly discriminant(const BinaryForm& f);  // b^2 - 4ac
bool is_primitive(const BinaryForm& f);
/// deg b < deg a <= deg c
bool is_reduced(const BinaryForm& f);

/// 2x2 matrix over A acting on forms by M^t S M on the Gram matrix.
struct Mat2 {
    Poly m00, m01, m10, m11;

    static Mat2 identity(int q);
    Poly det() const { return m00 * m11 - m01 * m10; }
    friend Mat2 operator*(const Mat2& x, const Mat2& y);
};

/// Requires det M to be a nonzero constant.
BinaryForm act(const Mat2& m, const BinaryForm& f);

struct ReduceResult {
    BinaryForm g;
    Mat2 transcript;  // in SL_2(A); act(transcript, input) == g
};

/// Reduction by translations and the outer-coefficient swap (both det 1).
/// Requires a primitive form with nonzero discriminant.
ReduceResult reduce(const BinaryForm& f);

/// |(-b + sqrt(D)) / (2a)| = q^(deg D / 2 - deg a) for a reduced form with
/// imaginary discriminant; always in [1, |sqrt(D)|].
LogNorm class_point_lognorm(const BinaryForm& g);

/// L(1, chi_delta) as the finite character sum over monic m, deg m < deg delta.
Rat L_one(const Poly& delta_B);

/// Class number h(B) of the maximal order, from L(1, chi) and the class
/// number formula; asserts integrality, positivity and the L-bound.
std::int64_t h_maximal(const Poly& delta_B);

struct OrderInvariants {
    Poly disc_O;
    Poly conductor;  // monic c with (disc_O) = c^2 (disc_B)
    Poly disc_B;     // squarefree part, unit included
    InfinityType inf;
    std::int64_t h_B;
    std::int64_t h_O;
    double cond_prod_over_loglog;  // prod(1 + 1/|l|) / max(1, log log |c|), logged only
};

/// Class number of the order of discriminant disc_O via the conductor formula.
OrderInvariants h_order(const Poly& disc_O);

/// All primitive reduced forms of the given imaginary discriminant.
std::vector<BinaryForm> enumerate_reduced(const Poly& delta);

/// Number of proper-equivalence classes found by BFS over elementary moves
/// (translations of degree <= depth and the swap). Depth-limited: may
/// over-count if depth is too small.
int class_count_oracle(const Poly& delta, int depth);

/// CSV table "delta,deg,infinity_type,L,h_B", one row per imaginary
/// squarefree discriminant.
std::string class_table(const std::vector<Poly>& deltas);

}  // namespace drinfeld

#endif
