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

#ifndef DRINFELD_POLY_HPP
#define DRINFELD_POLY_HPP

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "drinfeld/fq.hpp"

namespace drinfeld {

/// Degree of the zero polynomial. Ordered below every attainable degree;
/// chosen far from INT_MIN so that sums of two degrees never wrap.
inline constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

/// |a| = q^(deg a), tracked exactly on a doubled logarithmic scale so that
/// half-integer exponents such as |sqrt(D)| = q^(deg D / 2) stay exact.
struct LogNorm {
    int two_log_q = kNegInf;  // twice log_q of the absolute value

    static LogNorm zero() noexcept { return LogNorm{kNegInf}; }
    static LogNorm one() noexcept { return LogNorm{0}; }

    bool is_zero() const noexcept { return two_log_q == kNegInf; }

    friend LogNorm operator*(LogNorm a, LogNorm b) noexcept {
        if (a.is_zero() || b.is_zero()) return zero();
        return LogNorm{a.two_log_q + b.two_log_q};
    }
    friend bool operator==(LogNorm a, LogNorm b) noexcept { return a.two_log_q == b.two_log_q; }
    friend bool operator<(LogNorm a, LogNorm b) noexcept { return a.two_log_q < b.two_log_q; }
    friend bool operator<=(LogNorm a, LogNorm b) noexcept { return a.two_log_q <= b.two_log_q; }
};

/// Element of A = F_q[T]: coefficients low degree first, no trailing zeros.
class Poly {
   public:
    Poly() : q_(3) {}
    explicit Poly(int q) : q_(q) {}
    Poly(int q, std::vector<int> coeffs) : q_(q), c_(std::move(coeffs)) { normalize(); }

    static Poly zero(int q) { return Poly(q); }
    static Poly constant(int q, int value) { return Poly(q, {value}); }
    static Poly T(int q) { return Poly(q, {0, 1}); }
    /// c * T^k
    static Poly monomial(int q, int k, int c = 1);

    int q() const noexcept { return q_; }
    const std::vector<int>& coeffs() const noexcept { return c_; }
    int deg() const noexcept { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    int coeff(int i) const noexcept {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }
    int lc() const;  // leading coefficient; throws on zero
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }

    LogNorm norm() const noexcept {
        return is_zero() ? LogNorm::zero() : LogNorm{2 * deg()};
    }

    Poly monic() const;       // unit-normalized; throws on zero
    Poly derivative() const;  // formal d/dT
    Poly shifted(int k) const;  // * T^k, k >= 0

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a);
    Poly times(int scalar) const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        // the zero polynomial compares equal across base fields
        return a.c_ == b.c_ && (a.q_ == b.q_ || a.c_.empty());
    }
    friend bool operator!=(const Poly& a, const Poly& b) noexcept { return !(a == b); }

    /// Lexicographic on the coefficient sequence (c_0, c_1, ...), shorter first
    /// among equal prefixes; used for the deterministic sweep order.
    friend bool lex_less(const Poly& a, const Poly& b) noexcept;

    /// Comma-separated coefficients low-to-high, e.g. "1,0,2" = 2T^2 + 1 over F_3.
    std::string to_string() const;
    /// Human form "2*T^2+1".
    std::string to_human() const;
    /// Accepts both the comma form and the human form.
    static Poly parse(int q, const std::string& text);

   private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_same(const Poly& other) const;

    int q_;
    std::vector<int> c_;
};

struct DivMod {
    Poly quot;
    Poly rem;
};

/// a = quot*b + rem with deg rem < deg b. Throws on b = 0.
DivMod divmod(const Poly& a, const Poly& b);
Poly poly_mod(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd; gcd(a, 0) = monic(a). Throws if both are zero.
Poly gcd_monic(const Poly& a, const Poly& b);

/// Extended gcd: g = u*a + v*b with g the monic gcd.
struct ExtGcd {
    Poly g, u, v;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// base^e mod m in F_q[T].
Poly powmod(const Poly& base, std::int64_t e, const Poly& m);

/// Rabin irreducibility test. Throws on constant input.
bool is_irreducible(const Poly& a);

/// Complete factorization a = unit * prod f_i^{e_i} into monic irreducibles.
struct Factorization {
    int unit;  // element of F_q^x
    std::vector<std::pair<Poly, int>> factors;  // sorted by (deg, lex)
};
Factorization factor(const Poly& a);

/// a = b_max^2 * delta with b_max monic maximal and delta squarefree;
/// the unit of a stays in delta. Handles derivative == 0 (p-th powers).
struct SquarefreeSplit {
    Poly b_max;
    Poly delta;
};
SquarefreeSplit squarefree_split(const Poly& a);

/// phi_A(c) = |c| * prod_{l | c} (1 - 1/|l|), exact.
std::int64_t euler_phi_A(const Poly& c);

/// q^e as a 64-bit integer; throws on overflow.
std::int64_t q_pow(int q, int e);

/// All monic irreducibles of degree exactly x, lexicographic by coefficient
/// sequence (c_0 most significant). x >= 1.
std::vector<Poly> monic_irreducibles(int q, int x);

/// All monic polynomials of degree exactly x (x >= 0), lexicographic order.
std::vector<Poly> monic_polys(int q, int x);

}  // namespace drinfeld

#endif
