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

#include "drinfeld/residue.hpp"

#include <sstream>

namespace drinfeld {

ResidueField::ResidueField(Poly modulus) : modulus_(std::move(modulus)) {
    if (!modulus_.is_monic() || modulus_.deg() < 1 || !is_irreducible(modulus_))
        throw std::invalid_argument("ResidueField: modulus must be monic irreducible");
    int d = modulus_.deg();
    int q = modulus_.q();
    // Column j of the q-power matrix is (T^j)^q mod p.
    FqMat m1(q, d, d);
    Poly tq = powmod(Poly::T(q), q, modulus_);
    Poly col = Poly::constant(q, 1);
    for (int j = 0; j < d; ++j) {
        for (int i = 0; i < d; ++i) m1.at(i, j) = col.coeff(i);
        col = reduce(col * tq);
    }
    frob_mats_.push_back(FqMat::identity(q, d));
    for (int i = 1; i < d; ++i) frob_mats_.push_back(m1 * frob_mats_.back());
}

Poly ResidueField::inv(const Poly& a) const {
    if (a.is_zero()) throw std::domain_error("ResidueField: inverse of zero");
    ExtGcd g = ext_gcd(a, modulus_);
    return reduce(g.u);
}

Poly ResidueField::pow(const Poly& a, std::int64_t e) const {
    if (e < 0) return inv(pow(a, -e));
    Poly r = one();
    Poly b = reduce(a);
    while (e > 0) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

Poly ResidueField::frob(int i, const Poly& a) const {
    i %= d();
    if (i == 0) return a;
    std::vector<int> v(static_cast<std::size_t>(d()), 0);
    for (int j = 0; j <= a.deg(); ++j) v[static_cast<std::size_t>(j)] = a.coeff(j);
    return Poly(q(), frob_mats_[static_cast<std::size_t>(i)].apply(v));
}

std::vector<Poly> ResidueField::elements() const {
    std::vector<Poly> out;
    std::int64_t total = size();
    for (std::int64_t n = 0; n < total; ++n) {
        std::vector<int> v;
        std::int64_t m = n;
        for (int i = 0; i < d(); ++i) {
            v.push_back(static_cast<int>(m % q()));
            m /= q();
        }
        out.emplace_back(q(), std::move(v));
    }
    return out;
}

namespace {

void skew_normalize(std::vector<Poly>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

const Poly& SkewPoly::coeff(int i) const {
    static const Poly z;
    if (i < 0 || i >= static_cast<int>(c.size())) {
        // callers always hold coefficients over the right q; zero is shared
        return z;
    }
    return c[static_cast<std::size_t>(i)];
}

SkewPoly skew_zero() { return SkewPoly{}; }

SkewPoly skew_const(const ResidueField& F, const Poly& a) {
    std::vector<Poly> c{F.reduce(a)};
    skew_normalize(c);
    return SkewPoly{std::move(c)};
}

SkewPoly skew_tau_power(const ResidueField& F, int k) {
    std::vector<Poly> c(static_cast<std::size_t>(k) + 1, F.zero());
    c.back() = F.one();
    return SkewPoly{std::move(c)};
}

SkewPoly skew_make(const ResidueField& F, std::vector<Poly> coeffs) {
    for (auto& x : coeffs) x = F.reduce(x);
    skew_normalize(coeffs);
    return SkewPoly{std::move(coeffs)};
}

SkewPoly skew_add(const ResidueField& F, const SkewPoly& u, const SkewPoly& v) {
    std::vector<Poly> c(std::max(u.c.size(), v.c.size()), F.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Poly x = i < u.c.size() ? u.c[i] : F.zero();
        Poly y = i < v.c.size() ? v.c[i] : F.zero();
        c[i] = x + y;
    }
    skew_normalize(c);
    return SkewPoly{std::move(c)};
}

SkewPoly skew_sub(const ResidueField& F, const SkewPoly& u, const SkewPoly& v) {
    return skew_add(F, u, skew_neg(F, v));
}

SkewPoly skew_neg(const ResidueField& F, const SkewPoly& u) {
    std::vector<Poly> c = u.c;
    for (auto& x : c) x = F.neg(x);
    return SkewPoly{std::move(c)};
}

SkewPoly skew_mul(const ResidueField& F, const SkewPoly& u, const SkewPoly& v) {
    if (u.is_zero() || v.is_zero()) return skew_zero();
    for (const auto& x : u.c)
        if (x.q() != F.q() || x.deg() >= F.d())
            throw std::invalid_argument("skew_mul: coefficient outside residue field");
    std::vector<Poly> c(u.c.size() + v.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < u.c.size(); ++i) {
        if (u.c[i].is_zero()) continue;
        for (std::size_t k = 0; k < v.c.size(); ++k) {
            if (v.c[k].is_zero()) continue;
            c[i + k] = c[i + k] + F.mul(u.c[i], F.frob(static_cast<int>(i), v.c[k]));
        }
    }
    skew_normalize(c);
    return SkewPoly{std::move(c)};
}

SkewDivMod right_divmod(const ResidueField& F, const SkewPoly& v, const SkewPoly& w) {
    if (w.is_zero()) throw std::domain_error("right_divmod: division by zero");
    SkewPoly rem = v;
    int dw = w.deg_tau();
    if (rem.deg_tau() < dw) return {skew_zero(), rem};
    std::vector<Poly> quot(static_cast<std::size_t>(rem.deg_tau() - dw) + 1, F.zero());
    while (rem.deg_tau() >= dw) {
        int j = rem.deg_tau() - dw;
        // t * tau^j * w has top coefficient t * (lc w)^(q^j)
        Poly t = F.mul(rem.c.back(), F.inv(F.frob(j, w.c.back())));
        quot[static_cast<std::size_t>(j)] = t;
        std::vector<Poly> mono(static_cast<std::size_t>(j) + 1, F.zero());
        mono.back() = t;
        SkewPoly sub = skew_mul(F, SkewPoly{std::move(mono)}, w);
        rem = skew_sub(F, rem, sub);
    }
    skew_normalize(quot);
    return {SkewPoly{std::move(quot)}, rem};
}

std::string skew_to_string(const SkewPoly& u) {
    if (u.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = u.deg_tau(); i >= 0; --i) {
        const Poly& c = u.coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (i == 1) os << "*t";
        else if (i > 1) os << "*t^" << i;
    }
    return os.str();
}

FpPoly fp_make(const ResidueField& F, std::vector<Poly> coeffs) {
    for (auto& x : coeffs) x = F.reduce(x);
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
    return FpPoly{std::move(coeffs)};
}

FpPoly fp_x(const ResidueField& F) { return FpPoly{{F.zero(), F.one()}}; }

FpPoly fp_add(const ResidueField& F, const FpPoly& a, const FpPoly& b) {
    std::vector<Poly> c(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Poly x = i < a.c.size() ? a.c[i] : F.zero();
        Poly y = i < b.c.size() ? b.c[i] : F.zero();
        c[i] = x + y;
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return FpPoly{std::move(c)};
}

FpPoly fp_sub(const ResidueField& F, const FpPoly& a, const FpPoly& b) {
    std::vector<Poly> nb = b.c;
    for (auto& x : nb) x = F.neg(x);
    return fp_add(F, a, FpPoly{std::move(nb)});
}

FpPoly fp_mul(const ResidueField& F, const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly{};
    std::vector<Poly> c(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].is_zero()) continue;
            c[i + j] = c[i + j] + F.mul(a.c[i], b.c[j]);
        }
    }
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    return FpPoly{std::move(c)};
}

FpDivMod fp_divmod(const ResidueField& F, const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::domain_error("fp_divmod: division by zero");
    FpPoly rem = a;
    if (rem.deg() < b.deg()) return {FpPoly{}, rem};
    std::vector<Poly> quot(static_cast<std::size_t>(rem.deg() - b.deg()) + 1, F.zero());
    Poly lcinv = F.inv(b.c.back());
    while (rem.deg() >= b.deg()) {
        int j = rem.deg() - b.deg();
        Poly t = F.mul(rem.c.back(), lcinv);
        quot[static_cast<std::size_t>(j)] = t;
        for (std::size_t i = 0; i < b.c.size(); ++i) {
            std::size_t k = static_cast<std::size_t>(j) + i;
            rem.c[k] = rem.c[k] - F.mul(t, b.c[i]);
        }
        while (!rem.c.empty() && rem.c.back().is_zero()) rem.c.pop_back();
    }
    while (!quot.empty() && quot.back().is_zero()) quot.pop_back();
    return {FpPoly{std::move(quot)}, rem};
}

FpPoly fp_powmod(const ResidueField& F, const FpPoly& base, std::int64_t e, const FpPoly& m) {
    FpPoly r{{F.one()}};
    FpPoly b = fp_divmod(F, base, m).rem;
    while (e > 0) {
        if (e & 1) r = fp_divmod(F, fp_mul(F, r, b), m).rem;
        b = fp_divmod(F, fp_mul(F, b, b), m).rem;
        e >>= 1;
    }
    return r;
}

FpPoly fp_compose_mod(const ResidueField& F, const FpPoly& outer, const FpPoly& inner,
                      const FpPoly& m) {
    // Horner over the outer coefficients.
    FpPoly r{};
    FpPoly in = fp_divmod(F, inner, m).rem;
    for (int i = outer.deg(); i >= 0; --i) {
        r = fp_divmod(F, fp_mul(F, r, in), m).rem;
        r = fp_add(F, r, FpPoly{{outer.c[static_cast<std::size_t>(i)]}});
    }
    return r;
}

Poly fp_eval(const ResidueField& F, const FpPoly& a, const Poly& x) {
    Poly r = F.zero();
    for (int i = a.deg(); i >= 0; --i)
        r = F.mul(r, x) + a.c[static_cast<std::size_t>(i)];
    return F.reduce(r);
}

FpPoly as_additive_poly(const ResidueField& F, const SkewPoly& u) {
    if (u.is_zero()) return FpPoly{};
    std::vector<Poly> c(static_cast<std::size_t>(q_pow(F.q(), u.deg_tau())) + 1, F.zero());
    for (std::size_t i = 0; i < u.c.size(); ++i)
        c[static_cast<std::size_t>(q_pow(F.q(), static_cast<int>(i)))] = u.c[i];
    return fp_make(F, std::move(c));
}

FqMat frobenius_action_matrix(const ResidueField& F, const SkewPoly& u) {
    int d = F.d();
    FqMat m(F.q(), d, d);
    for (int j = 0; j < d; ++j) {
        Poly basis = Poly::monomial(F.q(), j);
        Poly img = F.zero();
        for (std::size_t i = 0; i < u.c.size(); ++i) {
            if (u.c[i].is_zero()) continue;
            img = img + F.mul(u.c[i], F.frob(static_cast<int>(i), basis));
        }
        for (int i = 0; i < d; ++i) m.at(i, j) = img.coeff(i);
    }
    return m;
}

}  // namespace drinfeld
