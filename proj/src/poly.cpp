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

#include "drinfeld/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <sstream>

namespace drinfeld {

void Poly::check_same(const Poly& other) const {
    // the zero polynomial acts as a universal element across base fields
    if (q_ != other.q_ && !is_zero() && !other.is_zero())
        throw std::invalid_argument("Poly: mixed base fields");
}

Poly Poly::monomial(int q, int k, int c) {
    std::vector<int> v(static_cast<std::size_t>(k) + 1, 0);
    v.back() = ((c % q) + q) % q;
    return Poly(q, std::move(v));
}

int Poly::lc() const {
    if (c_.empty()) throw std::domain_error("Poly: leading coefficient of zero");
    return c_.back();
}

Poly Poly::monic() const {
    Fq F(q_);
    int inv = F.inv(lc());
    return times(inv);
}

Poly Poly::derivative() const {
    Fq F(q_);
    std::vector<int> d;
    for (std::size_t i = 1; i < c_.size(); ++i)
        d.push_back(F.mul(static_cast<int>(i % q_), c_[i]));
    return Poly(q_, std::move(d));
}

Poly Poly::shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<int> v(static_cast<std::size_t>(k), 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(q_, std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    a.check_same(b);
    int q = a.is_zero() ? b.q_ : a.q_;
    Fq F(q);
    std::vector<int> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(q, std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    a.check_same(b);
    int q = a.is_zero() ? b.q_ : a.q_;
    Fq F(q);
    std::vector<int> v(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return Poly(q, std::move(v));
}

Poly operator-(const Poly& a) { return Poly::zero(a.q()) - a; }

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.is_zero() ? b.q_ : a.q_);
    Fq F(a.q_);
    std::vector<int> v(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
    return Poly(a.q_, std::move(v));
}

Poly Poly::times(int scalar) const {
    Fq F(q_);
    scalar = ((scalar % q_) + q_) % q_;
    std::vector<int> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = F.mul(c_[i], scalar);
    return Poly(q_, std::move(v));
}

bool lex_less(const Poly& a, const Poly& b) noexcept {
    std::size_t n = std::min(a.c_.size(), b.c_.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return a.c_.size() < b.c_.size();
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero");
    int q = a.q();
    Fq F(q);
    if (a.deg() < b.deg()) return {Poly::zero(q), a};
    std::vector<int> rem = a.coeffs();
    std::vector<int> quot(static_cast<std::size_t>(a.deg() - b.deg()) + 1, 0);
    int lcinv = F.inv(b.lc());
    for (int i = a.deg(); i >= b.deg(); --i) {
        int c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        int t = F.mul(c, lcinv);
        quot[static_cast<std::size_t>(i - b.deg())] = t;
        for (int j = 0; j <= b.deg(); ++j) {
            std::size_t k = static_cast<std::size_t>(i - b.deg() + j);
            rem[k] = F.sub(rem[k], F.mul(t, b.coeff(j)));
        }
    }
    return {Poly(q, std::move(quot)), Poly(q, std::move(rem))};
}

Poly poly_mod(const Poly& a, const Poly& b) { return divmod(a, b).rem; }

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_mod(a, d).is_zero();
}

Poly gcd_monic(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd: both inputs zero");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
    int q = a.q();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::constant(q, 1), u1 = Poly::zero(q);
    Poly v0 = Poly::zero(q), v1 = Poly::constant(q, 1);
    while (!r1.is_zero()) {
        DivMod d = divmod(r0, r1);
        Poly r2 = d.rem;
        Poly u2 = u0 - d.quot * u1;
        Poly v2 = v0 - d.quot * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    Fq F(q);
    int inv = F.inv(r0.lc());
    return {r0.times(inv), u0.times(inv), v0.times(inv)};
}

Poly powmod(const Poly& base, std::int64_t e, const Poly& m) {
    if (e < 0) throw std::invalid_argument("powmod: negative exponent");
    Poly r = Poly::constant(base.q(), 1);
    Poly b = poly_mod(base, m);
    while (e > 0) {
        if (e & 1) r = poly_mod(r * b, m);
        b = poly_mod(b * b, m);
        e >>= 1;
    }
    return r;
}

namespace {

// x^(q^k) mod m by k-fold q-th powering.
Poly frob_power(const Poly& m, int k) {
    Poly h = poly_mod(Poly::T(m.q()), m);
    for (int i = 0; i < k; ++i) h = powmod(h, m.q(), m);
    return h;
}

}  // namespace

bool is_irreducible(const Poly& a) {
    if (a.is_constant()) throw std::domain_error("is_irreducible: constant input");
    Poly f = a.monic();
    int n = f.deg();
    int q = f.q();
    if (n == 1) return true;
    // Rabin: x^(q^n) == x mod f, and gcd(x^(q^(n/r)) - x, f) = 1 for primes r | n.
    Poly x = Poly::T(q);
    if (frob_power(f, n) != poly_mod(x, f)) return false;
    int m = n;
    for (int r = 2; r <= m; ++r) {
        if (m % r != 0) continue;
        while (m % r == 0) m /= r;
        Poly h = frob_power(f, n / r) - x;
        if (h.is_zero() || gcd_monic(h, f).deg() > 0) return false;
    }
    return true;
}

std::int64_t q_pow(int q, int e) {
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::int64_t>::max() / q)
            throw std::overflow_error("q_pow: overflow");
        r *= q;
    }
    return r;
}

namespace {

// f monic with f' == 0, i.e. f = g(T^p) with p = q prime; return g.
Poly pth_root(const Poly& f) {
    int p = f.q();
    std::vector<int> v;
    for (int i = 0; i <= f.deg(); i += p) v.push_back(f.coeff(i));
    return Poly(f.q(), std::move(v));
}

// Squarefree decomposition of monic f: map exponent -> monic squarefree part.
void sqfree_decomp(const Poly& f, int mult, std::map<int, Poly>& out) {
    if (f.deg() <= 0) return;
    Poly fp = f.derivative();
    if (fp.is_zero()) {
        sqfree_decomp(pth_root(f), mult * f.q(), out);
        return;
    }
    Poly c = gcd_monic(f, fp);
    Poly w = divmod(f, c).quot;
    int i = 1;
    while (w.deg() > 0) {
        Poly y = gcd_monic(w, c);
        Poly z = divmod(w, y).quot;
        if (z.deg() > 0) {
            auto it = out.find(i * mult);
            if (it == out.end())
                out.emplace(i * mult, z);
            else
                it->second = it->second * z;
        }
        w = y;
        c = divmod(c, y).quot;
        ++i;
    }
    if (c.deg() > 0) sqfree_decomp(pth_root(c), mult * f.q(), out);
}

// Distinct-degree factorization of squarefree monic f: (factor product, degree).
std::vector<std::pair<Poly, int>> ddf(Poly f) {
    std::vector<std::pair<Poly, int>> parts;
    int q = f.q();
    Poly h = poly_mod(Poly::T(q), f);
    int d = 0;
    while (f.deg() > 2 * (d + 1) - 1 && f.deg() > 0) {
        ++d;
        h = powmod(h, q, f);
        Poly g = gcd_monic(h - Poly::T(q), f);
        if (g.deg() > 0) {
            parts.emplace_back(g, d);
            f = divmod(f, g).quot;
            h = poly_mod(h, f);
        }
    }
    if (f.deg() > 0) parts.emplace_back(f, f.deg());
    return parts;
}

// Equal-degree splitting (Cantor-Zassenhaus, q odd). Deterministic seed so
// that factorizations are reproducible run to run.
void edf(const Poly& f, int d, std::mt19937& rng, std::vector<Poly>& out) {
    if (f.deg() == d) {
        out.push_back(f);
        return;
    }
    int q = f.q();
    std::int64_t e = (q_pow(q, d) - 1) / 2;
    std::uniform_int_distribution<int> coeff(0, q - 1);
    for (;;) {
        std::vector<int> rc(static_cast<std::size_t>(f.deg()));
        for (auto& c : rc) c = coeff(rng);
        Poly r(q, std::move(rc));
        if (r.is_constant()) continue;
        Poly s = powmod(r, e, f) - Poly::constant(q, 1);
        if (s.is_zero()) continue;
        Poly g = gcd_monic(s, f);
        if (g.deg() > 0 && g.deg() < f.deg()) {
            edf(g, d, rng, out);
            edf(divmod(f, g).quot, d, rng, out);
            return;
        }
    }
}

}  // namespace

Factorization factor(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("factor: zero input");
    Factorization result;
    result.unit = a.is_constant() ? a.coeff(0) : a.lc();
    if (a.is_constant()) return result;
    std::map<int, Poly> sq;
    sqfree_decomp(a.monic(), 1, sq);
    std::mt19937 rng(0x5eed);
    for (const auto& [exp, part] : sq) {
        for (const auto& [prod, d] : ddf(part)) {
            std::vector<Poly> irr;
            edf(prod, d, rng, irr);
            for (const auto& p : irr) result.factors.emplace_back(p, exp);
        }
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& x, const auto& y) {
                  if (x.first.deg() != y.first.deg()) return x.first.deg() < y.first.deg();
                  return lex_less(x.first, y.first);
              });
    return result;
}

SquarefreeSplit squarefree_split(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("squarefree_split: zero input");
    int q = a.q();
    int unit = a.is_constant() ? a.coeff(0) : a.lc();
    Poly b_max = Poly::constant(q, 1);
    Poly delta = Poly::constant(q, 1);
    if (!a.is_constant()) {
        std::map<int, Poly> sq;
        sqfree_decomp(a.monic(), 1, sq);
        for (const auto& [exp, part] : sq) {
            for (int i = 0; i < exp / 2; ++i) b_max = b_max * part;
            if (exp % 2 == 1) delta = delta * part;
        }
    }
    return {b_max, delta.times(unit)};
}

std::int64_t euler_phi_A(const Poly& c) {
    if (c.is_zero()) throw std::domain_error("euler_phi_A: zero input");
    int q = c.q();
    std::int64_t phi = 1;
    for (const auto& [l, e] : factor(c).factors) {
        std::int64_t nl = q_pow(q, l.deg());
        std::int64_t pe = q_pow(q, l.deg() * (e - 1));
        phi *= pe * (nl - 1);
    }
    return phi;
}

std::vector<Poly> monic_polys(int q, int x) {
    if (x < 0) throw std::invalid_argument("monic_polys: negative degree");
    std::vector<Poly> out;
    std::int64_t total = q_pow(q, x);
    std::vector<int> digits(static_cast<std::size_t>(x) + 1, 0);
    digits.back() = 1;
    for (std::int64_t n = 0; n < total; ++n) {
        // c_0 varies slowest: lexicographic on the coefficient sequence.
        std::int64_t m = n;
        for (int i = x - 1; i >= 0; --i) {
            digits[static_cast<std::size_t>(x - 1 - i)] =
                static_cast<int>((m / q_pow(q, i)) % q);
            m %= q_pow(q, i);
        }
        out.emplace_back(q, digits);
    }
    return out;
}

std::vector<Poly> monic_irreducibles(int q, int x) {
    if (x < 1) throw std::invalid_argument("monic_irreducibles: degree must be >= 1");
    std::vector<Poly> out;
    for (const auto& p : monic_polys(q, x))
        if (is_irreducible(p)) out.push_back(p);
    return out;
}

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ',';
        os << c_[i];
    }
    return os.str();
}

std::string Poly::to_human() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        int c = coeff(i);
        if (c == 0) continue;
        if (!first) os << '+';
        first = false;
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << '*';
            os << 'T';
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

namespace {

Poly parse_human(int q, const std::string& text) {
    Fq F(q);
    Poly result = Poly::zero(q);
    std::size_t i = 0;
    int sign = 1;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip_ws();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        sign = text[i] == '-' ? -1 : 1;
        ++i;
    }
    while (i < text.size()) {
        skip_ws();
        int coeff = 1;
        bool saw_coeff = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                coeff = (coeff * 10 + (text[i++] - '0')) % q;
            saw_coeff = true;
        }
        skip_ws();
        if (i < text.size() && text[i] == '*') { ++i; skip_ws(); }
        int exp = 0;
        if (i < text.size() && (text[i] == 'T' || text[i] == 't')) {
            ++i;
            exp = 1;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                exp = 0;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("Poly::parse: bad exponent");
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    exp = exp * 10 + (text[i++] - '0');
            }
        } else if (!saw_coeff) {
            throw std::invalid_argument("Poly::parse: bad term in '" + text + "'");
        }
        int c = sign == 1 ? coeff : F.neg(coeff);
        result = result + Poly::monomial(q, exp, c);
        skip_ws();
        if (i >= text.size()) break;
        if (text[i] == '+') sign = 1;
        else if (text[i] == '-') sign = -1;
        else throw std::invalid_argument("Poly::parse: unexpected '" + std::string(1, text[i]) + "'");
        ++i;
    }
    return result;
}

}  // namespace

Poly Poly::parse(int q, const std::string& text) {
    if (text.empty()) throw std::invalid_argument("Poly::parse: empty input");
    bool human = text.find('T') != std::string::npos || text.find('t') != std::string::npos ||
                 text.find('*') != std::string::npos || text.find('^') != std::string::npos ||
                 text.find('-') != std::string::npos || text.find('+') != std::string::npos;
    if (human) return parse_human(q, text);
    std::vector<int> coeffs;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (v < 0 || v >= q) throw std::invalid_argument("Poly::parse: coefficient out of range");
        coeffs.push_back(v);
    }
    return Poly(q, std::move(coeffs));
}

}  // namespace drinfeld
