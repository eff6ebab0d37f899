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

#include "drinfeld/quadform.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace drinfeld {

std::string to_string(InfinityType t) {
    switch (t) {
        case InfinityType::ramified: return "ramified";
        case InfinityType::inert: return "inert";
        case InfinityType::split: return "split";
    }
    return "?";
}

InfinityType infinity_type(const Poly& delta) {
    if (delta.is_zero()) throw std::invalid_argument("infinity_type: zero discriminant");
    Fq F(delta.q());
    if (delta.is_constant() && F.is_square(delta.coeff(0)))
        throw std::invalid_argument("infinity_type: square unit is not a quadratic extension");
    if (delta.deg() % 2 != 0) return InfinityType::ramified;
    return F.is_square(delta.lc()) ? InfinityType::split : InfinityType::inert;
}

bool is_imaginary(const Poly& delta) { return infinity_type(delta) != InfinityType::split; }

int quad_symbol(const Poly& delta, const Poly& ell) {
    if (!ell.is_monic() || !is_irreducible(ell))
        throw std::invalid_argument("quad_symbol: ell must be monic irreducible");
    Poly r = poly_mod(delta, ell);
    if (r.is_zero()) return 0;
    std::int64_t e = (q_pow(delta.q(), ell.deg()) - 1) / 2;
    Poly s = powmod(r, e, ell);
    if (s.is_one()) return 1;
    if ((s + Poly::constant(delta.q(), 1)).is_zero()) return -1;
    throw std::logic_error("quad_symbol: Euler criterion did not yield +-1");
}

Poly discriminant(const BinaryForm& f) { return f.b * f.b - f.a * f.c.times(4); }

bool is_primitive(const BinaryForm& f) {
    if (f.a.is_zero() && f.b.is_zero() && f.c.is_zero()) return false;
    Poly g = f.a.is_zero() && f.b.is_zero() ? f.c.monic()
             : f.a.is_zero()               ? gcd_monic(f.b, f.c)
                                           : gcd_monic(gcd_monic(f.a, f.b), f.c);
    return g.is_one();
}

bool is_reduced(const BinaryForm& f) {
    return f.b.deg() < f.a.deg() && f.a.deg() <= f.c.deg();
}

Mat2 Mat2::identity(int q) {
    return Mat2{Poly::constant(q, 1), Poly::zero(q), Poly::zero(q), Poly::constant(q, 1)};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.m00 * y.m00 + x.m01 * y.m10, x.m00 * y.m01 + x.m01 * y.m11,
                x.m10 * y.m00 + x.m11 * y.m10, x.m10 * y.m01 + x.m11 * y.m11};
}

BinaryForm act(const Mat2& m, const BinaryForm& f) {
    Poly det = m.det();
    if (!det.is_constant() || det.is_zero())
        throw std::invalid_argument("act: matrix must have unit determinant");
    int q = f.a.q();
    Fq F(q);
    int half = F.inv(2);
    Poly bh = f.b.times(half);
    // S' = M^t S M, S = [[a, b/2], [b/2, c]]
    Poly s00 = m.m00 * (f.a * m.m00 + bh * m.m10) + m.m10 * (bh * m.m00 + f.c * m.m10);
    Poly s01 = m.m00 * (f.a * m.m01 + bh * m.m11) + m.m10 * (bh * m.m01 + f.c * m.m11);
    Poly s11 = m.m01 * (f.a * m.m01 + bh * m.m11) + m.m11 * (bh * m.m01 + f.c * m.m11);
    return BinaryForm{s00, s01.times(2), s11};
}

ReduceResult reduce(const BinaryForm& f) {
    if (!is_primitive(f)) throw std::invalid_argument("reduce: form must be primitive");
    if (discriminant(f).is_zero()) throw std::invalid_argument("reduce: zero discriminant");
    int q = f.a.q();
    const Mat2 swap{Poly::zero(q), -Poly::constant(q, 1), Poly::constant(q, 1), Poly::zero(q)};
    BinaryForm g = f;
    Mat2 acc = Mat2::identity(q);
    for (int iter = 0; iter < 4096; ++iter) {
        if (g.a.is_zero() && g.c.is_zero()) {
            // f = b xy with b a unit (primitivity); one determinant-1 matrix
            // lands on the reduced form (-b/2, 0, b/2).
            int inv2 = Fq(q).inv(2 % q);
            Mat2 m{Poly::constant(q, 1), Poly::constant(q, 1),
                   -Poly::constant(q, inv2), Poly::constant(q, inv2)};
            acc = acc * m;
            g = act(m, g);
            continue;
        }
        if (g.a.is_zero()) {
            acc = acc * swap;
            g = act(swap, g);
            continue;
        }
        if (g.c.is_zero()) {
            // disc = b^2 (square). Shrink a modulo b with the shear
            // y -> mx + y, so deg a < deg b; the translation branch below
            // then produces c' = m'(am' + b) != 0 and a reduced form.
            Poly m = -divmod(g.a, g.b).quot;
            if (!m.is_zero()) {
                Mat2 shear{Poly::constant(q, 1), Poly::zero(q), m, Poly::constant(q, 1)};
                acc = acc * shear;
                g = act(shear, g);
                continue;
            }
        }
        if (g.b.deg() >= g.a.deg()) {
            Poly m = divmod(-g.b, g.a.times(2)).quot;
            Mat2 tr{Poly::constant(q, 1), m, Poly::zero(q), Poly::constant(q, 1)};
            acc = acc * tr;
            g = act(tr, g);
            continue;
        }
        if (g.a.deg() > g.c.deg()) {
            acc = acc * swap;
            g = act(swap, g);
            continue;
        }
        return {g, acc};
    }
    throw std::logic_error("reduce: did not terminate");
}

LogNorm class_point_lognorm(const BinaryForm& g) {
    if (!is_reduced(g)) throw std::invalid_argument("class_point_lognorm: form not reduced");
    Poly delta = discriminant(g);
    if (!is_imaginary(delta))
        throw std::invalid_argument("class_point_lognorm: discriminant not imaginary");
    LogNorm v{delta.deg() - 2 * g.a.deg()};
    if (v.two_log_q < 0 || v.two_log_q > delta.deg())
        throw std::logic_error("class_point_lognorm: outside the fundamental range");
    return v;
}

namespace {

// chi_delta extended multiplicatively to monic m.
int chi(const Poly& delta, const Poly& m) {
    if (m.is_one()) return 1;
    int s = 1;
    for (const auto& [l, e] : factor(m).factors) {
        int sym = quad_symbol(delta, l);
        if (sym == 0) return 0;
        if (e % 2 == 1) s *= sym;
    }
    return s;
}

}  // namespace

Rat L_one(const Poly& delta_B) {
    if (!is_imaginary(delta_B)) throw std::invalid_argument("L_one: discriminant not imaginary");
    if (delta_B.is_constant())
        throw std::invalid_argument("L_one: constant discriminant unsupported");
    int q = delta_B.q();
    Rat sum(0);
    for (int d = 0; d < delta_B.deg(); ++d) {
        std::int64_t qd = q_pow(q, d);
        for (const auto& m : monic_polys(q, d)) sum = sum + Rat(chi(delta_B, m), qd);
    }
    return sum;
}

std::int64_t h_maximal(const Poly& delta_B) {
    SquarefreeSplit s = squarefree_split(delta_B);
    if (!s.b_max.is_one()) throw std::invalid_argument("h_maximal: discriminant not squarefree");
    if (!is_imaginary(delta_B)) throw std::invalid_argument("h_maximal: discriminant not imaginary");
    int q = delta_B.q();
    int n = delta_B.deg();
    Rat L = L_one(delta_B);
    if (!(L.abs() <= Rat(n))) throw std::logic_error("h_maximal: |L(1)| exceeds deg bound");
    Rat h = n % 2 == 1 ? L * Rat(q_pow(q, (n - 1) / 2))
                       : L * Rat(2 * q_pow(q, n / 2), q + 1);
    if (!h.is_integer() || h.num() <= 0)
        throw std::logic_error("h_maximal: class number not a positive integer for delta = " +
                               delta_B.to_string());
    Rat bound = n % 2 == 1 ? Rat(q_pow(q, (n - 1) / 2) * n) : Rat(2 * q_pow(q, n / 2) * n, q + 1);
    if (!(h <= bound)) throw std::logic_error("h_maximal: class number bound violated");
    return h.num();
}

OrderInvariants h_order(const Poly& disc_O) {
    SquarefreeSplit s = squarefree_split(disc_O);
    if (!is_imaginary(s.delta)) throw std::invalid_argument("h_order: discriminant not imaginary");
    int q = disc_O.q();
    InfinityType inf = infinity_type(s.delta);
    std::int64_t hB = h_maximal(s.delta);
    const Poly& c = s.b_max;
    // [B^x : O^x] = 1: for a squarefree non-constant disc_B the constant
    // field of K is F_q, so both unit groups equal F_q^x.
    std::int64_t unit_index = 1;
    Rat prod(1);
    Rat prod_upper(1);
    double prod_plus = 1.0;
    for (const auto& [l, e] : factor(c).factors) {
        std::int64_t nl = q_pow(q, l.deg());
        prod = prod * Rat(nl - quad_symbol(s.delta, l), nl);
        prod_upper = prod_upper * Rat(nl + 1, nl);
        prod_plus *= 1.0 + 1.0 / static_cast<double>(nl);
    }
    Rat hO = Rat(hB) * Rat(q_pow(q, c.deg())) * prod / Rat(unit_index);
    if (!hO.is_integer() || hO.num() <= 0)
        throw std::logic_error("h_order: class number not a positive integer for disc = " +
                               disc_O.to_string());
    Rat upper = Rat(hB) * Rat(q_pow(q, c.deg())) * prod_upper;
    if (!(hO <= upper)) throw std::logic_error("h_order: conductor bound violated");
    double logc = static_cast<double>(c.deg()) * std::log(static_cast<double>(q));
    double loglog = logc > 1.0 ? std::log(logc) : 1.0;
    return OrderInvariants{disc_O, c,    s.delta, inf, hB, hO.num(),
                           prod_plus / std::max(1.0, loglog)};
}

std::vector<BinaryForm> enumerate_reduced(const Poly& delta) {
    if (!is_imaginary(delta)) throw std::invalid_argument("enumerate_reduced: not imaginary");
    int q = delta.q();
    std::vector<BinaryForm> out;
    // deg(ac) = deg delta and deg a <= deg c force deg a <= deg delta / 2.
    for (int da = 0; 2 * da <= delta.deg(); ++da) {
        std::vector<Poly> as;
        for (const auto& m : monic_polys(q, da))
            for (int u = 1; u < q; ++u) as.push_back(m.times(u));
        for (const auto& a : as) {
            std::vector<Poly> bs{Poly::zero(q)};
            for (int db = 0; db < da; ++db)
                for (const auto& mb : monic_polys(q, db))
                    for (int u = 1; u < q; ++u) bs.push_back(mb.times(u));
            for (const auto& b : bs) {
                Poly num = b * b - delta;
                DivMod dm = divmod(num, a.times(4));
                if (!dm.rem.is_zero()) continue;
                const Poly& c = dm.quot;
                BinaryForm f{a, b, c};
                if (a.deg() > c.deg()) continue;
                if (!is_primitive(f)) continue;
                out.push_back(f);
            }
        }
    }
    return out;
}

int class_count_oracle(const Poly& delta, int depth) {
    std::vector<BinaryForm> forms = enumerate_reduced(delta);
    int n = static_cast<int>(forms.size());
    auto key = [](const BinaryForm& f) {
        return f.a.to_string() + "|" + f.b.to_string() + "|" + f.c.to_string();
    };
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index[key(forms[static_cast<std::size_t>(i)])] = i;

    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    auto unite = [&](int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); };

    int q = delta.q();
    std::vector<Poly> shifts;
    for (int d = 0; d <= depth; ++d)
        for (const auto& m : monic_polys(q, d))
            for (int u = 1; u < q; ++u) shifts.push_back(m.times(u));
    const Mat2 swap{Poly::zero(q), -Poly::constant(q, 1), Poly::constant(q, 1), Poly::zero(q)};

    for (int i = 0; i < n; ++i) {
        const BinaryForm& f = forms[static_cast<std::size_t>(i)];
        std::vector<BinaryForm> images;
        images.push_back(act(swap, f));
        for (const auto& m : shifts) {
            Mat2 tr{Poly::constant(q, 1), m, Poly::zero(q), Poly::constant(q, 1)};
            images.push_back(act(tr, f));
        }
        for (const auto& img : images) {
            BinaryForm r = reduce(img).g;
            auto it = index.find(key(r));
            if (it == index.end())
                throw std::logic_error("class_count_oracle: reduced image missing from enumeration");
            unite(i, it->second);
        }
        // Classes are counted up to unit scaling: u^2 = 1 keeps the
        // discriminant, and f and u.f land in the same ideal class.
        for (int u = 1; u < q; ++u) {
            if ((u * u) % q != 1) continue;
            BinaryForm uf{f.a.times(u), f.b.times(u), f.c.times(u)};
            auto it = index.find(key(uf));
            if (it == index.end())
                throw std::logic_error("class_count_oracle: unit scaling missing from enumeration");
            unite(i, it->second);
        }
    }
    int classes = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++classes;
    return classes;
}

std::string class_table(const std::vector<Poly>& deltas) {
    std::ostringstream os;
    os << "delta,deg,infinity_type,L,h_B\n";
    for (const auto& d : deltas) {
        std::string ds = d.to_string();
        if (ds.find(',') != std::string::npos) ds = "\"" + ds + "\"";
        os << ds << ',' << d.deg() << ',' << to_string(infinity_type(d)) << ','
           << L_one(d).to_string() << ',' << h_maximal(d) << '\n';
    }
    return os.str();
}

}  // namespace drinfeld
