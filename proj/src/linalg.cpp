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

#include "drinfeld/linalg.hpp"

#include <algorithm>

namespace drinfeld {

FqMat FqMat::identity(int q, int n) {
    FqMat m(q, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FqMat operator*(const FqMat& a, const FqMat& b) {
    if (a.cols_ != b.rows_ || a.q_ != b.q_) throw std::invalid_argument("FqMat: shape mismatch");
    Fq F(a.q_);
    FqMat r(a.q_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            int aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols_; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(aik, b.at(k, j)));
        }
    return r;
}

std::vector<int> FqMat::apply(const std::vector<int>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("FqMat: vector size");
    Fq F(q_);
    std::vector<int> r(static_cast<std::size_t>(rows_), 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r[static_cast<std::size_t>(i)] =
                F.add(r[static_cast<std::size_t>(i)], F.mul(at(i, j), v[static_cast<std::size_t>(j)]));
    return r;
}

namespace {

// Row-reduce in place; returns pivot columns.
std::vector<int> rref(FqMat& m) {
    Fq F(m.q());
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int r = row; r < m.rows(); ++r)
            if (m.at(r, col) != 0) { p = r; break; }
        if (p < 0) continue;
        if (p != row)
            for (int c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
        int inv = F.inv(m.at(row, col));
        for (int c = 0; c < m.cols(); ++c) m.at(row, c) = F.mul(m.at(row, c), inv);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col) == 0) continue;
            int f = m.at(r, col);
            for (int c = 0; c < m.cols(); ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int rank(FqMat m) { return static_cast<int>(rref(m).size()); }

std::optional<std::vector<int>> solve(const FqMat& a, const std::vector<int>& b) {
    if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
    FqMat aug(a.q(), a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = rref(aug);
    std::vector<int> x(static_cast<std::size_t>(a.cols()), 0);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == a.cols()) return std::nullopt;  // inconsistent
        x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols());
    }
    return x;
}

std::vector<std::vector<int>> nullspace(const FqMat& a) {
    Fq F(a.q());
    FqMat m = a;
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::vector<int>> basis;
    for (int free = 0; free < a.cols(); ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<int> v(static_cast<std::size_t>(a.cols()), 0);
        v[static_cast<std::size_t>(free)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = F.neg(m.at(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

// Position of a nonzero entry of minimal degree in m[k..][k..], if any.
bool min_deg_entry(const std::vector<std::vector<Poly>>& m, int k, int& ri, int& ci) {
    int best = -1;
    int n = static_cast<int>(m.size());
    for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j) {
            const Poly& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (e.is_zero()) continue;
            if (best < 0 || e.deg() < best) {
                best = e.deg();
                ri = i;
                ci = j;
            }
        }
    return best >= 0;
}

}  // namespace

std::vector<Poly> smith_invariant_factors(std::vector<std::vector<Poly>> m) {
    int n = static_cast<int>(m.size());
    if (n == 0) return {};
    int q = m[0][0].q();
    std::vector<Poly> inv;
    for (int k = 0; k < n; ++k) {
        int ri = 0, ci = 0;
        if (!min_deg_entry(m, k, ri, ci)) {
            for (int i = k; i < n; ++i) inv.push_back(Poly::zero(q));
            break;
        }
        for (;;) {
            min_deg_entry(m, k, ri, ci);
            std::swap(m[static_cast<std::size_t>(k)], m[static_cast<std::size_t>(ri)]);
            for (int i = 0; i < n; ++i)
                std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                          m[static_cast<std::size_t>(i)][static_cast<std::size_t>(ci)]);
            const Poly pivot = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            bool changed = false;
            for (int i = k + 1; i < n; ++i) {
                Poly& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (e.is_zero()) continue;
                Poly f = divmod(e, pivot).quot;
                for (int j = k; j < n; ++j)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                        f * m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero())
                    changed = true;
            }
            for (int j = k + 1; j < n; ++j) {
                Poly& e = m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                if (e.is_zero()) continue;
                Poly f = divmod(e, pivot).quot;
                for (int i = k; i < n; ++i)
                    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                        m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                        f * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (!m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].is_zero())
                    changed = true;
            }
            if (changed) continue;
            bool cleared = true;
            for (int i = k + 1; i < n && cleared; ++i)
                if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].is_zero()) cleared = false;
            for (int j = k + 1; j < n && cleared; ++j)
                if (!m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)].is_zero()) cleared = false;
            if (!cleared) continue;
            // Enforce divisibility: pivot must divide every remaining entry.
            bool fixed = true;
            for (int i = k + 1; i < n && fixed; ++i)
                for (int j = k + 1; j < n && fixed; ++j) {
                    const Poly& e = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (e.is_zero() || divides(pivot, e)) continue;
                    for (int c = k; c < n; ++c)
                        m[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] =
                            m[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] +
                            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
                    fixed = false;
                }
            if (fixed) break;
        }
        inv.push_back(m[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)].monic());
    }
    return inv;
}

}  // namespace drinfeld
