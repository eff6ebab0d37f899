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

#ifndef DRINFELD_LINALG_HPP
#define DRINFELD_LINALG_HPP

#include <optional>
#include <vector>

#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Dense matrix over F_q, row major.
class FqMat {
   public:
    FqMat(int q, int rows, int cols)
        : q_(q), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, 0) {}

    static FqMat identity(int q, int n);

    int q() const noexcept { return q_; }
    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    int& at(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    int at(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    friend FqMat operator*(const FqMat& a, const FqMat& b);
    friend bool operator==(const FqMat& a, const FqMat& b) noexcept {
        return a.q_ == b.q_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    /// Matrix-vector product.
    std::vector<int> apply(const std::vector<int>& v) const;

   private:
    int q_, rows_, cols_;
    std::vector<int> a_;
};

int rank(FqMat m);

/// One solution of A x = b, if any.
std::optional<std::vector<int>> solve(const FqMat& a, const std::vector<int>& b);

/// Basis of the right nullspace of A.
std::vector<std::vector<int>> nullspace(const FqMat& a);

/// Invariant factors of a square matrix over F_q[T] (Smith normal form),
/// monic, ordered so that each divides the next; trivial factors 1 included.
std::vector<Poly> smith_invariant_factors(std::vector<std::vector<Poly>> m);

}  // namespace drinfeld

#endif
