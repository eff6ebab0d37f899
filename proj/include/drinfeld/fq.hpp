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

#ifndef DRINFELD_FQ_HPP
#define DRINFELD_FQ_HPP

#include <cstdint>
#include <stdexcept>

namespace drinfeld {

/// The prime field F_q, q an odd prime. Elements are residues in [0, q).
class Fq {
   public:
    explicit Fq(int q) : q_(q) {
        if (q < 3 || q % 2 == 0 || !is_prime(q))
            throw std::invalid_argument("Fq: q must be an odd prime");
    }

    int q() const noexcept { return q_; }

    int add(int a, int b) const noexcept {
        int s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    int sub(int a, int b) const noexcept {
        int s = a - b;
        return s < 0 ? s + q_ : s;
    }
    int neg(int a) const noexcept { return a == 0 ? 0 : q_ - a; }
    int mul(int a, int b) const noexcept {
        return static_cast<int>(static_cast<std::int64_t>(a) * b % q_);
    }
    int pow(int a, std::int64_t e) const {
        if (e < 0) return inv(pow(a, -e));
        int r = 1, base = a;
        while (e > 0) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    int inv(int a) const {
        if (a == 0) throw std::domain_error("Fq: inverse of zero");
        return pow(a, q_ - 2);
    }

    /// Euler criterion. Squares include 0.
    bool is_square(int a) const {
        if (a == 0) return true;
        return pow(a, (q_ - 1) / 2) == 1;
    }

    static bool is_prime(int n) noexcept {
        if (n < 2) return false;
        for (int d = 2; static_cast<std::int64_t>(d) * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

   private:
    int q_;
};

}  // namespace drinfeld

#endif
