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

#ifndef DRINFELD_RATFUNC_HPP
#define DRINFELD_RATFUNC_HPP

#include <string>

#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Element of F = F_q(T), kept as a reduced fraction with monic denominator.
class RatFunc {
   public:
    explicit RatFunc(int q) : num_(Poly::zero(q)), den_(Poly::constant(q, 1)) {}
    RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }
    explicit RatFunc(Poly num) : num_(std::move(num)), den_(Poly::constant(num_.q(), 1)) {}

    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    int q() const noexcept { return num_.q(); }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_integral() const noexcept { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) noexcept { return !(a == b); }

    RatFunc pow(std::int64_t e) const {
        if (e < 0) return RatFunc(Poly::constant(q(), 1)) / pow(-e);
        RatFunc r(Poly::constant(q(), 1));
        RatFunc b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// "num" or "num/den" in either polynomial text format.
    static RatFunc parse(int q, const std::string& text) {
        auto slash = text.find('/');
        if (slash == std::string::npos) return RatFunc(Poly::parse(q, text));
        return RatFunc(Poly::parse(q, text.substr(0, slash)),
                       Poly::parse(q, text.substr(slash + 1)));
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

   private:
    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
        if (num_.is_zero()) {
            den_ = Poly::constant(num_.q(), 1);
            return;
        }
        Poly g = gcd_monic(num_, den_);
        if (g.deg() > 0) {
            num_ = divmod(num_, g).quot;
            den_ = divmod(den_, g).quot;
        }
        Fq F(num_.q());
        int inv = F.inv(den_.lc());
        num_ = num_.times(inv);
        den_ = den_.times(inv);
    }

    Poly num_, den_;
};

}  // namespace drinfeld

#endif
