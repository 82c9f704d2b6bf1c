/*
   Copyright 2026 The regula authors

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

#include "regula/ratfunc.hpp"

namespace regula {

RatFunc::RatFunc(const Poly& numerator, const Poly& denominator) {
    if (denominator.is_zero())
        throw std::domain_error("RatFunc: zero denominator");
    if (numerator.is_zero()) {
        num_ = Poly();
        den_ = Poly::one();
        return;
    }
    const Poly g = poly_gcd(numerator, denominator);
    Poly n = g.is_one() ? numerator : poly_divexact(numerator, g);
    Poly d = g.is_one() ? denominator : poly_divexact(denominator, g);
    const Rat scale = Rat(1) / d.lc();
    num_ = n * scale;
    den_ = d * scale;
}

std::optional<int> RatFunc::vinf() const {
    if (is_zero()) return std::nullopt;
    return den_.degree() - num_.degree();
}

std::optional<Rat> RatFunc::eval(const Rat& x) const {
    const Rat d = den_.eval(x);
    if (d.is_zero()) return std::nullopt;
    return num_.eval(x) / d;
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
    if (o.is_zero()) return *this;
    return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    // cross-reduce first to keep the one big gcd small
    RatFunc a(num_, o.den_);
    RatFunc b(o.num_, den_);
    RatFunc r;
    r.num_ = a.num_ * b.num_;
    r.den_ = a.den_ * b.den_; // coprime by construction, monic * monic
    return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    return *this * o.inverse();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc: division by the zero function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc acc = RatFunc::one();
    RatFunc base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string RatFunc::str() const {
    if (den_.is_one()) {
        if (num_.is_constant() || num_.coeffs().size() == 1) return num_.str();
        return "(" + num_.str() + ")";
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace regula
