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

#ifndef REGULA_RATFUNC_HPP
#define REGULA_RATFUNC_HPP

#include "regula/poly.hpp"

#include <optional>
#include <string>

namespace regula {

/**
 * Rational function over the exact rationals, kept in canonical form:
 * numerator and denominator coprime, denominator monic, zero is 0/1.
 *
 * Canonical representatives make equality a structural check, so two
 * routes to the same function compare equal coefficient by coefficient.
 * Values are immutable after construction.
 */
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::one()) {}
    RatFunc(long constant) : num_(Poly(constant)), den_(Poly::one()) {}
    explicit RatFunc(const Rat& constant) : num_(Poly(constant)), den_(Poly::one()) {}
    explicit RatFunc(const Poly& numerator) : num_(numerator), den_(Poly::one()) {}
    /// Reduce numerator/denominator to canonical form. Throws on zero denominator.
    RatFunc(const Poly& numerator, const Poly& denominator);

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(1); }
    /// The indeterminate s as an element of the fraction field.
    static RatFunc s() { return RatFunc(Poly::s()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    /**
     * Valuation at infinity: deg(den) - deg(num). Positive means strictly
     * proper, zero biproper, negative improper. Empty for the zero
     * function, where the valuation is undefined; callers must branch.
     */
    std::optional<int> vinf() const;

    /// Pointwise value; empty when x is a pole.
    std::optional<Rat> eval(const Rat& x) const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc inverse() const;
    RatFunc pow(int e) const; // negative exponents invert; throws on 0^-k

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    /// Expression form that the CLI grammar parses back, e.g. "(s - 1)/(s + 2)".
    std::string str() const;

private:
    Poly num_;
    Poly den_;
};

} // namespace regula

#endif // REGULA_RATFUNC_HPP
