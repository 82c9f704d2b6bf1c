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

#ifndef REGULA_POLY_HPP
#define REGULA_POLY_HPP

#include "regula/rat.hpp"

#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace regula {

/**
 * Dense univariate polynomial over the exact rationals, in the
 * indeterminate s.
 *
 * Coefficients are stored in ascending degree order. The zero polynomial
 * is the empty coefficient vector; otherwise the leading coefficient is
 * nonzero. degree() of the zero polynomial is -1.
 */
class Poly {
public:
    Poly() = default;
    Poly(std::initializer_list<Rat> ascending) : c_(ascending) { trim(); }
    explicit Poly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }
    explicit Poly(const Rat& constant) { c_.push_back(constant); trim(); }
    Poly(long constant) { c_.push_back(Rat(constant)); trim(); }

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(1); }
    /// The monomial coeff * s^degree.
    static Poly monomial(const Rat& coeff, int degree);
    /// The indeterminate s.
    static Poly s() { return monomial(Rat(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

    /// Coefficient of s^k (zero outside the stored range).
    const Rat& coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat lc() const { return c_.empty() ? Rat(0) : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    Poly monic() const;

    Rat eval(const Rat& x) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& k) const;
    Poly pow(int e) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return c_ != o.c_; }

    /// Human-readable descending form, e.g. "s^2 - 3*s + 1/2".
    std::string str() const;

private:
    void trim();
    std::vector<Rat> c_;
};

/// Euclidean division: a = b*q + r with deg r < deg b. Throws on b = 0.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);

/// Exact quotient; throws if the division leaves a remainder.
Poly poly_divexact(const Poly& a, const Poly& b);

/// Monic gcd. gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Monic lcm. lcm with zero is zero.
Poly poly_lcm(const Poly& a, const Poly& b);

/**
 * Extended gcd: returns (g, u, v) with g = u*a + v*b, g monic.
 *
 * When both inputs are nonzero and nonconstant the cofactors satisfy the
 * usual bounds deg u < deg b - deg g and deg v < deg a - deg g.
 * Throws std::domain_error when both inputs are zero.
 */
std::tuple<Poly, Poly, Poly> poly_gcd_ext(const Poly& a, const Poly& b);

} // namespace regula

#endif // REGULA_POLY_HPP
