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

#include "regula/ideals.hpp"

#include <algorithm>

namespace regula {

namespace {

const Poly& s_plus_one() {
    static const Poly p({Rat(1), Rat(1)});
    return p;
}

} // namespace

RatFunc ideal_generator(const std::vector<RatFunc>& gens) {
    std::vector<RatFunc> nz;
    for (const RatFunc& f : gens)
        if (!f.is_zero()) nz.push_back(f);
    if (nz.empty())
        throw std::invalid_argument("ideal_generator: needs at least one nonzero generator");

    // common denominator, then gcd of the lifted numerators
    Poly d = Poly::one();
    for (const RatFunc& f : nz) d = poly_lcm(d, f.den());
    Poly h;
    int min_vinf = 0;
    bool first = true;
    for (const RatFunc& f : nz) {
        h = poly_gcd(h, f.num() * poly_divexact(d, f.den()));
        const int v = *f.vinf();
        min_vinf = first ? v : std::min(min_vinf, v);
        first = false;
    }
    const RatFunc g0(h, d);
    const int c = *g0.vinf() - min_vinf; // >= 0: g0 divides every generator
    const RatFunc g = g0 * RatFunc(s_plus_one().pow(c));

    // mandatory verification: both inclusion directions
    std::vector<Poly> quotient_nums;
    int min_qv = -1;
    for (const RatFunc& f : nz) {
        const RatFunc q = f / g;
        if (!in_S(q).stable)
            throw internal_defect_error("ideal_generator: generator does not divide an input");
        quotient_nums.push_back(q.num());
        const int v = *q.vinf();
        min_qv = (min_qv < 0) ? v : std::min(min_qv, v);
    }
    if (min_qv != 0 || has_common_unstable_zero(quotient_nums))
        throw internal_defect_error("ideal_generator: quotients fail the unit-ideal test");
    return g;
}

bool ideal_membership(const RatFunc& f, const RatFunc& g) {
    if (g.is_zero()) throw std::invalid_argument("ideal_membership: zero generator");
    if (f.is_zero()) return true;
    return in_S(f / g).stable;
}

bool ideal_equal(const std::vector<RatFunc>& gens_a, const std::vector<RatFunc>& gens_b) {
    const RatFunc ga = ideal_generator(gens_a);
    const RatFunc gb = ideal_generator(gens_b);
    return is_unit_in_S(ga / gb);
}

ScalarCoprimeFactorization scalar_coprime_factorization(const RatFunc& g) {
    if (g.is_zero())
        throw std::domain_error("scalar_coprime_factorization: zero function");
    const Poly& p = g.num();
    const Poly& q = g.den();
    const int k = std::max(p.degree(), q.degree());
    const Poly sk = s_plus_one().pow(k);

    ScalarCoprimeFactorization out;
    out.g = g;
    out.N = RatFunc(p, sk);
    out.D = RatFunc(q, sk);

    // witnesses: alpha*p + beta*q = (s+1)^(k+m), x = alpha/(s+1)^m,
    // y = beta/(s+1)^m; grow m until both land in S
    const auto [one, u, v] = poly_gcd_ext(p, q);
    if (!one.is_one())
        throw internal_defect_error("scalar_coprime_factorization: canonical form not coprime");
    bool found = false;
    for (int m = 0; m <= k + 4 && !found; ++m) {
        const Poly den = s_plus_one().pow(m);
        const Poly R = sk * den;
        const Poly alpha0 = u * R;
        const Poly beta0 = v * R;
        for (int side = 0; side < 2 && !found; ++side) {
            Poly alpha, beta;
            if (side == 0 && !q.is_constant()) {
                auto [w, rem] = poly_divrem(alpha0, q);
                alpha = rem;
                beta = beta0 + w * p;
            } else if (side == 1 && !p.is_constant()) {
                auto [w, rem] = poly_divrem(beta0, p);
                beta = rem;
                alpha = alpha0 + w * q;
            } else if (side == 1) {
                alpha = alpha0;
                beta = beta0;
            } else {
                continue;
            }
            const RatFunc x(alpha, den);
            const RatFunc y(beta, den);
            if (in_S(x).stable && in_S(y).stable) {
                out.x = x;
                out.y = y;
                found = true;
            }
        }
    }
    if (!found)
        throw internal_defect_error("scalar_coprime_factorization: witness search exhausted");

    const bool ok = in_S(out.N).stable && in_S(out.D).stable && !out.D.is_zero() &&
                    out.g == out.N / out.D &&
                    out.x * out.N + out.y * out.D == RatFunc::one();
    if (!ok)
        throw internal_defect_error("scalar_coprime_factorization: invariant verification failed");
    return out;
}

RatFunc internal_model_element(const std::vector<RatFunc>& gens) {
    return scalar_coprime_factorization(ideal_generator(gens)).D;
}

} // namespace regula
