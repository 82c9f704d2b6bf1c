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

#include "regula/stable_ring.hpp"

#include <gmpxx.h>

#include <algorithm>

namespace regula {

namespace {

// ---------------------------------------------------------------------------
// Routh table.
//
// The table is built fraction-free over the integers: each computed row is
// a nonzero constant multiple of the true Routh row, with the running
// division by the leading entry of the row two above (Bareiss-style
// condensation) keeping entry growth at determinant scale. The sign of the
// scale factor relating stored rows to true rows is tracked alongside, so
// first-column sign analysis is exact. A plain rational-arithmetic table
// backs it up in case an exactness assertion ever fails.
// ---------------------------------------------------------------------------

std::pair<bool, std::optional<int>> routh_rational(const std::vector<Rat>& asc, int n) {
    auto row_len = [n](int k) { return (n - k) / 2 + 1; };
    std::vector<std::vector<Rat>> rows(static_cast<size_t>(n) + 1);
    rows[0].resize(static_cast<size_t>(row_len(0)));
    rows[1].resize(static_cast<size_t>(row_len(1)));
    for (int i = 0; i < row_len(0); ++i) rows[0][static_cast<size_t>(i)] = asc[static_cast<size_t>(n - 2 * i)];
    for (int i = 0; i < row_len(1); ++i) rows[1][static_cast<size_t>(i)] = asc[static_cast<size_t>(n - 1 - 2 * i)];

    auto at = [&](int k, int i) -> Rat {
        const auto& r = rows[static_cast<size_t>(k)];
        return i < static_cast<int>(r.size()) ? r[static_cast<size_t>(i)] : Rat(0);
    };

    for (int k = 2; k <= n; ++k) {
        if (at(k - 1, 0).is_zero()) return {false, k - 1};
        rows[static_cast<size_t>(k)].resize(static_cast<size_t>(row_len(k)));
        for (int i = 0; i < row_len(k); ++i)
            rows[static_cast<size_t>(k)][static_cast<size_t>(i)] =
                (at(k - 1, 0) * at(k - 2, i + 1) - at(k - 2, 0) * at(k - 1, i + 1)) / at(k - 1, 0);
    }
    const int s0 = at(0, 0).sign();
    for (int k = 0; k <= n; ++k) {
        const int sk = at(k, 0).sign();
        if (sk == 0) return {false, k};
        if (sk != s0) return {false, k};
    }
    return {true, std::nullopt};
}

std::pair<bool, std::optional<int>> routh_fraction_free(const std::vector<Rat>& ratc, int n) {
    // clear denominators (positive factor, roots unchanged)
    mpz_class l = 1;
    for (const Rat& c : ratc) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    std::vector<mpz_class> asc;
    asc.reserve(ratc.size());
    for (const Rat& c : ratc) asc.push_back(c.num() * (l / c.den()));

    auto row_len = [n](int k) { return (n - k) / 2 + 1; };
    std::vector<std::vector<mpz_class>> rows(static_cast<size_t>(n) + 1);
    rows[0].resize(static_cast<size_t>(row_len(0)));
    rows[1].resize(static_cast<size_t>(row_len(1)));
    for (int i = 0; i < row_len(0); ++i) rows[0][static_cast<size_t>(i)] = asc[static_cast<size_t>(n - 2 * i)];
    for (int i = 0; i < row_len(1); ++i) rows[1][static_cast<size_t>(i)] = asc[static_cast<size_t>(n - 1 - 2 * i)];

    auto at = [&](int k, int i) -> mpz_class {
        const auto& r = rows[static_cast<size_t>(k)];
        return i < static_cast<int>(r.size()) ? r[static_cast<size_t>(i)] : mpz_class(0);
    };
    auto stored_sign = [&](int k) { return sgn(at(k, 0)); };

    // sigma[k]: sign of the factor relating stored row k to the true row
    std::vector<int> sigma(static_cast<size_t>(n) + 1, 1);
    std::vector<int> true_sign(static_cast<size_t>(n) + 1, 0);

    for (int k = 2; k <= n; ++k) {
        if (stored_sign(k - 1) == 0) return {false, k - 1};
        rows[static_cast<size_t>(k)].resize(static_cast<size_t>(row_len(k)));
        const mpz_class divisor = (k >= 3) ? at(k - 3, 0) : mpz_class(1);
        for (int i = 0; i < row_len(k); ++i) {
            mpz_class numv = at(k - 1, 0) * at(k - 2, i + 1) - at(k - 2, 0) * at(k - 1, i + 1);
            if (divisor != 1) {
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), numv.get_mpz_t(), divisor.get_mpz_t());
                if (r != 0) return routh_rational(ratc, n); // should be unreachable
                numv = q;
            }
            rows[static_cast<size_t>(k)][static_cast<size_t>(i)] = numv;
        }
        const int sr_km1 = stored_sign(k - 1);
        const int sr_km3 = (k >= 3) ? stored_sign(k - 3) : 1;
        sigma[static_cast<size_t>(k)] = sigma[static_cast<size_t>(k - 2)] * sr_km1 * sr_km3;
    }
    for (int k = 0; k <= n; ++k) {
        const int s = stored_sign(k);
        if (s == 0) return {false, k};
        true_sign[static_cast<size_t>(k)] = sigma[static_cast<size_t>(k)] * s;
    }
    for (int k = 1; k <= n; ++k)
        if (true_sign[static_cast<size_t>(k)] != true_sign[0]) return {false, k};
    return {true, std::nullopt};
}

const Poly& s_plus_one() {
    static const Poly p({Rat(1), Rat(1)});
    return p;
}

Poly s_plus_one_pow(int e) { return s_plus_one().pow(e); }

void require_in_S(const RatFunc& f, const char* who) {
    if (!in_S(f).stable)
        throw std::invalid_argument(std::string(who) + ": input not in the stable ring S");
}

// gcd representative for a nonempty list of nonzero elements of S:
// h / (s+1)^(deg h + c) with h the Q[s]-gcd of the numerators and c the
// minimal valuation at infinity.
RatFunc gcd_rep(const std::vector<RatFunc>& fs) {
    Poly h;
    int c = 0;
    bool first = true;
    for (const RatFunc& f : fs) {
        h = poly_gcd(h, f.num());
        const int v = *f.vinf();
        c = first ? v : std::min(c, v);
        first = false;
    }
    return RatFunc(h, s_plus_one_pow(h.degree() + c));
}

// x*a + y*b = 1 for a coprime pair in S (no common closed-RHP zero,
// at least one biproper). Solves alpha*p*t + beta*r*q = q*t*(s+1)^m over
// Q[s] and divides through by (s+1)^m, growing m until both witnesses
// land in S.
std::pair<RatFunc, RatFunc> solve_coprime_bezout(RatFunc a, RatFunc b) {
    bool swapped = false;
    if (*b.vinf() != 0) {
        std::swap(a, b);
        swapped = true;
    }
    const Poly &p = a.num(), &q = a.den(), &r = b.num(), &t = b.den();
    const Poly pt = p * t;
    const Poly rq = r * q;
    const auto [G, u, v] = poly_gcd_ext(pt, rq);
    const Poly ptG = poly_divexact(pt, G);
    const Poly rqG = poly_divexact(rq, G);
    const Poly qt = q * t;

    const int mmax = p.degree() + q.degree() + r.degree() + t.degree() + G.degree() + 8;
    for (int m = 0; m <= mmax; ++m) {
        const Poly den = s_plus_one_pow(m);
        const Poly R = qt * den;
        auto [K, Krem] = poly_divrem(R, G);
        if (!Krem.is_zero()) continue;
        const Poly alpha0 = u * K;
        const Poly beta0 = v * K;
        for (int side = 0; side < 2; ++side) {
            Poly alpha, beta;
            if (side == 0) {
                auto [w, rem] = poly_divrem(alpha0, rqG);
                alpha = rem;
                beta = beta0 + w * ptG;
            } else {
                auto [w, rem] = poly_divrem(beta0, ptG);
                beta = rem;
                alpha = alpha0 + w * rqG;
            }
            RatFunc x(alpha, den);
            RatFunc y(beta, den);
            if (!in_S(x).stable || !in_S(y).stable) continue;
            if (!(x * a + y * b == RatFunc::one())) continue;
            if (swapped) std::swap(x, y);
            return {x, y};
        }
    }
    throw internal_defect_error("bezout_in_S: witness search exhausted");
}

} // namespace

std::pair<bool, std::optional<int>> is_hurwitz_detail(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("is_hurwitz: zero polynomial");
    const int n = p.degree();
    if (n == 0) return {true, std::nullopt}; // no roots
    return routh_fraction_free(p.coeffs(), n);
}

bool is_hurwitz(const Poly& p) { return is_hurwitz_detail(p).first; }

StabilityVerdict in_S(const RatFunc& f) {
    StabilityVerdict v;
    if (f.is_zero()) {
        v.stable = true;
        return v;
    }
    if (*f.vinf() < 0) {
        v.stable = false;
        v.reason = StabilityReason::improper;
        return v;
    }
    auto [hurwitz, row] = is_hurwitz_detail(f.den());
    if (!hurwitz) {
        v.stable = false;
        v.reason = StabilityReason::unstable_denominator;
        v.witness_den = f.den();
        v.routh_row = row;
        return v;
    }
    v.stable = true;
    return v;
}

bool divides_in_S(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) throw std::invalid_argument("divides_in_S: zero divisor");
    if (b.is_zero()) return true;
    return in_S(b / a).stable;
}

bool is_unit_in_S(const RatFunc& f) {
    if (f.is_zero()) return false;
    return in_S(f).stable && in_S(f.inverse()).stable;
}

RatFunc gcd_in_S(const RatFunc& a, const RatFunc& b) {
    require_in_S(a, "gcd_in_S");
    require_in_S(b, "gcd_in_S");
    std::vector<RatFunc> nz;
    if (!a.is_zero()) nz.push_back(a);
    if (!b.is_zero()) nz.push_back(b);
    if (nz.empty()) throw std::invalid_argument("gcd_in_S: both inputs zero");
    const RatFunc g = gcd_rep(nz);

    // self-check: g divides both and the quotients generate the unit ideal
    std::vector<Poly> qnums;
    int minv = -1;
    for (const RatFunc& f : nz) {
        const RatFunc quot = f / g;
        if (!in_S(quot).stable)
            throw internal_defect_error("gcd_in_S: representative does not divide an input");
        qnums.push_back(quot.num());
        const int v = *quot.vinf();
        minv = (minv < 0) ? v : std::min(minv, v);
    }
    if (minv != 0 || has_common_unstable_zero(qnums))
        throw internal_defect_error("gcd_in_S: quotients fail the unit-ideal test");
    return g;
}

BezoutWitness bezout_in_S(const RatFunc& a, const RatFunc& b) {
    require_in_S(a, "bezout_in_S");
    require_in_S(b, "bezout_in_S");
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("bezout_in_S: both inputs zero");

    BezoutWitness w;
    if (is_unit_in_S(a)) {
        w = {a.inverse(), RatFunc::zero(), RatFunc::one()};
    } else if (is_unit_in_S(b)) {
        w = {RatFunc::zero(), b.inverse(), RatFunc::one()};
    } else if (a.is_zero()) {
        const RatFunc g = gcd_in_S(a, b);
        w = {RatFunc::zero(), g / b, g};
    } else if (b.is_zero()) {
        const RatFunc g = gcd_in_S(a, b);
        w = {g / a, RatFunc::zero(), g};
    } else {
        const RatFunc g = gcd_in_S(a, b);
        auto [x1, y1] = solve_coprime_bezout(a / g, b / g);
        if (is_unit_in_S(g))
            w = {x1 / g, y1 / g, RatFunc::one()};
        else
            w = {x1, y1, g};
    }

    if (!(w.x * a + w.y * b == w.g) || !in_S(w.x).stable || !in_S(w.y).stable)
        throw internal_defect_error("bezout_in_S: witness verification failed");
    return w;
}

bool has_common_unstable_zero(const std::vector<Poly>& ps) {
    if (ps.empty()) throw std::invalid_argument("has_common_unstable_zero: empty list");
    Poly g;
    for (const Poly& p : ps) {
        if (p.is_zero()) throw std::invalid_argument("has_common_unstable_zero: zero polynomial");
        g = poly_gcd(g, p);
    }
    if (g.is_constant()) return false;
    return !is_hurwitz(g);
}

} // namespace regula
