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

#include "regula/poly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace regula {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const Rat& coeff, int degree) {
    if (degree < 0) throw std::invalid_argument("Poly::monomial: negative degree");
    Poly p;
    if (!coeff.is_zero()) {
        p.c_.assign(static_cast<size_t>(degree) + 1, Rat(0));
        p.c_.back() = coeff;
    }
    return p;
}

const Rat& Poly::coeff(int k) const {
    static const Rat kZero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    Poly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            r.c_[i + j] += c_[i] * o.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::operator*(const Rat& k) const {
    if (k.is_zero()) return Poly();
    Poly r(*this);
    for (auto& c : r.c_) c *= k;
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly acc = Poly::one();
    Poly base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& a = coeff(k);
        if (a.is_zero()) continue;
        Rat mag = a.abs();
        if (first) {
            if (a.sign() < 0) os << "-";
            first = false;
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
        }
        bool unit_mag = mag.is_one();
        if (k == 0 || !unit_mag) os << mag.str();
        if (k > 0) {
            if (!unit_mag) os << "*";
            os << "s";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("poly_divrem: division by zero polynomial");
    if (a.degree() < b.degree()) return {Poly(), a};
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quo(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat blc = b.lc();
    const int bd = b.degree();
    for (int k = a.degree() - bd; k >= 0; --k) {
        Rat q = rem[static_cast<size_t>(k + bd)] / blc;
        quo[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= bd; ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.coeff(j);
    }
    rem.resize(static_cast<size_t>(bd) > rem.size() ? rem.size() : static_cast<size_t>(bd));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(a, b);
    if (!r.is_zero()) throw std::domain_error("poly_divexact: inexact division");
    return q;
}

// ---------------------------------------------------------------------------
// gcd machinery. Rational inputs are cleared to primitive integer
// polynomials; small cases run a primitive PRS, larger ones a modular
// (Brown) gcd whose candidate is certified by exact trial division.
// ---------------------------------------------------------------------------

namespace {

using ZPoly = std::vector<mpz_class>; // ascending, trimmed, zero = empty

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zp_deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

// Clear denominators and remove content; leading coefficient > 0.
ZPoly zp_from_poly(const Poly& p) {
    ZPoly z;
    if (p.is_zero()) return z;
    mpz_class l = 1;
    for (const Rat& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    z.reserve(p.coeffs().size());
    for (const Rat& c : p.coeffs()) z.push_back(c.num() * (l / c.den()));
    mpz_class g = 0;
    for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (z.back() < 0) g = -g;
    for (auto& c : z) c /= g;
    return z;
}

Poly zp_to_monic_poly(const ZPoly& z) {
    if (z.empty()) return Poly();
    std::vector<Rat> c;
    c.reserve(z.size());
    for (const auto& k : z) c.emplace_back(k, z.back());
    return Poly(std::move(c));
}

mpz_class zp_content(const ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly zp_primitive(ZPoly p) {
    if (p.empty()) return p;
    mpz_class g = zp_content(p);
    if (p.back() < 0) g = -g;
    for (auto& c : p) c /= g;
    return p;
}

// Exact division in Z[s]; returns false if b does not divide a.
bool zp_divexact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
    q.clear();
    if (a.empty()) return true;
    if (b.empty() || zp_deg(a) < zp_deg(b)) return false;
    ZPoly rem = a;
    const int bd = zp_deg(b);
    q.assign(static_cast<size_t>(zp_deg(a) - bd) + 1, mpz_class(0));
    mpz_class qc, r;
    while (!rem.empty() && zp_deg(rem) >= bd) {
        const int k = zp_deg(rem) - bd;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem.back().get_mpz_t(),
                    b.back().get_mpz_t());
        if (r != 0) return false;
        q[static_cast<size_t>(k)] = qc;
        for (int j = 0; j <= bd; ++j)
            rem[static_cast<size_t>(k + j)] -= qc * b[static_cast<size_t>(j)];
        zp_trim(rem);
    }
    return rem.empty();
}

// Pseudo-remainder of a by b (deg a >= deg b > -1).
ZPoly zp_pseudo_rem(ZPoly a, const ZPoly& b) {
    const int bd = zp_deg(b);
    const mpz_class& blc = b.back();
    while (zp_deg(a) >= bd) {
        const mpz_class alc = a.back();
        const int shift = zp_deg(a) - bd;
        for (auto& c : a) c *= blc;
        for (int j = 0; j <= bd; ++j)
            a[static_cast<size_t>(shift + j)] -= alc * b[static_cast<size_t>(j)];
        zp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

ZPoly zp_gcd_prs(ZPoly a, ZPoly b) {
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zp_primitive(zp_pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return zp_primitive(std::move(a));
}

// --- GF(p) helpers, p < 2^31 ---------------------------------------------

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) { return a * b % p; }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
    uint64_t r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

uint64_t invmod(uint64_t a, uint64_t p) { return powmod(a, p - 2, p); }

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
        if (n % q == 0) return n == q;
    }
    uint32_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (uint32_t base : {2u, 7u, 61u}) { // deterministic below 2^32
        if (base % n == 0) continue;
        uint64_t x = powmod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

using FpPoly = std::vector<uint64_t>;

void fp_trim(FpPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

FpPoly zp_mod(const ZPoly& a, uint64_t p) {
    FpPoly r;
    r.reserve(a.size());
    mpz_class t;
    for (const auto& c : a) {
        mpz_mod_ui(t.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
        r.push_back(t.get_ui());
    }
    fp_trim(r);
    return r;
}

FpPoly fp_rem(FpPoly a, const FpPoly& b, uint64_t p) {
    const int bd = static_cast<int>(b.size()) - 1;
    const uint64_t binv = invmod(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= bd) {
        const uint64_t q = mulmod(a.back(), binv, p);
        const int shift = static_cast<int>(a.size()) - 1 - bd;
        for (int j = 0; j <= bd; ++j) {
            uint64_t sub = mulmod(q, b[static_cast<size_t>(j)], p);
            uint64_t& tgt = a[static_cast<size_t>(shift + j)];
            tgt = (tgt + p - sub) % p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        FpPoly r = fp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        uint64_t inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

// Symmetric representative in (-m/2, m/2].
mpz_class mods_sym(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    if (r * 2 > m) r -= m;
    return r;
}

ZPoly zp_gcd_modular(const ZPoly& a, const ZPoly& b) {
    mpz_class lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

    ZPoly crt;      // coefficients mod crt_mod, scaled to lc = lc_gcd
    mpz_class crt_mod = 0;
    int best_deg = std::min(zp_deg(a), zp_deg(b)) + 1;

    uint32_t p = 0x7fffffff; // scan downward from 2^31 - 1
    for (int tried = 0; tried < 2000; --p) {
        if (!is_prime_u32(p)) continue;
        ++tried;
        if (mpz_divisible_ui_p(a.back().get_mpz_t(), p) ||
            mpz_divisible_ui_p(b.back().get_mpz_t(), p))
            continue;
        FpPoly gp = fp_gcd(zp_mod(a, p), zp_mod(b, p), p);
        if (gp.size() == 1) return ZPoly{1};
        const int d = static_cast<int>(gp.size()) - 1;
        if (d > best_deg) continue; // unlucky prime
        mpz_class t;
        mpz_mod_ui(t.get_mpz_t(), lc_gcd.get_mpz_t(), p);
        const uint64_t scale = t.get_ui();
        ZPoly img(gp.size());
        for (size_t i = 0; i < gp.size(); ++i) img[i] = mpz_class(static_cast<unsigned long>(mulmod(gp[i], scale, p)));
        if (d < best_deg || crt_mod == 0) {
            best_deg = d;
            crt = img;
            crt_mod = p;
        } else {
            // combine with existing residue
            mpz_class pz(static_cast<unsigned long>(p)), minv;
            mpz_invert(minv.get_mpz_t(), crt_mod.get_mpz_t(), pz.get_mpz_t());
            for (size_t i = 0; i < crt.size(); ++i) {
                mpz_class diff = (img[i] - crt[i]) % pz;
                if (diff < 0) diff += pz;
                crt[i] += crt_mod * ((diff * minv) % pz);
            }
            crt_mod *= pz;
        }
        ZPoly cand(crt.size());
        for (size_t i = 0; i < crt.size(); ++i) cand[i] = mods_sym(crt[i], crt_mod);
        zp_trim(cand);
        if (zp_deg(cand) != best_deg) continue;
        cand = zp_primitive(std::move(cand));
        ZPoly q;
        if (zp_divexact(a, cand, q) && zp_divexact(b, cand, q)) return cand;
    }
    return zp_gcd_prs(a, b); // prime pool exhausted; exact but slower
}

} // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::one();
    ZPoly za = zp_from_poly(a);
    ZPoly zb = zp_from_poly(b);
    ZPoly g = (std::min(zp_deg(za), zp_deg(zb)) <= 8) ? zp_gcd_prs(za, zb)
                                                      : zp_gcd_modular(za, zb);
    return zp_to_monic_poly(g);
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return poly_divexact(a * b, poly_gcd(a, b)).monic();
}

std::tuple<Poly, Poly, Poly> poly_gcd_ext(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw std::domain_error("poly_gcd_ext: both inputs zero");
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(), u1 = Poly::zero();
    Poly v0 = Poly::zero(), v1 = Poly::one();
    while (!r1.is_zero()) {
        auto [q, r] = poly_divrem(r0, r1);
        r0 = std::exchange(r1, r);
        u0 = std::exchange(u1, u0 - q * u1);
        v0 = std::exchange(v1, v0 - q * v1);
    }
    const Rat lead = r0.lc();
    Poly g = r0 * (Rat(1) / lead);
    Poly u = u0 * (Rat(1) / lead);
    Poly v = v0 * (Rat(1) / lead);

    // Reduce the cofactors to the standard minimal-degree representatives.
    if (!a.is_zero() && !b.is_zero()) {
        Poly bg = poly_divexact(b, g);
        if (!bg.is_constant()) {
            auto [q, ur] = poly_divrem(u, bg);
            if (!q.is_zero()) {
                u = ur;
                v = poly_divexact(g - u * a, b);
            }
        }
    }
    if (!((u * a + v * b) == g))
        throw internal_defect_error("poly_gcd_ext: Bezout identity check failed");
    return {g, u, v};
}

} // namespace regula
