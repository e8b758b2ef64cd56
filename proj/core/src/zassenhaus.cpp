/*
   Copyright 2026 the ktforms authors

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

#include "zassenhaus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ktf::detail {

int zdeg(const ZPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (sgn(f[static_cast<size_t>(i)]) != 0) return i;
    return -1;
}

namespace {

void ztrim(ZPoly& f) { f.resize(static_cast<size_t>(zdeg(f) + 1)); }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    ztrim(r);
    return r;
}

Int zcontent(const ZPoly& f) {
    Int g = 0;
    for (const Int& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Exact division test in Z[x]; quotient returned when b | a.
bool zdivides(const ZPoly& a, const ZPoly& b, ZPoly* quot) {
    if (b.empty()) return false;
    ZPoly r = a;
    ZPoly q(a.size(), Int(0));
    const int db = zdeg(b);
    const Int& lb = b[static_cast<size_t>(db)];
    while (zdeg(r) >= db) {
        int k = zdeg(r) - db;
        Int c, rem;
        mpz_tdiv_qr(c.get_mpz_t(), rem.get_mpz_t(), r[static_cast<size_t>(zdeg(r))].get_mpz_t(),
                    lb.get_mpz_t());
        if (sgn(rem) != 0) return false;
        q[static_cast<size_t>(k)] = c;
        for (int j = 0; j <= db; ++j) r[static_cast<size_t>(k + j)] -= c * b[static_cast<size_t>(j)];
        ztrim(r);
    }
    if (zdeg(r) >= 0) return false;
    if (quot) {
        ztrim(q);
        *quot = std::move(q);
    }
    return true;
}

// ---- arithmetic mod a small odd prime p ----

using MPoly = std::vector<uint64_t>;  // coefficients in [0, p)

struct Zp {
    uint64_t p;
    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b) % p; }
    uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p; }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        for (; e; e >>= 1, a = mul(a, a))
            if (e & 1) r = mul(r, a);
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a % p, p - 2); }
    uint64_t from_int(const Int& v) const {
        Int m = v % static_cast<long>(p);
        if (sgn(m) < 0) m += static_cast<long>(p);
        return m.get_ui();
    }
};

int mdeg(const MPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (f[static_cast<size_t>(i)]) return i;
    return -1;
}

void mtrim(MPoly& f) { f.resize(static_cast<size_t>(mdeg(f) + 1)); }

MPoly mmul(const Zp& F, const MPoly& a, const MPoly& b) {
    if (a.empty() || b.empty()) return {};
    MPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % F.p;
    }
    mtrim(r);
    return r;
}

MPoly msub(const Zp& F, MPoly a, const MPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    mtrim(a);
    return a;
}

void mdivrem(const Zp& F, const MPoly& a, const MPoly& b, MPoly* q, MPoly* r) {
    MPoly rr = a;
    const int db = mdeg(b);
    MPoly qq;
    if (mdeg(rr) >= db) qq.assign(static_cast<size_t>(mdeg(rr) - db) + 1, 0);
    uint64_t ilb = F.inv(b[static_cast<size_t>(db)]);
    while (mdeg(rr) >= db) {
        int k = mdeg(rr) - db;
        uint64_t c = F.mul(rr[static_cast<size_t>(mdeg(rr))], ilb);
        qq[static_cast<size_t>(k)] = c;
        for (int j = 0; j <= db; ++j)
            rr[static_cast<size_t>(k + j)] = F.sub(rr[static_cast<size_t>(k + j)],
                                                   F.mul(c, b[static_cast<size_t>(j)]));
        mtrim(rr);
    }
    if (q) { mtrim(qq); *q = std::move(qq); }
    if (r) *r = std::move(rr);
}

MPoly mmod(const Zp& F, const MPoly& a, const MPoly& b) {
    MPoly r;
    mdivrem(F, a, b, nullptr, &r);
    return r;
}

MPoly mmonic(const Zp& F, MPoly f) {
    int d = mdeg(f);
    if (d < 0) return f;
    uint64_t il = F.inv(f[static_cast<size_t>(d)]);
    for (auto& c : f) c = F.mul(c, il);
    return f;
}

MPoly mgcd(const Zp& F, MPoly a, MPoly b) {
    while (mdeg(b) >= 0) {
        MPoly r = mmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return mmonic(F, std::move(a));
}

MPoly mderiv(const Zp& F, const MPoly& f) {
    MPoly r;
    for (size_t i = 1; i < f.size(); ++i) r.push_back((f[i] * (i % F.p)) % F.p);
    mtrim(r);
    return r;
}

MPoly mpow_mod(const Zp& F, MPoly base, const Int& e, const MPoly& mod) {
    MPoly r{1};
    base = mmod(F, base, mod);
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
        r = mmod(F, mmul(F, r, r), mod);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(bit)))
            r = mmod(F, mmul(F, r, base), mod);
    }
    return r;
}

// Cantor-Zassenhaus equal-degree splitting; f monic squarefree, all
// irreducible factors of degree d.
void edf(const Zp& F, const MPoly& f, int d, std::mt19937_64& rng, std::vector<MPoly>& out) {
    if (mdeg(f) == d) {
        out.push_back(f);
        return;
    }
    Int e(static_cast<long>(F.p));
    mpz_pow_ui(e.get_mpz_t(), e.get_mpz_t(), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    for (;;) {
        MPoly a(static_cast<size_t>(mdeg(f)), 0);
        for (auto& c : a) c = rng() % F.p;
        mtrim(a);
        if (mdeg(a) < 1) continue;
        MPoly b = mpow_mod(F, a, e, f);
        if (mdeg(b) < 0) continue;
        b[0] = F.sub(b[0], 1);
        mtrim(b);
        MPoly g = mgcd(F, b, f);
        int dg = mdeg(g);
        if (dg > 0 && dg < mdeg(f)) {
            MPoly h;
            mdivrem(F, f, g, &h, nullptr);
            edf(F, g, d, rng, out);
            edf(F, mmonic(F, std::move(h)), d, rng, out);
            return;
        }
    }
}

// Full factorization of a monic squarefree f mod p (distinct-degree, then
// equal-degree splitting).
std::vector<MPoly> factor_mod_p(const Zp& F, MPoly f, std::mt19937_64& rng) {
    std::vector<MPoly> out;
    MPoly x{0, 1};
    MPoly h = x;
    int d = 0;
    while (mdeg(f) > 0 && 2 * (d + 1) <= mdeg(f)) {
        ++d;
        h = mpow_mod(F, h, Int(static_cast<long>(F.p)), f);
        MPoly hx = msub(F, h, x);
        MPoly g = mgcd(F, hx, f);
        if (mdeg(g) > 0) {
            edf(F, g, d, rng, out);
            MPoly q;
            mdivrem(F, f, g, &q, nullptr);
            f = mmonic(F, std::move(q));
            h = mmod(F, h, f);
        }
    }
    if (mdeg(f) > 0) out.push_back(f);
    return out;
}

// ---- Hensel lifting (linear, all factors at once) ----

struct Lifted {
    std::vector<ZPoly> factors;  // monic, coefficients in [0, modulus)
    Int modulus;
};

Int symm(const Int& c, const Int& m) {
    Int r = c % m;
    if (sgn(r) < 0) r += m;
    if (r * 2 > m) r -= m;
    return r;
}

Lifted hensel_lift(const ZPoly& f, const Zp& F, const std::vector<MPoly>& fac, const Int& bound) {
    const size_t r = fac.size();
    // Bezout data mod p: b_i * prod_{j != i} f_j == 1 (mod f_i).
    std::vector<MPoly> bez(r);
    for (size_t i = 0; i < r; ++i) {
        MPoly prod{1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = mmod(F, mmul(F, prod, fac[j]), fac[i]);
        // invert prod mod fac[i] via extended euclid in Zp[x]
        MPoly r0 = fac[i], r1 = prod;
        MPoly u0{}, u1{1};
        while (mdeg(r1) >= 0) {
            MPoly q, r2;
            mdivrem(F, r0, r1, &q, &r2);
            MPoly u2 = msub(F, u0, mmul(F, q, u1));
            r0 = std::move(r1); r1 = std::move(r2);
            u0 = std::move(u1); u1 = std::move(u2);
        }
        if (mdeg(r0) != 0) throw std::logic_error("hensel: factors not coprime mod p");
        uint64_t il = F.inv(r0[0]);
        for (auto& c : u0) c = F.mul(c, il);
        bez[i] = mmod(F, u0, fac[i]);
    }

    std::vector<ZPoly> lifted(r);
    for (size_t i = 0; i < r; ++i) {
        lifted[i].resize(fac[i].size());
        for (size_t j = 0; j < fac[i].size(); ++j) lifted[i][j] = Int(static_cast<long>(fac[i][j]));
    }
    const Int lc = f[static_cast<size_t>(zdeg(f))];
    const uint64_t lc_inv = F.inv(F.from_int(lc));
    Int m(static_cast<long>(F.p));
    while (m <= 2 * bound) {
        ZPoly prod{Int(1)};
        for (const auto& g : lifted) prod = zmul(prod, g);
        for (auto& c : prod) c *= lc;
        ZPoly err = f;
        if (err.size() < prod.size()) err.resize(prod.size(), Int(0));
        for (size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
        ztrim(err);
        // err / m reduced mod p, scaled by lc^{-1}
        MPoly e;
        e.reserve(err.size());
        for (const Int& c : err) {
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
            if (sgn(rem) != 0) throw std::logic_error("hensel: error term not divisible");
            e.push_back(F.mul(F.from_int(q), lc_inv));
        }
        mtrim(e);
        for (size_t i = 0; i < r; ++i) {
            MPoly di = mmod(F, mmul(F, e, bez[i]), fac[i]);
            if (lifted[i].size() < di.size() + 0) lifted[i].resize(di.size(), Int(0));
            for (size_t j = 0; j < di.size(); ++j)
                lifted[i][j] += m * Int(static_cast<long>(di[j]));
        }
        m *= static_cast<long>(F.p);
    }
    return {std::move(lifted), std::move(m)};
}

Int mignotte_bound(const ZPoly& f) {
    const int n = zdeg(f);
    Int norm2 = 0;
    for (const Int& c : f) norm2 += c * c;
    Int s;
    mpz_sqrt(s.get_mpz_t(), norm2.get_mpz_t());
    s += 1;
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(n / 2));
    return binom * s * abs(f[static_cast<size_t>(n)]);
}

ZPoly zprimitive(ZPoly f) {
    Int c = zcontent(f);
    if (sgn(c) == 0) return f;
    if (sgn(f[static_cast<size_t>(zdeg(f))]) < 0) c = -c;
    for (auto& x : f) x /= c;
    return f;
}

}  // namespace

std::vector<ZPoly> zassenhaus_squarefree(const ZPoly& input) {
    ZPoly f = zprimitive(input);
    const int n = zdeg(f);
    if (n <= 0) throw std::invalid_argument("zassenhaus: need degree >= 1");
    if (n == 1) return {f};

    // Prime selection: p odd, not dividing lc, f squarefree mod p; among the
    // first few suitable primes keep the one with the fewest modular factors.
    static const uint64_t kPrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29,  31,  37,  41,  43,
                                       47, 53, 59, 61, 67, 71, 73, 79, 83,  89,  97,  101, 103,
                                       107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};
    const Int& lc = f[static_cast<size_t>(n)];
    std::mt19937_64 rng(0x5eedULL + static_cast<unsigned long>(n));

    Zp best{};
    std::vector<MPoly> best_fac;
    int tried = 0;
    for (uint64_t p : kPrimes) {
        Zp F{p};
        if (F.from_int(lc) == 0) continue;
        MPoly fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) fp[i] = F.from_int(f[i]);
        mtrim(fp);
        if (mdeg(fp) != n) continue;
        fp = mmonic(F, std::move(fp));
        MPoly g = mgcd(F, fp, mderiv(F, fp));
        if (mdeg(g) != 0) continue;  // not squarefree mod p
        auto fac = factor_mod_p(F, fp, rng);
        if (best_fac.empty() || fac.size() < best_fac.size()) {
            best = F;
            best_fac = std::move(fac);
        }
        if (++tried >= 4 || best_fac.size() == 1) break;
    }
    if (best_fac.empty()) throw std::logic_error("zassenhaus: no suitable prime found");
    if (best_fac.size() == 1) return {f};

    Lifted lift = hensel_lift(f, best, best_fac, mignotte_bound(f));
    const Int& m = lift.modulus;

    // Subset recombination.
    std::vector<ZPoly> result;
    std::vector<size_t> live(lift.factors.size());
    std::iota(live.begin(), live.end(), 0);
    ZPoly rest = f;

    auto try_subset = [&](const std::vector<size_t>& idx) -> bool {
        ZPoly g{rest[static_cast<size_t>(zdeg(rest))]};
        for (size_t i : idx) {
            g = zmul(g, lift.factors[i]);
            for (auto& c : g) {
                c %= m;
                if (sgn(c) < 0) c += m;
            }
        }
        for (auto& c : g) c = symm(c, m);
        ztrim(g);
        g = zprimitive(std::move(g));
        ZPoly q;
        if (!zdivides(rest, g, &q)) return false;
        result.push_back(std::move(g));
        rest = zprimitive(std::move(q));
        std::vector<size_t> nl;
        for (size_t v : live)
            if (std::find(idx.begin(), idx.end(), v) == idx.end()) nl.push_back(v);
        live = std::move(nl);
        return true;
    };

    size_t s = 1;
    while (2 * s <= live.size()) {
        // combinations of size s over live indices
        std::vector<size_t> comb(s);
        std::iota(comb.begin(), comb.end(), 0);
        bool found = false;
        for (;;) {
            std::vector<size_t> idx(s);
            for (size_t i = 0; i < s; ++i) idx[i] = live[comb[i]];
            if (try_subset(idx)) {
                found = true;
                break;
            }
            // next combination
            int i = static_cast<int>(s) - 1;
            while (i >= 0 && comb[static_cast<size_t>(i)] ==
                                 live.size() - s + static_cast<size_t>(i))
                --i;
            if (i < 0) break;
            ++comb[static_cast<size_t>(i)];
            for (size_t j = static_cast<size_t>(i) + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
        }
        if (!found) ++s;
    }
    if (zdeg(rest) > 0) result.push_back(zprimitive(std::move(rest)));
    return result;
}

}  // namespace ktf::detail
