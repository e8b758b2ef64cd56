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

#include "ktforms/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "zassenhaus.hpp"

namespace ktf {

namespace {

// Clears denominators of a monic rational polynomial; primitive integer poly.
detail::ZPoly to_zpoly(const Poly& f) {
    Int den = 1;
    for (const auto& c : f.coeffs()) {
        const Int& d = c.rat_part().get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    detail::ZPoly r;
    r.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) {
        Rat s = c.rat_part() * Rat(den);
        r.push_back(s.get_num());
    }
    return r;
}

Poly monic_from_zpoly(const FieldPtr& q, const detail::ZPoly& g) {
    std::vector<Rat> cs;
    cs.reserve(g.size());
    Rat lc(g.back());
    for (const Int& c : g) cs.emplace_back(Rat(c) / lc);
    return Poly::from_rats(q, cs);
}

std::vector<Poly> factor_squarefree_q(const Poly& f) {
    auto zf = to_zpoly(f);
    auto parts = detail::zassenhaus_squarefree(zf);
    std::vector<Poly> out;
    out.reserve(parts.size());
    for (const auto& g : parts) out.push_back(monic_from_zpoly(f.field(), g));
    return out;
}

Poly rat_coords_poly(const FieldElem& e) {
    return Poly::from_rats(NumberField::rationals(), e.coords());
}

// Trager's norm method: factoring over k = Q(theta) reduces to factoring the
// norm N(x) = Res_y(m(y), f(x - s*theta)) over Q, then gcd'ing back.
std::vector<Poly> trager_factor(const Poly& f) {
    const FieldPtr& k = f.field();
    const FieldPtr& q = NumberField::rationals();
    const int d = k->degree();
    const Poly m = Poly::from_rats(q, k->min_poly());
    const FieldElem theta = FieldElem::generator(k);

    for (int trial = 0;; ++trial) {
        long s = (trial + 1) / 2 * (trial % 2 ? 1 : -1);  // 0, 1, -1, 2, -2, ...
        Poly fs = f.shift_t(Rat(-s) * theta);
        const int nd = f.deg() * d;
        std::vector<Rat> xs;
        std::vector<FieldElem> ys;
        xs.reserve(static_cast<size_t>(nd) + 1);
        for (long i = 0; static_cast<int>(xs.size()) <= nd; ++i) {
            long x0 = (i + 1) / 2 * (i % 2 ? 1 : -1);
            FieldElem z = fs.eval(Rat(x0));
            FieldElem r = resultant(m, rat_coords_poly(z));
            xs.emplace_back(x0);
            ys.push_back(r);
        }
        Poly norm = interpolate(q, xs, ys);
        if (norm.deg() != nd) throw std::logic_error("trager: norm degree mismatch");
        if (!is_squarefree(norm)) continue;

        auto nf = factor_squarefree_q(norm.monic());
        if (nf.size() == 1) return {f};
        std::vector<Poly> out;
        Poly check = Poly::one(k);
        for (const Poly& ni : nf) {
            std::vector<FieldElem> cs;
            cs.reserve(ni.coeffs().size());
            for (const auto& c : ni.coeffs()) cs.emplace_back(k, c.rat_part());
            Poly lifted(k, std::move(cs));
            Poly gi = lifted.shift_t(Rat(s) * theta);
            Poly fi = gcd(f, gi);
            if (fi.deg() >= 1) {
                out.push_back(fi);
                check = check * fi;
            }
        }
        if (check != f) throw std::logic_error("trager: factor product mismatch");
        return out;
    }
}

}  // namespace

namespace detail {

std::vector<Poly> factor_squarefree_monic(const Poly& f) {
    if (f.deg() == 1) return {f};
    if (f.field()->is_rational()) return factor_squarefree_q(f);
    return trager_factor(f);
}

}  // namespace detail

Poly Factorization::product() const {
    Poly r = Poly::constant(unit);
    for (const auto& [p, e] : factors) r = r * p.pow(e);
    return r;
}

Factorization poly_factor(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("poly_factor: zero polynomial");
    Factorization out{f.lc(), {}};
    if (f.deg() == 0) return out;
    Poly w = f.monic();

    // Yun's squarefree decomposition, then split each squarefree part.
    std::vector<std::pair<Poly, int>> sqfree;
    Poly g = gcd(w, w.derivative());
    if (g.deg() == 0) {
        sqfree.emplace_back(w, 1);
    } else {
        Poly c = exact_div(w, g);
        Poly d = exact_div(w.derivative(), g) - c.derivative();
        for (int i = 1; c.deg() > 0; ++i) {
            Poly a = gcd(c, d);
            if (a.deg() > 0) sqfree.emplace_back(a, i);
            c = exact_div(c, a);
            d = exact_div(d, a) - c.derivative();
        }
    }
    for (const auto& [part, mult] : sqfree) {
        for (const Poly& p : detail::factor_squarefree_monic(part))
            out.factors.emplace_back(p, mult);
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return out;
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) return false;
    if (f.deg() <= 1) return true;
    return gcd(f, f.derivative()).deg() == 0;
}

bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) return false;
    if (f.deg() == 1) return true;
    if (!is_squarefree(f)) return false;
    return detail::factor_squarefree_monic(f.monic()).size() == 1;
}

std::optional<FieldElem> sqrt_elem(const FieldElem& e) {
    const FieldPtr& k = e.field();
    if (k->is_rational()) {
        auto r = rat_sqrt(e.rat_part());
        if (!r) return std::nullopt;
        return FieldElem(k, *r);
    }
    if (e.is_zero()) return FieldElem::zero(k);
    Poly f(k, std::vector<FieldElem>{-e, FieldElem::zero(k), FieldElem::one(k)});
    for (const Poly& p : detail::factor_squarefree_monic(f)) {
        if (p.deg() == 1) {
            FieldElem root = -p.coeff(0);
            for (const Rat& c : root.coords()) {
                if (sgn(c) == 0) continue;
                return sgn(c) > 0 ? root : -root;
            }
        }
    }
    return std::nullopt;
}

}  // namespace ktf
