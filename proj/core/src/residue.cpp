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

#include "ktforms/residue.hpp"

#include <stdexcept>
#include <vector>

#include "ktforms/factor.hpp"

namespace ktf {

ResidueFieldPtr ResidueField::create(Poly modulus) {
    if (!modulus.is_monic()) throw std::invalid_argument("residue field modulus must be monic");
    if (!is_irreducible(modulus))
        throw std::invalid_argument("residue field modulus must be irreducible");
    return ResidueFieldPtr(new ResidueField(std::move(modulus)));
}

ResidueFieldPtr ResidueField::create(Poly modulus, assume_irreducible_t) {
    if (!modulus.is_monic()) throw std::invalid_argument("residue field modulus must be monic");
    return ResidueFieldPtr(new ResidueField(std::move(modulus)));
}

Poly ResidueField::inverse(const Poly& a) const {
    Poly r = reduce(a);
    if (r.is_zero()) throw std::domain_error("residue field: inverse of zero");
    XGcd x = gcdext(r, modulus_);
    if (x.g.deg() != 0)
        throw std::domain_error("residue field: zero divisor (modulus not irreducible?)");
    return reduce(x.u);  // gcd is monic 1, so u is the inverse
}

Poly ResidueField::pow(const Poly& a, long e) const {
    if (e < 0) return pow(inverse(a), -e);
    Poly acc = Poly::one(base_field());
    Poly base = reduce(a);
    for (unsigned long n = static_cast<unsigned long>(e); n; n >>= 1) {
        if (n & 1) acc = mul(acc, base);
        base = mul(base, base);
    }
    return acc;
}

namespace {

// Univariate polynomials over F_p, for the Trager gcd-back step. Coefficients
// are reduced polynomials over k; arithmetic goes through the residue field.
using RPoly = std::vector<Poly>;

int rdeg(const RPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!f[static_cast<size_t>(i)].is_zero()) return i;
    return -1;
}

void rtrim(RPoly& f) { f.resize(static_cast<size_t>(rdeg(f) + 1)); }

RPoly rmul(const ResidueField& F, const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1, Poly(F.base_field()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    rtrim(r);
    return r;
}

RPoly rmod(const ResidueField& F, RPoly a, const RPoly& b) {
    const int db = rdeg(b);
    const Poly ilb = F.inverse(b[static_cast<size_t>(db)]);
    while (rdeg(a) >= db) {
        int kk = rdeg(a) - db;
        Poly c = F.mul(a[static_cast<size_t>(rdeg(a))], ilb);
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(kk + j)] =
                F.sub(a[static_cast<size_t>(kk + j)], F.mul(c, b[static_cast<size_t>(j)]));
        rtrim(a);
    }
    return a;
}

RPoly rmonic(const ResidueField& F, RPoly f) {
    int d = rdeg(f);
    if (d < 0) return f;
    Poly il = F.inverse(f[static_cast<size_t>(d)]);
    for (auto& c : f) c = F.mul(c, il);
    return f;
}

RPoly rgcd(const ResidueField& F, RPoly a, RPoly b) {
    while (rdeg(b) >= 0) {
        RPoly r = rmod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rmonic(F, std::move(a));
}

}  // namespace

std::optional<Poly> residue_sqrt(const ResidueField& F, const Poly& zin) {
    const FieldPtr& k = F.base_field();
    Poly z = F.reduce(zin);
    if (z.is_zero()) return Poly(k);
    if (F.degree() == 1) {
        auto r = sqrt_elem(z.coeff(0));
        if (!r) return std::nullopt;
        return Poly::constant(*r);
    }
    // Constants that are already squares in k stay squares in F_p.
    if (z.is_constant()) {
        if (auto r = sqrt_elem(z.coeff(0))) return Poly::constant(*r);
    }

    // Trager on x^2 - z: the norm is Res_t(p(t), (x - s t)^2 - z(t)), computed
    // by evaluation and interpolation over k, then factored over k.
    const Poly& p = F.modulus();
    const int nd = 2 * F.degree();
    for (int trial = 0;; ++trial) {
        long s = (trial + 1) / 2 * (trial % 2 ? 1 : -1);  // 0, 1, -1, 2, ...
        std::vector<Rat> xs;
        std::vector<FieldElem> ys;
        const Poly st = Poly::t(k) * FieldElem(k, Rat(s));
        for (long i = 0; static_cast<int>(xs.size()) <= nd; ++i) {
            long x0 = (i + 1) / 2 * (i % 2 ? 1 : -1);
            Poly w = Poly(k, Rat(x0)) - st;
            w = w * w - z;
            xs.emplace_back(x0);
            ys.push_back(resultant(p, w));
        }
        Poly norm = interpolate(k, xs, ys);
        if (norm.deg() != nd) throw std::logic_error("residue_sqrt: norm degree mismatch");
        if (!is_squarefree(norm)) continue;

        auto parts = poly_factor(norm.monic());
        // gcd back: candidate factors of x^2 - z over F_p come from
        // N_i(x + s*alpha), alpha the class of t.
        const Poly alpha = F.reduce(Poly::t(k));
        const Poly s_alpha = F.reduce(alpha * FieldElem(k, Rat(s)));
        RPoly f2{F.sub(Poly(k), z), Poly(k), Poly::one(k)};  // x^2 - z
        for (const auto& [ni, mult] : parts.factors) {
            (void)mult;
            // n_i(x + s*alpha) via Horner over F_p[x]
            RPoly shifted{Poly(k)};
            RPoly lin{s_alpha, Poly::one(k)};
            for (int i = ni.deg(); i >= 0; --i) {
                shifted = rmul(F, shifted, lin);
                if (shifted.empty()) shifted.assign(1, Poly(k));
                shifted[0] = F.add(shifted[0], Poly::constant(ni.coeff(i)));
                rtrim(shifted);
            }
            RPoly g = rgcd(F, f2, shifted);
            if (rdeg(g) == 1) {
                Poly root = F.sub(Poly(k), g[0]);  // monic x + c -> root -c
                if (F.mul(root, root) != z) continue;
                return root;
            }
        }
        return std::nullopt;
    }
}

bool residue_is_square_elem(const ResidueField& F, const Poly& z) {
    return residue_sqrt(F, z).has_value();
}

bool residue_is_square(const Poly& q, const Poly& p) {
    auto F = ResidueField::create(p, ResidueField::assume_irreducible);
    Poly z = F->reduce(q);
    if (z.is_zero()) throw std::domain_error("symbol (q/p) undefined: p divides q");
    return residue_is_square_elem(*F, z);
}

FieldElem norm_to_k(const ResidueField& F, const Poly& e) {
    Poly z = F.reduce(e);
    if (z.is_zero()) throw std::invalid_argument("norm of zero");
    return resultant(F.modulus(), z);
}

SquareClass SquareClass::in_base(FieldElem rep) {
    if (rep.is_zero()) throw std::invalid_argument("square class of zero");
    return SquareClass(nullptr, Poly::constant(std::move(rep)));
}

SquareClass SquareClass::in_residue(ResidueFieldPtr F, Poly rep) {
    Poly r = F->reduce(rep);
    if (r.is_zero()) throw std::invalid_argument("square class of zero");
    return SquareClass(std::move(F), std::move(r));
}

bool SquareClass::is_trivial() const {
    if (over_base()) return is_square_elem(rep_.coeff(0));
    return residue_is_square_elem(*F_, rep_);
}

SquareClass SquareClass::operator*(const SquareClass& o) const {
    if (over_base() != o.over_base())
        throw std::invalid_argument("square classes live over different fields");
    if (over_base()) return SquareClass(nullptr, Poly::constant(rep_.coeff(0) * o.rep_.coeff(0)));
    if (F_->modulus() != o.F_->modulus())
        throw std::invalid_argument("square classes live over different residue fields");
    return SquareClass(F_, F_->mul(rep_, o.rep_));
}

bool SquareClass::operator==(const SquareClass& o) const { return (*this * o).is_trivial(); }

}  // namespace ktf
