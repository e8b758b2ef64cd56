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

#include "ktforms/poly.hpp"

#include <stdexcept>

namespace ktf {

Poly::Poly(FieldPtr k, std::vector<FieldElem> coeffs) : field_(std::move(k)), c_(std::move(coeffs)) {
    normalize();
}

Poly::Poly(FieldPtr k, const Rat& c) : field_(std::move(k)) {
    c_.push_back(FieldElem(field_, c));
    normalize();
}

Poly Poly::t(const FieldPtr& k) {
    return Poly(k, std::vector<FieldElem>{FieldElem::zero(k), FieldElem::one(k)});
}

Poly Poly::constant(FieldElem c) {
    FieldPtr k = c.field();
    return Poly(k, std::vector<FieldElem>{std::move(c)});
}

Poly Poly::monomial(FieldElem c, int n) {
    FieldPtr k = c.field();
    std::vector<FieldElem> cs(static_cast<size_t>(n) + 1, FieldElem::zero(k));
    cs.back() = std::move(c);
    return Poly(k, std::move(cs));
}

Poly Poly::from_rats(const FieldPtr& k, const std::vector<Rat>& coeffs) {
    std::vector<FieldElem> cs;
    cs.reserve(coeffs.size());
    for (const Rat& r : coeffs) cs.emplace_back(k, r);
    return Poly(k, std::move(cs));
}

void Poly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

bool Poly::is_one() const { return deg() == 0 && c_[0] == FieldElem::one(field_); }

bool Poly::is_monic() const { return !is_zero() && c_.back() == FieldElem::one(field_); }

FieldElem Poly::coeff(int i) const {
    if (i < 0 || i > deg()) return FieldElem::zero(field_);
    return c_[static_cast<size_t>(i)];
}

FieldElem Poly::lc() const {
    if (is_zero()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), FieldElem::zero(field_));
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
    r.normalize();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    if (r.c_.size() < o.c_.size()) r.c_.resize(o.c_.size(), FieldElem::zero(field_));
    for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] -= o.c_[i];
    r.normalize();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<FieldElem> r(c_.size() + o.c_.size() - 1, FieldElem::zero(field_));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const FieldElem& s) const {
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    r.normalize();
    return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    Poly q(a.field_), r = a;
    const int db = b.deg();
    const FieldElem inv_lc = b.lc().inverse();
    if (r.deg() >= db) q.c_.assign(static_cast<size_t>(r.deg() - db) + 1, FieldElem::zero(a.field_));
    while (r.deg() >= db) {
        int k = r.deg() - db;
        FieldElem c = r.c_.back() * inv_lc;
        q.c_[static_cast<size_t>(k)] = c;
        for (int j = 0; j <= db; ++j)
            r.c_[static_cast<size_t>(k + j)] -= c * b.c_[static_cast<size_t>(j)];
        r.normalize();
    }
    q.normalize();
    return {std::move(q), std::move(r)};
}

Poly Poly::operator/(const Poly& o) const { return divrem(*this, o).first; }
Poly Poly::operator%(const Poly& o) const { return divrem(*this, o).second; }

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) throw std::logic_error("division expected to be exact has a remainder");
    return q;
}

bool Poly::operator==(const Poly& o) const { return c_ == o.c_; }

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

Poly Poly::derivative() const {
    if (deg() < 1) return Poly(field_);
    std::vector<FieldElem> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r.push_back(Rat(static_cast<long>(i)) * c_[i]);
    return Poly(field_, std::move(r));
}

FieldElem Poly::eval(const FieldElem& x) const {
    FieldElem v = FieldElem::zero(field_);
    for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
    return v;
}

FieldElem Poly::eval(const Rat& x) const { return eval(FieldElem(field_, x)); }

Poly Poly::scale_t(const FieldElem& c) const {
    Poly r = *this;
    FieldElem p = FieldElem::one(field_);
    for (size_t i = 1; i < r.c_.size(); ++i) {
        p *= c;
        r.c_[i] *= p;
    }
    r.normalize();
    return r;
}

Poly Poly::shift_t(const FieldElem& c) const {
    // Horner: f(t+c) built from the top coefficient down.
    Poly r(field_);
    Poly lin(field_, std::vector<FieldElem>{c, FieldElem::one(field_)});
    for (size_t i = c_.size(); i-- > 0;) r = r * lin + Poly::constant(c_[i]);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative polynomial power");
    Poly acc = Poly::one(field_);
    Poly base = *this;
    for (unsigned n = static_cast<unsigned>(e); n; n >>= 1) {
        if (n & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

Int Poly::height() const {
    Int h = 0;
    for (const auto& c : c_) {
        Int hc = c.height();
        if (hc > h) h = hc;
    }
    return h;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XGcd gcdext(const Poly& a, const Poly& b) {
    const FieldPtr& k = a.field();
    Poly r0 = a, r1 = b;
    Poly u0 = Poly::one(k), u1 = Poly::zero(k);
    Poly v0 = Poly::zero(k), v1 = Poly::one(k);
    while (!r1.is_zero()) {
        auto [q, r2] = divrem(r0, r1);
        Poly u2 = u0 - q * u1;
        Poly v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    FieldElem s = r0.lc().inverse();
    return {r0 * s, u0 * s, v0 * s};
}

FieldElem resultant(const Poly& a, const Poly& b) {
    const FieldPtr& k = a.field();
    if (a.is_zero() || b.is_zero()) return FieldElem::zero(k);
    Poly x = a, y = b;
    FieldElem res = FieldElem::one(k);
    bool swapped = (x.deg() < y.deg());
    if (swapped && (x.deg() % 2) && (y.deg() % 2)) res = -res;
    if (swapped) std::swap(x, y);
    while (y.deg() > 0) {
        Poly r = x % y;
        if (r.is_zero()) return FieldElem::zero(k);
        res *= y.lc().pow(x.deg() - r.deg());
        if ((x.deg() % 2) && (y.deg() % 2)) res = -res;
        x = std::move(y);
        y = std::move(r);
    }
    // y is a nonzero constant now
    res *= y.lc().pow(x.deg());
    return res;
}

Poly interpolate(const FieldPtr& k, const std::vector<Rat>& xs, const std::vector<FieldElem>& ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolation node/value mismatch");
    // Newton form, then expand.
    const size_t n = xs.size();
    std::vector<FieldElem> coef;
    coef.reserve(n);
    std::vector<FieldElem> col(ys);
    coef.push_back(col[0]);
    for (size_t j = 1; j < n; ++j) {
        for (size_t i = 0; i + j < n; ++i) {
            FieldElem den(k, Rat(xs[i + j] - xs[i]));
            col[i] = (col[i + 1] - col[i]) / den;
        }
        col.pop_back();
        coef.push_back(col[0]);
    }
    Poly r(k);
    for (size_t i = n; i-- > 0;) {
        Poly lin(k, std::vector<FieldElem>{FieldElem(k, -xs[i]), FieldElem::one(k)});
        r = r * lin + Poly::constant(coef[i]);
    }
    return r;
}

Poly star(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("star of zero polynomial");
    return (p.deg() % 2) ? -p : p;
}

bool is_positive(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("positivity of zero polynomial");
    FieldElem l = star(p).lc();
    if (p.field()->is_rational()) return rat_is_square(l.rat_part());
    return is_square_elem(l);
}

std::optional<Poly> poly_sqrt(const Poly& f) {
    const FieldPtr& k = f.field();
    if (f.is_zero()) return Poly(k);
    if (f.deg() % 2) return std::nullopt;
    FieldElem l = f.lc();
    std::optional<FieldElem> sl = sqrt_elem(l);
    if (!sl) return std::nullopt;
    const int m = f.deg() / 2;
    std::vector<FieldElem> s(static_cast<size_t>(m) + 1, FieldElem::zero(k));
    s[static_cast<size_t>(m)] = *sl;
    FieldElem two_lead = Rat(2) * (*sl);
    // The t^(m+i) coefficient of s^2 is 2*s_m*s_i plus terms in s_{i+1..m-1},
    // so the coefficients come out one at a time from the top.
    for (int i = m - 1; i >= 0; --i) {
        FieldElem acc = FieldElem::zero(k);
        for (int j = i + 1; j <= m - 1; ++j)
            acc += s[static_cast<size_t>(j)] * s[static_cast<size_t>(m + i - j)];
        s[static_cast<size_t>(i)] = (f.coeff(m + i) - acc) / two_lead;
    }
    Poly root(k, std::move(s));
    if (root * root == f) return root;
    return std::nullopt;
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg();
    for (int i = a.deg(); i >= 0; --i) {
        const auto& ca = a.coeff(i);
        const auto& cb = b.coeff(i);
        if (ca != cb) return elem_less(ca, cb);
    }
    return false;
}

}  // namespace ktf
