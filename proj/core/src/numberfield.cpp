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

#include "ktforms/numberfield.hpp"

#include <stdexcept>

#include "ktforms/factor.hpp"
#include "ktforms/poly.hpp"

namespace ktf {

namespace {

// Dense rational polynomials on raw vectors, just enough for power-basis
// arithmetic mod the minimal polynomial. Low-to-high coefficients.
using QP = std::vector<Rat>;

int qdeg(const QP& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (sgn(f[i]) != 0) return i;
    return -1;
}

void qtrim(QP& f) { f.resize(static_cast<size_t>(qdeg(f) + 1)); }

QP qmul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qtrim(r);
    return r;
}

// Remainder of a by monic b.
QP qrem_monic(QP a, const QP& b) {
    int db = qdeg(b);
    for (int i = qdeg(a); i >= db; --i) {
        Rat q = a[static_cast<size_t>(i)];
        if (sgn(q) == 0) continue;
        for (int j = 0; j <= db; ++j) a[static_cast<size_t>(i - db + j)] -= q * b[static_cast<size_t>(j)];
    }
    qtrim(a);
    return a;
}

// Extended gcd against a monic modulus: returns u with u*a == 1 (mod m).
// Throws when a is not invertible (only possible for reducible m).
QP qinvmod(const QP& a, const QP& m) {
    QP r0 = m, r1 = qrem_monic(a, m);
    QP u0 = {}, u1 = {Rat(1)};
    while (qdeg(r1) >= 0) {
        // r0 = q*r1 + r2
        QP q;
        QP r2 = r0;
        int d1 = qdeg(r1);
        Rat lc1 = r1[static_cast<size_t>(d1)];
        while (qdeg(r2) >= d1) {
            int k = qdeg(r2) - d1;
            Rat c = r2[static_cast<size_t>(qdeg(r2))] / lc1;
            if (static_cast<int>(q.size()) <= k) q.resize(static_cast<size_t>(k + 1), Rat(0));
            q[static_cast<size_t>(k)] += c;
            for (int j = 0; j <= d1; ++j) r2[static_cast<size_t>(k + j)] -= c * r1[static_cast<size_t>(j)];
            qtrim(r2);
        }
        QP u2 = u0;
        {
            QP qu1 = qmul(q, u1);
            if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rat(0));
            for (size_t i = 0; i < qu1.size(); ++i) u2[i] -= qu1[i];
            qtrim(u2);
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (qdeg(r0) != 0) throw std::domain_error("element not invertible modulo reducible polynomial");
    Rat inv = 1 / r0[0];
    for (auto& c : u0) c *= inv;
    qtrim(u0);
    return qrem_monic(u0, m);
}

}  // namespace

FieldPtr NumberField::create(std::vector<Rat> min_poly) {
    while (!min_poly.empty() && sgn(min_poly.back()) == 0) min_poly.pop_back();
    if (min_poly.size() < 2) throw std::invalid_argument("min_poly must have degree >= 1");
    if (min_poly.back() != 1) throw std::invalid_argument("min_poly must be monic");
    FieldPtr field(new NumberField(std::move(min_poly)));
    if (field->degree() > 1) {
        Poly mp(NumberField::rationals());
        std::vector<FieldElem> cs;
        for (const Rat& c : field->min_poly()) cs.emplace_back(NumberField::rationals(), c);
        mp = Poly(NumberField::rationals(), std::move(cs));
        if (!is_irreducible(mp)) throw std::invalid_argument("min_poly is not irreducible over Q");
    }
    return field;
}

const FieldPtr& NumberField::rationals() {
    static const FieldPtr q(new NumberField(std::vector<Rat>{Rat(0), Rat(1)}));
    return q;
}

FieldElem::FieldElem(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)) {
    const size_t d = static_cast<size_t>(field_->degree());
    if (coords.size() > d) {
        coords = qrem_monic(coords, field_->min_poly());
    }
    coords.resize(d, Rat(0));
    coords_ = std::move(coords);
}

FieldElem::FieldElem(FieldPtr field, const Rat& r) : field_(std::move(field)) {
    coords_.assign(static_cast<size_t>(field_->degree()), Rat(0));
    coords_[0] = r;
}

FieldElem FieldElem::generator(const FieldPtr& k) {
    std::vector<Rat> c(static_cast<size_t>(k->degree()), Rat(0));
    if (k->degree() == 1) return FieldElem(k, std::move(c));  // theta = 0 in Q
    c[1] = 1;
    return FieldElem(k, std::move(c));
}

bool FieldElem::is_zero() const {
    for (const Rat& c : coords_)
        if (sgn(c) != 0) return false;
    return true;
}

bool FieldElem::is_rational() const {
    for (size_t i = 1; i < coords_.size(); ++i)
        if (sgn(coords_[i]) != 0) return false;
    return true;
}

FieldElem FieldElem::operator-() const {
    FieldElem r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    FieldElem r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] += o.coords_[i];
    return r;
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    FieldElem r = *this;
    for (size_t i = 0; i < coords_.size(); ++i) r.coords_[i] -= o.coords_[i];
    return r;
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    QP prod = qmul(coords_, o.coords_);
    prod = qrem_monic(std::move(prod), field_->min_poly());
    return FieldElem(field_, std::move(prod));
}

FieldElem FieldElem::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in number field");
    if (field_->degree() == 1) return FieldElem(field_, 1 / coords_[0]);
    return FieldElem(field_, qinvmod(coords_, field_->min_poly()));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inverse(); }

FieldElem FieldElem::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    FieldElem acc = FieldElem::one(field_);
    FieldElem base = *this;
    for (unsigned long n = static_cast<unsigned long>(e); n; n >>= 1) {
        if (n & 1) acc = acc * base;
        base = base * base;
    }
    return acc;
}

bool FieldElem::operator==(const FieldElem& o) const { return coords_ == o.coords_; }

Int FieldElem::height() const {
    Int h = 0;
    for (const Rat& c : coords_) {
        Int hc = rat_height(c);
        if (hc > h) h = hc;
    }
    return h;
}

FieldElem operator*(const Rat& r, const FieldElem& e) {
    std::vector<Rat> c = e.coords();
    for (auto& x : c) x *= r;
    return FieldElem(e.field(), std::move(c));
}

bool elem_less(const FieldElem& a, const FieldElem& b) {
    for (size_t i = 0; i < a.coords().size(); ++i) {
        int c = cmp(a.coords()[i], b.coords()[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

}  // namespace ktf
