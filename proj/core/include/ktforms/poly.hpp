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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ktforms/numberfield.hpp"

namespace ktf {

/// Dense univariate polynomial over a number field k, in canonical form
/// (no trailing zero coefficients). The zero polynomial has degree -1,
/// so deg(a) < 0 is equivalent to a = 0.
class Poly {
   public:
    Poly() = default;
    explicit Poly(FieldPtr k) : field_(std::move(k)) {}
    Poly(FieldPtr k, std::vector<FieldElem> coeffs);
    Poly(FieldPtr k, const Rat& c);

    static Poly zero(const FieldPtr& k) { return Poly(k); }
    static Poly one(const FieldPtr& k) { return Poly(k, Rat(1)); }
    static Poly t(const FieldPtr& k);
    static Poly constant(FieldElem c);
    /// c * t^n
    static Poly monomial(FieldElem c, int n);
    static Poly from_rats(const FieldPtr& k, const std::vector<Rat>& coeffs);

    const FieldPtr& field() const { return field_; }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const;
    bool is_constant() const { return deg() <= 0; }
    bool is_monic() const;

    /// Coefficient of t^i (zero beyond the degree).
    FieldElem coeff(int i) const;
    const std::vector<FieldElem>& coeffs() const { return c_; }
    FieldElem lc() const;  // leading coefficient; throws on zero poly

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FieldElem& s) const;
    Poly operator/(const Poly& o) const;  // euclidean quotient
    Poly operator%(const Poly& o) const;  // euclidean remainder
    friend std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
    /// Division known to be exact; throws std::logic_error on a remainder.
    friend Poly exact_div(const Poly& a, const Poly& b);

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly monic() const;
    Poly derivative() const;
    FieldElem eval(const FieldElem& x) const;
    FieldElem eval(const Rat& x) const;
    /// f(c * t) for a scalar c.
    Poly scale_t(const FieldElem& c) const;
    /// f(t + c) for a scalar c.
    Poly shift_t(const FieldElem& c) const;
    Poly pow(int e) const;

    Int height() const;  // max coefficient height

   private:
    void normalize();
    FieldPtr field_;
    std::vector<FieldElem> c_;
};

inline Poly operator*(const FieldElem& s, const Poly& p) { return p * s; }

Poly gcd(const Poly& a, const Poly& b);  // monic, or zero when both zero
/// g = gcd(a,b) monic with g = u*a + v*b.
struct XGcd {
    Poly g, u, v;
};
XGcd gcdext(const Poly& a, const Poly& b);

FieldElem resultant(const Poly& a, const Poly& b);

/// Lagrange interpolation through distinct rational nodes.
Poly interpolate(const FieldPtr& k, const std::vector<Rat>& xs, const std::vector<FieldElem>& ys);

/// p* = (-1)^deg(p) * p.
Poly star(const Poly& p);

/// Positivity: the leading coefficient of p* is a square in k.
/// Throws std::invalid_argument on the zero polynomial.
bool is_positive(const Poly& p);

/// Exact polynomial square root, if f is the square of a polynomial.
std::optional<Poly> poly_sqrt(const Poly& f);

/// Deterministic total order (degree, then coefficients); for containers.
bool poly_less(const Poly& a, const Poly& b);

}  // namespace ktf
