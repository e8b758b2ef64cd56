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

#include <memory>
#include <vector>

#include "ktforms/rational.hpp"

namespace ktf {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// A simple number field k = Q(theta), defined by the monic irreducible
/// minimal polynomial of theta over Q. Degree 1 (min_poly = x) is Q itself.
/// Elements are power-basis coordinate vectors of rationals.
class NumberField : public std::enable_shared_from_this<NumberField> {
   public:
    /// Builds Q(theta) for a monic irreducible min_poly (coefficients low to
    /// high, min_poly.back() == 1). Throws std::invalid_argument when the
    /// polynomial is not monic or not irreducible over Q.
    static FieldPtr create(std::vector<Rat> min_poly);

    /// The rationals, as the degree-1 field with min_poly x.
    static const FieldPtr& rationals();

    int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
    const std::vector<Rat>& min_poly() const { return min_poly_; }
    bool is_rational() const { return degree() == 1; }

    friend bool same_field(const NumberField& a, const NumberField& b) {
        return &a == &b || a.min_poly_ == b.min_poly_;
    }

   private:
    explicit NumberField(std::vector<Rat> mp) : min_poly_(std::move(mp)) {}
    std::vector<Rat> min_poly_;
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return same_field(*a, *b);
}

/// Element of a number field in power-basis coordinates. Immutable value
/// semantics; all arithmetic exact and closed.
class FieldElem {
   public:
    FieldElem() = default;
    FieldElem(FieldPtr field, std::vector<Rat> coords);
    FieldElem(FieldPtr field, const Rat& r);

    static FieldElem zero(const FieldPtr& k) { return FieldElem(k, Rat(0)); }
    static FieldElem one(const FieldPtr& k) { return FieldElem(k, Rat(1)); }
    /// theta itself (for degree-1 fields this is 0).
    static FieldElem generator(const FieldPtr& k);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;  // all coords above degree 0 vanish
    /// The degree-0 coordinate; exact value when is_rational().
    const Rat& rat_part() const { return coords_[0]; }

    FieldElem operator-() const;
    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;  // throws on division by zero
    FieldElem inverse() const;
    FieldElem pow(long e) const;  // negative exponents invert

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }

    /// Coordinate height: max over coordinates of rat_height.
    Int height() const;

   private:
    FieldPtr field_;
    std::vector<Rat> coords_;
};

FieldElem operator*(const Rat& r, const FieldElem& e);

/// Total order on elements of one field (degree, then coordinates); used for
/// deterministic container ordering, no arithmetic meaning.
bool elem_less(const FieldElem& a, const FieldElem& b);

}  // namespace ktf
