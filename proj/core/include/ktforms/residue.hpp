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
#include <optional>

#include "ktforms/poly.hpp"

namespace ktf {

class ResidueField;
using ResidueFieldPtr = std::shared_ptr<const ResidueField>;

/// F_p = k[t]/(p) for a monic irreducible p: a number field of degree
/// |p|*[k:Q] over Q. Elements are polynomials over k of degree < |p|.
class ResidueField : public std::enable_shared_from_this<ResidueField> {
   public:
    struct assume_irreducible_t {};
    static constexpr assume_irreducible_t assume_irreducible{};

    /// Verifies the modulus (monic, irreducible over k).
    static ResidueFieldPtr create(Poly modulus);
    /// Skips the irreducibility check; for callers holding factor output.
    static ResidueFieldPtr create(Poly modulus, assume_irreducible_t);

    const Poly& modulus() const { return modulus_; }
    const FieldPtr& base_field() const { return modulus_.field(); }
    int degree() const { return modulus_.deg(); }

    Poly reduce(const Poly& a) const { return a % modulus_; }
    Poly add(const Poly& a, const Poly& b) const { return reduce(a + b); }
    Poly sub(const Poly& a, const Poly& b) const { return reduce(a - b); }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(a * b); }
    /// Throws std::domain_error on zero (or, for an unchecked reducible
    /// modulus, on a zero divisor).
    Poly inverse(const Poly& a) const;
    Poly div(const Poly& a, const Poly& b) const { return mul(a, inverse(b)); }
    Poly pow(const Poly& a, long e) const;

   private:
    explicit ResidueField(Poly m) : modulus_(std::move(m)) {}
    Poly modulus_;
};

/// Square root of z in F_p, if it is a square there (Trager reduction to the
/// base field). z may be unreduced.
std::optional<Poly> residue_sqrt(const ResidueField& F, const Poly& z);

bool residue_is_square_elem(const ResidueField& F, const Poly& z);

/// The symbol (q/p): true iff p does not divide q and q is a square mod p.
/// Throws std::domain_error when p | q (symbol undefined). p must be a monic
/// irreducible.
bool residue_is_square(const Poly& q, const Poly& p);

/// N_{F_p/k}: resultant-based norm Res(p, e) (p monic); multiplicative.
FieldElem norm_to_k(const ResidueField& F, const Poly& e);

/// A class in F^./F^.2 where F is either a residue field F_p or, for the
/// place at infinity, the base field k itself. Two classes over the same
/// field compare equal iff their ratio is a square there.
class SquareClass {
   public:
    static SquareClass in_base(FieldElem rep);
    static SquareClass in_residue(ResidueFieldPtr F, Poly rep);

    bool over_base() const { return F_ == nullptr; }
    const ResidueFieldPtr& residue_field() const { return F_; }
    const Poly& rep() const { return rep_; }

    bool is_trivial() const;  // rep is a square
    SquareClass operator*(const SquareClass& o) const;
    bool operator==(const SquareClass& o) const;
    bool operator!=(const SquareClass& o) const { return !(*this == o); }

   private:
    SquareClass(ResidueFieldPtr F, Poly rep) : F_(std::move(F)), rep_(std::move(rep)) {}
    ResidueFieldPtr F_;  // null: class lives in the base field k
    Poly rep_;           // constant polynomial in the base-field case
};

}  // namespace ktf
