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

#include "ktforms/poly.hpp"

namespace ktf {

/// Unique factorization in k[t]: unit in k times monic irreducible powers.
struct Factorization {
    FieldElem unit;
    std::vector<std::pair<Poly, int>> factors;  // (monic irreducible, multiplicity)

    /// Number of distinct prime factors.
    int omega() const { return static_cast<int>(factors.size()); }
    Poly product() const;
};

/// Factors a nonzero polynomial over its coefficient field. Over Q this is
/// Zassenhaus lift-and-recombine; over Q(theta) Trager's norm reduction down
/// to Q. Throws std::invalid_argument on the zero polynomial.
Factorization poly_factor(const Poly& f);

bool is_irreducible(const Poly& f);
bool is_squarefree(const Poly& f);

/// Square root in the coefficient field, if e is a square there. The root's
/// sign is canonical: first nonzero power-basis coordinate positive.
std::optional<FieldElem> sqrt_elem(const FieldElem& e);
inline bool is_square_elem(const FieldElem& e) { return sqrt_elem(e).has_value(); }

namespace detail {
/// Factors a monic squarefree polynomial into monic irreducibles.
std::vector<Poly> factor_squarefree_monic(const Poly& f);
}  // namespace detail

}  // namespace ktf
