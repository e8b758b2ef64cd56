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

#include <gmpxx.h>

#include <optional>
#include <string>

namespace ktf {

// All coefficient arithmetic in the library is exact: arbitrary-precision
// rationals everywhere, no floating point.
using Int = mpz_class;
using Rat = mpq_class;

/// Exact square root in Q, or nothing if r is not a square.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (sgn(r) == 0) return Rat(0);
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    return Rat(sn, sd);
}

inline bool rat_is_square(const Rat& r) { return rat_sqrt(r).has_value(); }

/// Height of a rational: max(|numerator|, |denominator|).
inline Int rat_height(const Rat& r) {
    Int n = abs(r.get_num());
    const Int& d = r.get_den();
    return n > d ? n : d;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

}  // namespace ktf
