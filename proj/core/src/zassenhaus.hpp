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

#include <vector>

#include "ktforms/rational.hpp"

namespace ktf::detail {

// Dense integer polynomials, low-to-high, no trailing zeros.
using ZPoly = std::vector<Int>;

int zdeg(const ZPoly& f);

/// Factors a primitive squarefree integer polynomial of degree >= 1 into
/// primitive irreducible factors with positive leading coefficients
/// (classic Zassenhaus: factor mod p, Hensel lift, subset recombination).
std::vector<ZPoly> zassenhaus_squarefree(const ZPoly& f);

}  // namespace ktf::detail
