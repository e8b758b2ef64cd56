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

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ktforms/poly.hpp"

namespace ktf {

/// Binary quadratic form a x^2 + 2 b x y + c y^2 over k[t], with Gaussian
/// discriminant D = b^2 - ac. Forms are primitive automatically when D is
/// square-free.
class QuadForm {
   public:
    QuadForm(Poly a, Poly b, Poly c);

    const Poly& a() const { return a_; }
    const Poly& b() const { return b_; }
    const Poly& c() const { return c_; }
    const Poly& disc() const { return disc_; }
    const FieldPtr& field() const { return a_.field(); }

    /// Value a x^2 + 2 b x y + c y^2 at polynomial arguments.
    Poly operator()(const Poly& x, const Poly& y) const;

    QuadForm inverse_form() const { return QuadForm(a_, -b_, c_); }
    bool operator==(const QuadForm& o) const { return a_ == o.a_ && b_ == o.b_ && c_ == o.c_; }
    bool operator!=(const QuadForm& o) const { return !(*this == o); }

    /// Membership in Q_D: D negative square-free of odd degree and a positive.
    /// (Square-freeness is the caller's invariant; this checks the rest.)
    bool in_canonical_set() const;

    /// Reduced per the normal form: |b| < |a| < |D|/2 with a* monic.
    bool is_reduced() const;

   private:
    Poly a_, b_, c_, disc_;
};

/// Element of SL_2(k[t]), entries (m r / n s) with m s - n r = 1.
class UnimodularMatrix {
   public:
    UnimodularMatrix(Poly m, Poly r, Poly n, Poly s);

    static UnimodularMatrix identity(const FieldPtr& k);
    /// Generators: diag(alpha, alpha^-1), translation by n, and the flip S.
    static UnimodularMatrix c_alpha(const FieldElem& alpha);
    static UnimodularMatrix t_n(const Poly& n);
    static UnimodularMatrix s(const FieldPtr& k);

    const Poly& m() const { return m_; }
    const Poly& r() const { return r_; }
    const Poly& n() const { return n_; }
    const Poly& s() const { return s_; }

    UnimodularMatrix operator*(const UnimodularMatrix& o) const;

   private:
    Poly m_, r_, n_, s_;
};

/// Q|M = M Q M^t; preserves the discriminant and membership in Q_D.
QuadForm apply_matrix(const QuadForm& q, const UnimodularMatrix& m);

/// Gauss-style reduction to the unique representative of the class of q,
/// together with the transforming matrix: apply_matrix(q, M) == reduced.
std::pair<QuadForm, UnimodularMatrix> reduce(const QuadForm& q);

/// Composition of classes (Dirichlet composition on concordant
/// representatives, concordance arranged deterministically); the result is
/// the reduced representative. Throws on mismatched discriminants.
QuadForm compose(const QuadForm& q1, const QuadForm& q2);

QuadForm principal_form(const Poly& disc);

/// q^n in the class group (n may be negative); reduced representative.
QuadForm power(const QuadForm& q, long n);

/// All reduced ambiguous forms (a, 0, c) for the discriminant D; exactly
/// 2^(omega(D)-1) of them, exhausting the classes of order at most 2.
std::vector<QuadForm> ambiguous_classes(const Poly& disc);

/// Smallest n <= cap with q^n principal, or nullopt ("exceeds cap").
std::optional<int> class_order(const QuadForm& q, int cap = 64);

struct PrimeRepresentation {
    Poly prime;      // monic irreducible properly represented up to a square unit
    FieldElem at_x;  // the specialization point: prime ~ (-1)^|c| q(x, 1)
};

/// Searches specializations q(x,1) for x in k (small heights first, then
/// seeded random) until (-1)^|c| q(x,1) is irreducible and distinct from
/// +-disc; nullopt when attempts are exhausted.
std::optional<PrimeRepresentation> represent_prime(const QuadForm& q, int attempts = 200,
                                                   uint64_t seed = 1);

/// Finds a form equivalent to q whose leading coefficient is coprime to f
/// (explicit coprime-representation construction).
QuadForm represent_coprime(const QuadForm& q, const Poly& f);

}  // namespace ktf
