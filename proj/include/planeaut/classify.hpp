/*
   Copyright 2026 The planeaut Authors

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
#include <string>
#include <utility>
#include <vector>

#include "planeaut/decomposition.hpp"
#include "planeaut/upoly.hpp"

namespace planeaut {

/// Unordered pair {a, b}, the roots of T^2 - trace*T + jac.
struct PseudoEigenPair {
    Scalar trace;
    Scalar jac;
    std::pair<Scalar, Scalar> roots;

    static PseudoEigenPair from_trace_jac(const Scalar& trace, const Scalar& jac);
    /// Equality as unordered pairs.
    bool same_pair(const PseudoEigenPair& o) const { return trace == o.trace && jac == o.jac; }
};

struct FixedLocus {
    enum class Kind { Empty, SimplePoint, Lines, FiniteScheme, WholePlane };

    Kind kind = Kind::Empty;
    Point point;      // SimplePoint
    int count = 0;    // Lines: number of components
    BiPoly equation;  // Lines: the locus is {equation = 0}
    int length = 0;   // FiniteScheme

    std::string kind_name() const;
};

struct Triangularization {
    Automorphism phi;
    TriangularMap t;
};

/// deg(f∘f) <= deg f.
bool is_lf(const Automorphism& f);
/// deg f^n <= deg f for n = 2..max_power, stopping at the first excess.
bool lf_by_iterates(const Automorphism& f, unsigned max_power = 4);
/// Cyclic reduction leaves at most one factor.
bool lf_by_reduction(const Automorphism& f);

/// f = phi∘t∘phi⁻¹; throws NotTriangularizable.
Triangularization triangularize(const Automorphism& f);

FixedLocus fixed_locus(const Automorphism& f);
PseudoEigenPair pseudo_eigenvalues(const Automorphism& f);
UniPoly minimal_polynomial(const Automorphism& f);
bool is_semisimple(const Automorphism& f);
bool is_unipotent(const Automorphism& f);
bool in_S(const Automorphism& f);

/// sum p_k f^k as a pair of polynomials (not a composition).
PlaneEndo evaluate_at(const UniPoly& p, const PlaneEndo& f);

/// prod (T - w) over the distinct w = a^k b^l, k + l <= m.
UniPoly omega_annihilator(const PseudoEigenPair& pair, int m);

/// Monomials X^k Y^l with d k + l <= s in monomial order, d = max(1, deg p).
std::vector<Monomial> pullback_basis(const TriangularMap& t, int s);
/// Diagonal of the (upper triangular) matrix of r -> r∘t on that basis.
std::vector<Scalar> pullback_spectrum(const TriangularMap& t, int s);

struct ClassificationReport {
    PlaneEndo input;
    int degree = 0;
    bool is_automorphism = true;
    bool is_lf = false;
    bool is_triangularizable = false;
    std::optional<PseudoEigenPair> pseudo;
    std::optional<UniPoly> minimal_polynomial;
    bool is_unipotent = false;
    bool is_semisimple = false;
    bool in_S = false;
    FixedLocus fixed_locus;
    Rational dynamical_degree{1};
    Scalar jacobian;
    bool conjugacy_class_closed = false;
};

/// Throws NotAnAutomorphism.
ClassificationReport full_report(const PlaneEndo& f);

/// Cross-checks used by --check: mu(f) = 0 and the pseudo-eigenvalues are
/// roots of mu.  Returns the failed checks.
std::vector<std::string> self_check(const ClassificationReport& r);

}  // namespace planeaut
