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

#include "planeaut/classify.hpp"

namespace planeaut {

/// f = psi∘(aX, bY)∘psi⁻¹.
struct DiagonalForm {
    Scalar a;
    Scalar b;
    Automorphism psi;

    PlaneEndo diagonal() const { return {BiPoly::monomial(a, 1, 0), BiPoly::monomial(b, 0, 1)}; }
};

/// Throws NotSemisimple on a resonance or when b = 1 and c != 0.
DiagonalForm diagonalize_triangular(const TriangularMap& t);

/// Rational diagonal entries come out with a <= b.  Throws NotSemisimple.
DiagonalForm diagonalize(const Automorphism& f);

/// psi with f = psi∘g∘psi⁻¹ when the pseudo-eigenvalue pairs agree,
/// nullopt otherwise.  Throws NotSemisimple for either input.
std::optional<Automorphism> conjugacy_test_semisimple(const Automorphism& f, const Automorphism& g);

/// psi∘g∘psi⁻¹ == f, by composition.
bool conjugates(const Automorphism& psi, const PlaneEndo& g, const PlaneEndo& f);

}  // namespace planeaut
