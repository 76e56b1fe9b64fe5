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
#include "planeaut/endo.hpp"

namespace planeaut {

/// The diagonal family (t^alpha X, t^beta Y).
struct ScalingFamily {
    int alpha = 0;
    int beta = 0;

    FamilyEndo endo() const;
    ScalingFamily inverse() const { return {-alpha, -beta}; }
    PlaneEndo at(const Scalar& t0) const;
};

/// W_t∘g∘W_t⁻¹.
FamilyEndo family_conjugate(const ScalingFamily& w, const PlaneEndo& g);

/// phi_t∘f∘phi_t⁻¹ for a family that is a scaling (c1 t^i X, c2 t^j Y) or
/// constant in t; anything else throws NonInvertibleFamily.
FamilyEndo family_conjugate(const FamilyEndo& phi, const PlaneEndo& f);

/// Constant terms in t; throws NegativeOrder naming the first offending
/// monomial.
PlaneEndo limit_at_zero(const FamilyEndo& family);

/*
  Family t -> W_t∘C∘f∘C⁻¹∘W_t⁻¹ whose limit at t = 0 is semisimple with
  the Jacobian of f (and the trace when f is locally finite).
*/
struct DegenerationWitness {
    PlaneEndo source;
    Automorphism conjugator;  // C
    ScalingFamily scaling;    // W
    FamilyEndo family;
    PlaneEndo limit;
    std::optional<Scalar> source_trace;
    Scalar source_jac;
    std::optional<Scalar> limit_trace;
    Scalar limit_jac;
    bool limit_semisimple = false;
    bool limit_in_class = false;
};

/// Throws UnsupportedExtension when a fixed point of the reduced form needs
/// more than a quadratic extension.
DegenerationWitness closure_witness(const Automorphism& f);

/// The family at t0 against W_t0∘C∘f∘C⁻¹∘W_t0⁻¹ composed directly.
bool specialization_consistent(const DegenerationWitness& w, const Scalar& t0);

/// A fixed point of f, rational when one exists; throws
/// UnsupportedExtension if none lies in Q or a quadratic field.
Point find_fixed_point(const PlaneEndo& f);

}  // namespace planeaut
