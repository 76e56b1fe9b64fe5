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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "planeaut/decomposition.hpp"

namespace planeaut {

/// target = sum multipliers[i] * generators[i], every multiplier of degree <= bound.
struct MembershipCertificate {
    BiPoly target;
    std::vector<BiPoly> generators;
    std::vector<BiPoly> multipliers;
    Integer bound;

    /// Largest multiplier degree (0 when all vanish).
    int multiplier_degree() const;
    /// Re-expands the combination and checks the degree bound.
    bool verify() const;
};

/// d + (s d)^(2^n).
Integer hermann_bound(unsigned n, unsigned d, unsigned s);

/// Unknown-count cap: PLANEAUT_MAX_UNKNOWNS, default 10^4.
std::size_t max_unknowns();

/*
  Searches multiplier degrees 0, 1, ... up to bound for an exact
  certificate.  nullopt when p is not in the ideal or no certificate of
  degree <= bound exists.  Throws BoundTooLarge when a linear system would
  exceed the unknown cap.
*/
std::optional<MembershipCertificate> ideal_membership_bounded(const BiPoly& p, const std::vector<BiPoly>& gens,
                                                              const Integer& bound);
std::optional<MembershipCertificate> ideal_membership_bounded(const BiPoly& p, const std::vector<BiPoly>& gens,
                                                              const Integer& bound, std::size_t unknown_cap);

struct FixedPointCertificates {
    Point point;
    MembershipCertificate x_minus_alpha;
    MembershipCertificate y_minus_beta;
};

/// Certificates for X - alpha and Y - beta over (f1 - X, f2 - Y) with the
/// bound K_m = hermann_bound(2, m, 2), m = deg f.  Throws NotInS.
FixedPointCertificates express_fixed_point(const Automorphism& f);

}  // namespace planeaut
