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
#include <vector>

#include "planeaut/bipoly.hpp"
#include "planeaut/linalg.hpp"

namespace planeaut {

/// Leading monomial under grlex; the polynomial must be nonzero.
Monomial grlex_leading(const BiPoly& p);

/// Reduced Groebner basis (grlex, monic elements).
std::vector<BiPoly> groebner_basis(std::vector<BiPoly> gens);

/// Remainder of p modulo a Groebner basis.
BiPoly normal_form(const BiPoly& p, const std::vector<BiPoly>& basis);

/// Monomials outside the leading-term ideal, ascending in grlex; nullopt
/// when the quotient is infinite dimensional.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<BiPoly>& basis);

/// dim K[X,Y]/(gens), nullopt when infinite.
std::optional<std::size_t> quotient_dimension(const std::vector<BiPoly>& gens);

/// Matrix of multiplication by X (var = 0) or Y (var = 1) on the standard
/// monomial basis; column j holds the coordinates of var * basis[j].
Matrix multiplication_matrix(const std::vector<BiPoly>& basis, const std::vector<Monomial>& standard, int var);

}  // namespace planeaut
