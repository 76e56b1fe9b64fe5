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

#include <string>
#include <vector>

#include "planeaut/decomposition.hpp"
#include "planeaut/parse.hpp"

namespace planeaut::testing {

inline PlaneEndo endo(const std::string& s) { return parse_endo(s); }
inline BiPoly poly(const std::string& s) { return parse_poly(s); }
inline Automorphism aut(const std::string& s) { return Automorphism::from_endo(parse_endo(s)); }
inline Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }

/// prod (T - r).
inline UniPoly roots_poly(const std::vector<Scalar>& roots) { return UniPoly::from_roots(roots); }

}  // namespace planeaut::testing
