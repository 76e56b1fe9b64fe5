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
#include <string_view>

#include "planeaut/endo.hpp"

namespace planeaut {

/*
  Reads "(f1, f2)".  Accepted syntax is a superset of the canonical printer
  output: explicit '*' and '^', integer and n/d coefficients, quadratic
  coefficients "[a, b, D]", parenthesised sub-expressions, and implicit
  multiplication directly after a numeric coefficient ("2X").  Variables
  must be X or Y.  Errors are ParseError with the byte offset.
*/
PlaneEndo parse_endo(std::string_view text);

/// As parse_endo, additionally allowing the parameter t with integer
/// (possibly negative) exponents.
FamilyEndo parse_family(std::string_view text);

BiPoly parse_poly(std::string_view text);

inline std::string format_endo(const PlaneEndo& f) { return f.str(); }
inline std::string format_family(const FamilyEndo& f) { return f.str(); }

}  // namespace planeaut
