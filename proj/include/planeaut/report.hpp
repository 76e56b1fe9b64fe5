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

#include <json.hpp>
#include <string>

#include "planeaut/classify.hpp"

namespace planeaut {

inline constexpr const char* kToolVersion = "0.1.0";

/*
  JSON documents for the command line front end.  Keys are sorted (the
  default nlohmann object is a std::map), scalars are exact strings and maps
  are printed in the grammar accepted by parse_endo / parse_family.
  Transform documents set "verified" only after recomposing the witness.
*/
nlohmann::json scalar_json(const Scalar& s);
nlohmann::json classification_json(const ClassificationReport& r);

nlohmann::json classify_document(const PlaneEndo& f);
nlohmann::json diagonalize_document(const PlaneEndo& f);
nlohmann::json triangularize_document(const PlaneEndo& f);
nlohmann::json decompose_document(const PlaneEndo& f);
nlohmann::json invert_document(const PlaneEndo& f);
nlohmann::json degenerate_document(const PlaneEndo& f);
nlohmann::json conjugate_document(const PlaneEndo& f, const PlaneEndo& g);

/// One "key: value" line per top-level key, strings unquoted.
std::string render_text(const nlohmann::json& doc);

}  // namespace planeaut
