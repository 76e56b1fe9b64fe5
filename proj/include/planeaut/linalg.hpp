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
#include <vector>

#include "planeaut/scalar.hpp"
#include "planeaut/upoly.hpp"

namespace planeaut {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;  // row major

std::size_t rank(Matrix a);

/// Some solution of a x = b (free variables set to zero), or nullopt.
std::optional<Vector> solve(Matrix a, Vector b);

/*
  Feeds vectors v0, v1, ... one at a time.  add() returns nullopt while the
  vectors stay independent; on the first dependent vector v_k it returns
  coefficients c (size k+1, c_k = 1) with sum c_i v_i = 0.
*/
class DependencyFinder {
   public:
    std::optional<Vector> add(Vector v);
    std::size_t size() const noexcept { return count_; }

   private:
    struct Row {
        Vector reduced;
        std::size_t pivot;
        Vector combination;
    };
    std::vector<Row> rows_;
    std::size_t count_ = 0;
};

/// Minimal polynomial of a square matrix (Krylov on I, M, M^2, ...).
UniPoly minimal_polynomial(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix identity_matrix(std::size_t n);

}  // namespace planeaut
