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

#include <map>
#include <string>

#include "planeaut/bipoly.hpp"
#include "planeaut/scalar.hpp"

namespace planeaut {

/// Laurent polynomial in the family parameter t: a finite map from exponent
/// to nonzero Scalar coefficient.
class LaurentScalar {
   public:
    LaurentScalar() = default;
    LaurentScalar(int v) : LaurentScalar(Scalar(v)) {}
    LaurentScalar(const Scalar& c) {
        if (!c.is_zero()) c_.emplace(0, c);
    }
    /// c * t^e.
    static LaurentScalar term(const Scalar& c, int e);

    const std::map<int, Scalar>& terms() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Lowest exponent; the zero value has no order and throws BadInput.
    int order() const;
    Scalar coeff(int e) const;

    /// Value at a nonzero t0.
    Scalar eval(const Scalar& t0) const;

    LaurentScalar operator-() const;
    LaurentScalar& operator+=(const LaurentScalar& o);
    LaurentScalar& operator-=(const LaurentScalar& o);
    LaurentScalar& operator*=(const LaurentScalar& o);
    friend LaurentScalar operator+(LaurentScalar a, const LaurentScalar& b) { return a += b; }
    friend LaurentScalar operator-(LaurentScalar a, const LaurentScalar& b) { return a -= b; }
    friend LaurentScalar operator*(LaurentScalar a, const LaurentScalar& b) { return a *= b; }
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) { return a.c_ == b.c_; }

    std::string str() const;

   private:
    std::map<int, Scalar> c_;
};

CoeffText coeff_text(const LaurentScalar& c);

using FamilyPoly = BasicBiPoly<LaurentScalar>;

FamilyPoly lift(const BiPoly& p);
BiPoly specialize(const FamilyPoly& p, const Scalar& t0);

}  // namespace planeaut
