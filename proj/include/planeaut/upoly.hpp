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

#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "planeaut/scalar.hpp"

namespace planeaut {

/// Degree of the zero polynomial; compares below every real degree.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

/*
  Dense univariate polynomial over Scalar, lowest degree first.  The label
  only affects printing.  No trailing zero coefficients are ever stored.
*/
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs, char label = 'T');
    UniPoly(std::initializer_list<Scalar> coeffs, char label = 'T')
        : UniPoly(std::vector<Scalar>(coeffs), label) {}
    static UniPoly constant(const Scalar& c, char label = 'T') { return UniPoly({c}, label); }
    /// The monomial c*T^k.
    static UniPoly monomial(const Scalar& c, int k, char label = 'T');
    /// prod (T - r) over the given roots.
    static UniPoly from_roots(std::span<const Scalar> roots, char label = 'T');

    int degree() const noexcept { return c_.empty() ? kDegreeNegInf : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    char label() const noexcept { return label_; }
    UniPoly relabel(char label) const { return UniPoly(c_, label); }

    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    /// Coefficient of T^k (zero beyond the degree).
    Scalar coeff(int k) const;
    const Scalar& leading() const;

    bool is_rational() const;

    UniPoly monic() const;
    UniPoly derivative() const;
    Scalar eval(const Scalar& x) const;
    /// p(u) for another polynomial u.
    UniPoly compose(const UniPoly& u) const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Scalar& s);
    friend UniPoly operator+(UniPoly x, const UniPoly& y) { return x += y; }
    friend UniPoly operator-(UniPoly x, const UniPoly& y) { return x -= y; }
    friend UniPoly operator*(UniPoly x, const UniPoly& y) { return x *= y; }
    friend UniPoly operator*(UniPoly x, const Scalar& s) { return x *= s; }
    friend UniPoly operator*(const Scalar& s, UniPoly x) { return x *= s; }

    /// Equality ignores the label.
    friend bool operator==(const UniPoly& x, const UniPoly& y) { return x.c_ == y.c_; }

    std::string str() const;

   private:
    void trim();

    std::vector<Scalar> c_;
    char label_ = 'T';
};

/// Euclidean division over the coefficient field: returns (quotient, remainder).
std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& q);
UniPoly pow(const UniPoly& p, unsigned e);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& p, const UniPoly& q);
bool is_squarefree(const UniPoly& p);
/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

/// Roots of a monic rational quadratic.  Rational roots come out ascending;
/// a conjugate pair comes out as (a + b*sqrt(D), a - b*sqrt(D)) with b > 0.
std::pair<Scalar, Scalar> quadratic_roots(const UniPoly& p);

/// All distinct rational roots of a polynomial with rational coefficients,
/// ascending.  Exact: Sturm isolation plus a denominator bound.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace planeaut
