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

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace planeaut {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form (den > 0, reduced).
Rational make_rational(const Integer& num, const Integer& den = 1);

/// "num/den", always with an explicit denominator.
std::string fraction_string(const Rational& q);

/// Shortest exact spelling: "3", "-1/2".
std::string compact_string(const Rational& q);

/// Parses "n" or "n/d".
Rational parse_rational(const std::string& text);

/// Squarefree part of a nonzero integer, sign kept: 12 -> 3, -8 -> -2.
Integer squarefree_part(const Integer& n);

/*
  An element a + b*sqrt(D) of Q or of a quadratic field Q(sqrt(D)).

  D is a squarefree integer different from 0 and 1.  A value with b == 0 is a
  plain rational and carries D == 0; it combines with elements of any field.
  Mixing two irrational values over different D raises IncompatibleField.
*/
class Scalar {
   public:
    Scalar() = default;
    Scalar(int v) : a_(v) {}
    Scalar(long v) : a_(v) {}
    Scalar(const Rational& q) : a_(q) {}
    Scalar(const Integer& z) : a_(z) {}

    /// a + b*sqrt(d); d must be squarefree, nonzero and not 1.
    static Scalar quadratic(const Rational& a, const Rational& b, long d);
    /// sqrt(d) for a squarefree d != 0, 1.
    static Scalar sqrt_of(long d) { return quadratic(0, 1, d); }

    const Rational& a() const noexcept { return a_; }
    const Rational& b() const noexcept { return b_; }
    long discriminant() const noexcept { return d_; }

    bool is_rational() const noexcept { return d_ == 0; }
    bool is_zero() const noexcept { return d_ == 0 && sgn(a_) == 0; }
    bool is_one() const noexcept { return d_ == 0 && a_ == 1; }

    /// Rational value; throws BadInput when irrational.
    const Rational& rational() const;

    /// Galois conjugate a - b*sqrt(D).
    Scalar conj() const;
    /// Field norm a^2 - D b^2 (rational).
    Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    friend bool operator==(const Scalar& x, const Scalar& y) {
        return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    /// Total order for containers (by D, then a, then b); not a field order.
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

    /// JSON spelling: "num/den" when rational, otherwise "[a, b, D]".
    std::string str() const;
    /// Coefficient spelling used by the endomorphism printer.
    std::string compact() const;

   private:
    void check_field(const Scalar& o) const;
    void collapse();

    Rational a_{0};
    Rational b_{0};
    long d_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Common field of two scalars: 0 for Q, otherwise the shared D.
long common_discriminant(const Scalar& x, const Scalar& y);

}  // namespace planeaut
