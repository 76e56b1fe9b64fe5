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

#include "planeaut/scalar.hpp"

#include <ostream>

#include "planeaut/error.hpp"

namespace planeaut {

std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::IncompatibleField: return "IncompatibleField";
        case ErrorKind::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorKind::BadInput: return "BadInput";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnknownVariable: return "UnknownVariable";
        case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
        case ErrorKind::NotTriangularizable: return "NotTriangularizable";
        case ErrorKind::NotLocallyFinite: return "NotLocallyFinite";
        case ErrorKind::NotSemisimple: return "NotSemisimple";
        case ErrorKind::NotInS: return "NotInS";
        case ErrorKind::NonInvertibleFamily: return "NonInvertibleFamily";
        case ErrorKind::NegativeOrder: return "NegativeOrder";
        case ErrorKind::UnsupportedExtension: return "UnsupportedExtension";
        case ErrorKind::BoundTooLarge: return "BoundTooLarge";
    }
    return "Unknown";
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(ErrorKind::BadInput, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string fraction_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string compact_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return fraction_string(q);
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::BadInput, "not a rational number: '" + text + "'");
    }
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw Error(ErrorKind::BadInput, "squarefree part of zero");
    Integer rest = abs(n);
    Integer result = 1;
    for (unsigned long p = 2; p <= 1000000; p += (p == 2 ? 1 : 2)) {
        Integer pp = Integer(p) * p;
        if (pp > rest) break;
        unsigned mult = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            rest /= p;
            ++mult;
        }
        if (mult % 2 == 1) result *= p;
    }
    // TODO: cofactors p*q^2 with both primes above 10^6 are not
    // detected; needs an integer factorization backend.
    if (mpz_perfect_square_p(rest.get_mpz_t()) == 0) result *= rest;
    return sgn(n) < 0 ? Integer(-result) : result;
}

Scalar Scalar::quadratic(const Rational& a, const Rational& b, long d) {
    if (d == 0 || d == 1) throw Error(ErrorKind::BadInput, "discriminant must differ from 0 and 1");
    if (squarefree_part(Integer(d)) != d)
        throw Error(ErrorKind::BadInput, "discriminant " + std::to_string(d) + " is not squarefree");
    Scalar s;
    s.a_ = a;
    s.b_ = b;
    s.d_ = d;
    s.collapse();
    return s;
}

const Rational& Scalar::rational() const {
    if (d_ != 0) throw Error(ErrorKind::BadInput, "scalar " + str() + " is not rational");
    return a_;
}

void Scalar::collapse() {
    if (sgn(b_) == 0) d_ = 0;
}

void Scalar::check_field(const Scalar& o) const {
    if (d_ != 0 && o.d_ != 0 && d_ != o.d_)
        throw Error(ErrorKind::IncompatibleField,
                    "sqrt(" + std::to_string(d_) + ") and sqrt(" + std::to_string(o.d_) + ")");
}

long common_discriminant(const Scalar& x, const Scalar& y) {
    if (x.discriminant() != 0 && y.discriminant() != 0 && x.discriminant() != y.discriminant())
        throw Error(ErrorKind::IncompatibleField, "mixed quadratic fields");
    return x.discriminant() != 0 ? x.discriminant() : y.discriminant();
}

Scalar Scalar::conj() const {
    Scalar s = *this;
    s.b_ = -s.b_;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_field(o);
    a_ += o.a_;
    if (o.d_ != 0) {
        b_ += o.b_;
        d_ = o.d_;
    }
    collapse();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_field(o);
    a_ -= o.a_;
    if (o.d_ != 0) {
        b_ -= o.b_;
        d_ = o.d_;
    }
    collapse();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_field(o);
    if (o.d_ == 0) {
        a_ *= o.a_;
        b_ *= o.a_;
    } else if (d_ == 0) {
        b_ = a_ * o.b_;
        a_ *= o.a_;
        d_ = o.d_;
    } else {
        Rational na = a_ * o.a_ + Rational(d_) * b_ * o.b_;
        Rational nb = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(na);
        b_ = std::move(nb);
    }
    collapse();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorKind::BadInput, "division by zero");
    if (d_ == 0) return Scalar(Rational(1) / a_);
    Rational n = norm();
    return quadratic(a_ / n, -b_ / n, d_);
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.d_ == 0) {
        if (sgn(o.a_) == 0) throw Error(ErrorKind::BadInput, "division by zero");
        a_ /= o.a_;
        b_ /= o.a_;
        collapse();
        return *this;
    }
    return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    if (x.d_ != y.d_) return x.d_ <=> y.d_;
    int c = cmp(x.a_, y.a_);
    if (c != 0) return c <=> 0;
    return cmp(x.b_, y.b_) <=> 0;
}

std::string Scalar::str() const {
    if (d_ == 0) return fraction_string(a_);
    return "[" + fraction_string(a_) + ", " + fraction_string(b_) + ", " + std::to_string(d_) + "]";
}

std::string Scalar::compact() const {
    if (d_ == 0) return compact_string(a_);
    return "[" + compact_string(a_) + ", " + compact_string(b_) + ", " + std::to_string(d_) + "]";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.compact(); }

}  // namespace planeaut
