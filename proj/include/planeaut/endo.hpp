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
#include <string>

#include "planeaut/bipoly.hpp"
#include "planeaut/laurent.hpp"
#include "planeaut/scalar.hpp"
#include "planeaut/upoly.hpp"

namespace planeaut {

struct Point {
    Scalar x;
    Scalar y;
    friend bool operator==(const Point&, const Point&) = default;
};

/// [[m11, m12], [m21, m22]].
struct Matrix2 {
    Scalar m11{1}, m12{0}, m21{0}, m22{1};

    static Matrix2 identity() { return {}; }
    Scalar det() const { return m11 * m22 - m12 * m21; }
    Scalar trace() const { return m11 + m22; }
    Matrix2 inverse() const;
    Point apply(const Point& p) const { return {m11 * p.x + m12 * p.y, m21 * p.x + m22 * p.y}; }
    friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22, a.m21 * b.m11 + a.m22 * b.m21,
                a.m21 * b.m12 + a.m22 * b.m22};
    }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Pair of coordinate polynomials (f1, f2).
template <class R>
struct BasicEndo {
    BasicBiPoly<R> f1;
    BasicBiPoly<R> f2;

    static BasicEndo identity() { return {BasicBiPoly<R>::X(), BasicBiPoly<R>::Y()}; }
    int degree() const { return std::max(f1.degree(), f2.degree()); }
    bool is_identity() const { return *this == identity(); }
    std::string str() const { return "(" + f1.str() + ", " + f2.str() + ")"; }
    friend bool operator==(const BasicEndo&, const BasicEndo&) = default;
};

using PlaneEndo = BasicEndo<Scalar>;
using FamilyEndo = BasicEndo<LaurentScalar>;

/// f∘g.
template <class R>
BasicEndo<R> compose(const BasicEndo<R>& f, const BasicEndo<R>& g) {
    return {f.f1.compose(g.f1, g.f2), f.f2.compose(g.f1, g.f2)};
}

FamilyEndo lift(const PlaneEndo& f);
PlaneEndo specialize(const FamilyEndo& f, const Scalar& t0);

/// f^n by repeated composition, n >= 0.
PlaneEndo iterate(const PlaneEndo& f, unsigned n);

BiPoly jacobian_det(const PlaneEndo& f);
Matrix2 derivative_at(const PlaneEndo& f, const Point& xi);
Point apply(const PlaneEndo& f, const Point& xi);
bool is_rational(const PlaneEndo& f);

/// The swap (Y, X).
PlaneEndo swap_endo();

/// (m11 X + m12 Y + v1, m21 X + m22 Y + v2) with det m != 0.
struct AffineMap {
    Matrix2 m;
    Scalar v1{0};
    Scalar v2{0};

    static AffineMap identity() { return {}; }
    static AffineMap swap() { return {{0, 1, 1, 0}, 0, 0}; }
    static AffineMap translation(const Scalar& x, const Scalar& y) { return {Matrix2::identity(), x, y}; }
    /// Reads a map of degree <= 1; nullopt if the degree is higher or det = 0.
    static std::optional<AffineMap> from_endo(const PlaneEndo& f);

    PlaneEndo endo() const;
    AffineMap inverse() const;
    /// Also of triangular shape (m21 = 0).
    bool is_triangular() const { return m.m21.is_zero(); }
    friend AffineMap compose(const AffineMap& f, const AffineMap& g) {
        Point v = f.m.apply({g.v1, g.v2});
        return {f.m * g.m, v.x + f.v1, v.y + f.v2};
    }
    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// (aX + p(Y), bY + c) with a, b nonzero; p is labelled Y.
struct TriangularMap {
    Scalar a{1};
    UniPoly p = UniPoly(std::vector<Scalar>{}, 'Y');
    Scalar b{1};
    Scalar c{0};

    static std::optional<TriangularMap> from_endo(const PlaneEndo& f);
    static TriangularMap from_affine(const AffineMap& g);

    PlaneEndo endo() const;
    TriangularMap inverse() const;
    int degree() const { return std::max(1, p.degree()); }
    bool is_affine() const { return p.degree() <= 1; }
    Scalar jacobian() const { return a * b; }
    friend bool operator==(const TriangularMap& s, const TriangularMap& t) {
        return s.a == t.a && s.p == t.p && s.b == t.b && s.c == t.c;
    }
};

}  // namespace planeaut
