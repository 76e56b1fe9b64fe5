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

#include "planeaut/endo.hpp"

#include "planeaut/error.hpp"

namespace planeaut {

Matrix2 Matrix2::inverse() const {
    Scalar d = det();
    if (d.is_zero()) throw Error(ErrorKind::BadInput, "singular matrix");
    Scalar inv = d.inverse();
    return {m22 * inv, -m12 * inv, -m21 * inv, m11 * inv};
}

FamilyEndo lift(const PlaneEndo& f) { return {lift(f.f1), lift(f.f2)}; }

PlaneEndo specialize(const FamilyEndo& f, const Scalar& t0) { return {specialize(f.f1, t0), specialize(f.f2, t0)}; }

PlaneEndo iterate(const PlaneEndo& f, unsigned n) {
    PlaneEndo r = PlaneEndo::identity();
    for (unsigned k = 0; k < n; ++k) r = compose(f, r);
    return r;
}

BiPoly jacobian_det(const PlaneEndo& f) {
    return f.f1.partial_x() * f.f2.partial_y() - f.f1.partial_y() * f.f2.partial_x();
}

Matrix2 derivative_at(const PlaneEndo& f, const Point& xi) {
    return {f.f1.partial_x().eval(xi.x, xi.y), f.f1.partial_y().eval(xi.x, xi.y), f.f2.partial_x().eval(xi.x, xi.y),
            f.f2.partial_y().eval(xi.x, xi.y)};
}

Point apply(const PlaneEndo& f, const Point& xi) { return {f.f1.eval(xi.x, xi.y), f.f2.eval(xi.x, xi.y)}; }

bool is_rational(const PlaneEndo& f) { return is_rational(f.f1) && is_rational(f.f2); }

PlaneEndo swap_endo() { return {BiPoly::Y(), BiPoly::X()}; }

std::optional<AffineMap> AffineMap::from_endo(const PlaneEndo& f) {
    if (f.degree() > 1) return std::nullopt;
    AffineMap g{{f.f1.coeff(1, 0), f.f1.coeff(0, 1), f.f2.coeff(1, 0), f.f2.coeff(0, 1)},
                f.f1.constant_term(),
                f.f2.constant_term()};
    if (g.m.det().is_zero()) return std::nullopt;
    return g;
}

PlaneEndo AffineMap::endo() const {
    PlaneEndo e;
    e.f1.add_term({1, 0}, m.m11);
    e.f1.add_term({0, 1}, m.m12);
    e.f1.add_term({0, 0}, v1);
    e.f2.add_term({1, 0}, m.m21);
    e.f2.add_term({0, 1}, m.m22);
    e.f2.add_term({0, 0}, v2);
    return e;
}

AffineMap AffineMap::inverse() const {
    Matrix2 mi = m.inverse();
    Point v = mi.apply({v1, v2});
    return {mi, -v.x, -v.y};
}

std::optional<TriangularMap> TriangularMap::from_endo(const PlaneEndo& f) {
    if (f.f2.degree() > 1 || !f.f2.coeff(1, 0).is_zero()) return std::nullopt;
    TriangularMap t;
    t.b = f.f2.coeff(0, 1);
    t.c = f.f2.constant_term();
    t.a = f.f1.coeff(1, 0);
    if (t.a.is_zero() || t.b.is_zero()) return std::nullopt;
    std::vector<Scalar> p;
    for (const auto& [mono, v] : f.f1.terms()) {
        if (mono == Monomial{1, 0}) continue;
        if (mono.x != 0) return std::nullopt;
        if (static_cast<int>(p.size()) <= mono.y) p.resize(mono.y + 1, Scalar(0));
        p[mono.y] = v;
    }
    t.p = UniPoly(std::move(p), 'Y');
    return t;
}

TriangularMap TriangularMap::from_affine(const AffineMap& g) {
    if (!g.is_triangular()) throw Error(ErrorKind::BadInput, "affine map is not triangular");
    return {g.m.m11, UniPoly({g.v1, g.m.m12}, 'Y'), g.m.m22, g.v2};
}

PlaneEndo TriangularMap::endo() const {
    PlaneEndo e;
    e.f1 = BiPoly::monomial(a, 1, 0) + in_y(p);
    e.f2 = BiPoly::monomial(b, 0, 1) + BiPoly(c);
    return e;
}

TriangularMap TriangularMap::inverse() const {
    Scalar ai = a.inverse(), bi = b.inverse();
    UniPoly arg({-c * bi, bi}, 'Y');
    UniPoly q = p.compose(arg) * (-ai);
    return {ai, q.relabel('Y'), bi, -c * bi};
}

}  // namespace planeaut
