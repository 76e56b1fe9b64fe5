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

#include "planeaut/deformation.hpp"

#include "planeaut/error.hpp"
#include "planeaut/groebner.hpp"
#include "planeaut/linalg.hpp"
#include "planeaut/normalform.hpp"

namespace planeaut {

namespace {

FamilyPoly scale_terms(const BiPoly& p, int outer, const ScalingFamily& w) {
    FamilyPoly r;
    for (const auto& [m, c] : p.terms()) r.add_term(m, LaurentScalar::term(c, outer - w.alpha * m.x - w.beta * m.y));
    return r;
}

// Single term c*t^e*X^i*Y^j; false otherwise.
bool single_term(const FamilyPoly& p, const Monomial& want, Scalar& c, int& e) {
    if (p.terms().size() != 1 || p.terms().begin()->first != want) return false;
    const LaurentScalar& l = p.terms().begin()->second;
    if (l.terms().size() != 1) return false;
    e = l.terms().begin()->first;
    c = l.terms().begin()->second;
    return true;
}

bool constant_in_t(const FamilyPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (c.terms().size() != 1 || c.terms().begin()->first != 0) return false;
    return true;
}

std::vector<Scalar> small_roots(const UniPoly& mu) {
    std::vector<Scalar> out;
    UniPoly rest = mu;
    for (const Rational& r : rational_roots(mu)) {
        out.emplace_back(r);
        rest = divmod(rest, UniPoly({Scalar(-r), Scalar(1)})).first;
    }
    if (rest.degree() == 2) {
        auto [r1, r2] = quadratic_roots(rest.monic());
        out.push_back(r1);
        out.push_back(r2);
    }
    return out;
}

bool diagonalizable(const Matrix2& l) {
    Scalar disc = l.trace() * l.trace() - Scalar(4) * l.det();
    if (!disc.is_zero()) return true;
    return l.m12.is_zero() && l.m21.is_zero();
}

Scalar linear_trace(const PlaneEndo& f) { return f.f1.coeff(1, 0) + f.f2.coeff(0, 1); }

}  // namespace

FamilyEndo ScalingFamily::endo() const {
    return {FamilyPoly::monomial(LaurentScalar::term(Scalar(1), alpha), 1, 0),
            FamilyPoly::monomial(LaurentScalar::term(Scalar(1), beta), 0, 1)};
}

PlaneEndo ScalingFamily::at(const Scalar& t0) const {
    return {BiPoly::monomial(t0.pow(alpha), 1, 0), BiPoly::monomial(t0.pow(beta), 0, 1)};
}

FamilyEndo family_conjugate(const ScalingFamily& w, const PlaneEndo& g) {
    return {scale_terms(g.f1, w.alpha, w), scale_terms(g.f2, w.beta, w)};
}

FamilyEndo family_conjugate(const FamilyEndo& phi, const PlaneEndo& f) {
    Scalar c1, c2;
    int e1 = 0, e2 = 0;
    if (single_term(phi.f1, {1, 0}, c1, e1) && single_term(phi.f2, {0, 1}, c2, e2)) {
        FamilyEndo inv{FamilyPoly::monomial(LaurentScalar::term(c1.inverse(), -e1), 1, 0),
                       FamilyPoly::monomial(LaurentScalar::term(c2.inverse(), -e2), 0, 1)};
        return compose(compose(phi, lift(f)), inv);
    }
    if (constant_in_t(phi.f1) && constant_in_t(phi.f2)) {
        PlaneEndo fixed = specialize(phi, Scalar(1));
        try {
            Automorphism a = Automorphism::from_endo(fixed);
            return lift(compose(compose(a.endo, f), invert(a).endo));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotAnAutomorphism) throw;
        }
    }
    throw Error(ErrorKind::NonInvertibleFamily, phi.str());
}

PlaneEndo limit_at_zero(const FamilyEndo& family) {
    PlaneEndo out{BiPoly(), BiPoly()};
    for (int comp = 0; comp < 2; ++comp) {
        const FamilyPoly& p = comp == 0 ? family.f1 : family.f2;
        BiPoly& target = comp == 0 ? out.f1 : out.f2;
        for (const auto& [m, c] : p.terms()) {
            if (c.order() < 0) {
                std::string where = m == Monomial{0, 0} ? std::string("1") : monomial_string(m);
                throw Error(ErrorKind::NegativeOrder, "coefficient " + c.str() + " of " + where + " in component " +
                                                          std::to_string(comp + 1));
            }
            target.add_term(m, c.coeff(0));
        }
    }
    return out;
}

Point find_fixed_point(const PlaneEndo& f) {
    auto basis = groebner_basis({f.f1 - BiPoly::X(), f.f2 - BiPoly::Y()});
    auto standard = standard_monomials(basis);
    if (!standard || standard->empty())
        throw Error(ErrorKind::UnsupportedExtension, "fixed locus of " + f.str() + " is not a finite nonempty set");
    auto xs = small_roots(minimal_polynomial(multiplication_matrix(basis, *standard, 0)));
    auto ys = small_roots(minimal_polynomial(multiplication_matrix(basis, *standard, 1)));
    for (const auto& x : xs)
        for (const auto& y : ys) {
            try {
                Point p{x, y};
                if (apply(f, p) == p) return p;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::IncompatibleField) throw;
            }
        }
    throw Error(ErrorKind::UnsupportedExtension, "no fixed point of " + f.str() + " in a quadratic field");
}

DegenerationWitness closure_witness(const Automorphism& f) {
    DegenerationWitness w;
    w.source = f.endo;
    w.source_jac = jacobian_det(f.endo).constant_term();
    CyclicReduction cr = cyclic_reduce(f);
    PlaneEndo conjugated;  // C∘f∘C⁻¹ before scaling
    if (cr.reduced.size() <= 1) {
        Triangularization tr = triangularize(f);
        w.source_trace = pseudo_eigenvalues(f).trace;
        w.conjugator = invert(tr.phi);
        w.scaling = {std::max(1, tr.t.p.degree() + 1), 1};
        conjugated = tr.t.endo();
    } else {
        const PlaneEndo& g = cr.reduced.composite();
        Point xi = find_fixed_point(g);
        AffineMap to_origin = AffineMap::translation(-xi.x, -xi.y);
        Matrix2 l = derivative_at(g, xi);
        AffineMap move = to_origin;
        if (diagonalizable(l)) {
            w.scaling = {-1, -1};
        } else {
            // Repeated eigenvalue: make the linear part upper triangular,
            // then weights (-2, -3) kill its off-diagonal entry.
            Scalar lambda = l.trace() / Scalar(2);
            Matrix2 p = l.m21.is_zero() ? Matrix2::identity() : Matrix2{lambda - l.m22, 1, l.m21, 0};
            move = compose(AffineMap{p.inverse(), 0, 0}, to_origin);
            w.scaling = {-2, -3};
        }
        w.conjugator = compose(Automorphism::from_word({Factor(move)}), invert(cr.conjugator));
        conjugated = compose(compose(move.endo(), g), move.inverse().endo());
    }
    w.family = family_conjugate(w.scaling, conjugated);
    w.limit = limit_at_zero(w.family);
    Automorphism limit = Automorphism::from_endo(w.limit);
    w.limit_jac = jacobian_det(w.limit).constant_term();
    if (w.limit.degree() <= 1) w.limit_trace = linear_trace(w.limit);
    w.limit_semisimple = is_semisimple(limit);
    w.limit_in_class = w.limit_semisimple && is_semisimple(f) && conjugacy_test_semisimple(f, limit).has_value();
    return w;
}

bool specialization_consistent(const DegenerationWitness& w, const Scalar& t0) {
    PlaneEndo direct = compose(compose(w.conjugator.endo, w.source), invert(w.conjugator).endo);
    PlaneEndo scaled = compose(compose(w.scaling.at(t0), direct), w.scaling.inverse().at(t0));
    return specialize(w.family, t0) == scaled;
}

}  // namespace planeaut
