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

#include "planeaut/classify.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "planeaut/error.hpp"
#include "planeaut/groebner.hpp"
#include "planeaut/linalg.hpp"

namespace planeaut {

namespace {

Scalar constant_jacobian(const PlaneEndo& f) { return jacobian_det(f).constant_term(); }

Triangularization triangularize_reduced(const CyclicReduction& cr) {
    if (cr.reduced.size() >= 2)
        throw Error(ErrorKind::NotTriangularizable,
                    "cyclically reduced word of length " + std::to_string(cr.reduced.size()));
    if (cr.reduced.size() == 0) return {cr.conjugator, TriangularMap{}};
    const Factor& only = cr.reduced.factors()[0];
    if (only.is_triangular()) return {cr.conjugator, only.triangular()};
    // Affine but not triangular: conjugate the linear part to upper
    // triangular form with an eigenvector.
    const AffineMap& a = only.affine();
    UniPoly charpoly({a.m.det(), -a.m.trace(), Scalar(1)});
    Scalar lambda = quadratic_roots(charpoly).first;
    AffineMap p{{lambda - a.m.m22, 1, a.m.m21, 0}, 0, 0};
    AffineMap conj_t = compose(compose(p.inverse(), a), p);
    TriangularMap t = TriangularMap::from_affine(conj_t);
    Automorphism phi = compose(cr.conjugator, Automorphism::from_word({Factor(p)}));
    return {phi, t};
}

FixedLocus fixed_locus_lf(const Triangularization& tr) {
    const TriangularMap& t = tr.t;
    FixedLocus fl;
    BiPoly on_t;  // defining polynomial before transport
    if (!t.b.is_one()) {
        Scalar y0 = t.c / (Scalar(1) - t.b);
        Scalar py0 = t.p.eval(y0);
        if (!t.a.is_one()) {
            fl.kind = FixedLocus::Kind::SimplePoint;
            fl.point = apply(tr.phi.endo, Point{py0 / (Scalar(1) - t.a), y0});
            return fl;
        }
        if (!py0.is_zero()) return fl;
        fl.kind = FixedLocus::Kind::Lines;
        fl.count = 1;
        on_t = BiPoly::Y() - BiPoly(y0);
    } else if (!t.c.is_zero()) {
        return fl;
    } else if (!t.a.is_one()) {
        fl.kind = FixedLocus::Kind::Lines;
        fl.count = 1;
        on_t = BiPoly::monomial(t.a - Scalar(1), 1, 0) + in_y(t.p);
    } else if (t.p.is_zero()) {
        fl.kind = FixedLocus::Kind::WholePlane;
        return fl;
    } else {
        UniPoly sf = squarefree_part(t.p);
        fl.kind = FixedLocus::Kind::Lines;
        fl.count = sf.degree();
        on_t = in_y(sf);
    }
    PlaneEndo phi_inv = invert(tr.phi).endo;
    fl.equation = on_t.compose(phi_inv.f1, phi_inv.f2);
    return fl;
}

FixedLocus fixed_locus_non_lf(const Automorphism& f, const CyclicReduction& cr) {
    FixedLocus fl;
    fl.kind = FixedLocus::Kind::FiniteScheme;
    fl.length = cr.reduced.composite().degree();
    auto dim = quotient_dimension({f.endo.f1 - BiPoly::X(), f.endo.f2 - BiPoly::Y()});
    if (!dim || static_cast<int>(*dim) != fl.length)
        throw std::logic_error("fixed-point quotient dimension disagrees with the reduced degree for " + f.endo.str());
    return fl;
}

PseudoEigenPair pseudo_from_locus(const Automorphism& f, const FixedLocus& fl) {
    if (fl.kind == FixedLocus::Kind::SimplePoint) {
        Matrix2 d = derivative_at(f.endo, fl.point);
        return PseudoEigenPair::from_trace_jac(d.trace(), d.det());
    }
    Scalar jac = constant_jacobian(f.endo);
    return PseudoEigenPair::from_trace_jac(Scalar(1) + jac, jac);
}

// Position of each monomial of degree <= d in a coefficient vector.
std::map<Monomial, std::size_t> monomial_index(int d) {
    std::map<Monomial, std::size_t> idx;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) idx.emplace(Monomial{i, j}, idx.size());
    return idx;
}

Vector coefficient_vector(const PlaneEndo& g, const std::map<Monomial, std::size_t>& idx) {
    Vector v(2 * idx.size(), Scalar(0));
    for (int comp = 0; comp < 2; ++comp)
        for (const auto& [m, c] : (comp == 0 ? g.f1 : g.f2).terms()) {
            auto it = idx.find(m);
            if (it == idx.end()) throw std::logic_error("iterate left the degree bound");
            v[comp * idx.size() + it->second] = c;
        }
    return v;
}

UniPoly minimal_polynomial_lf(const Automorphism& f) {
    int d = std::max(1, f.degree());
    auto idx = monomial_index(d);
    DependencyFinder dep;
    PlaneEndo power = PlaneEndo::identity();
    const std::size_t limit = 2 * idx.size() + 1;
    for (std::size_t k = 0; k <= limit; ++k) {
        if (auto c = dep.add(coefficient_vector(power, idx))) return UniPoly(std::move(*c));
        power = compose(f.endo, power);
    }
    throw std::logic_error("no linear relation among iterates of " + f.endo.str());
}

bool is_power_of_t_minus_one(const UniPoly& mu) {
    return mu == pow(UniPoly({Scalar(-1), Scalar(1)}), static_cast<unsigned>(mu.degree()));
}

}  // namespace

PseudoEigenPair PseudoEigenPair::from_trace_jac(const Scalar& trace, const Scalar& jac) {
    return {trace, jac, quadratic_roots(UniPoly({jac, -trace, Scalar(1)}))};
}

std::string FixedLocus::kind_name() const {
    switch (kind) {
        case Kind::Empty: return "Empty";
        case Kind::SimplePoint: return "SimplePoint";
        case Kind::Lines: return "Lines";
        case Kind::FiniteScheme: return "FiniteScheme";
        case Kind::WholePlane: return "WholePlane";
    }
    return "Unknown";
}

bool is_lf(const Automorphism& f) { return compose(f.endo, f.endo).degree() <= f.degree(); }

bool lf_by_iterates(const Automorphism& f, unsigned max_power) {
    PlaneEndo power = f.endo;
    for (unsigned n = 2; n <= max_power; ++n) {
        power = compose(f.endo, power);
        if (power.degree() > f.degree()) return false;
    }
    return true;
}

bool lf_by_reduction(const Automorphism& f) { return cyclic_reduce(f).reduced.size() <= 1; }

Triangularization triangularize(const Automorphism& f) {
    Triangularization tr = triangularize_reduced(cyclic_reduce(f));
    PlaneEndo back = compose(compose(tr.phi.endo, tr.t.endo()), invert(tr.phi).endo);
    if (!(back == f.endo)) throw std::logic_error("triangularization does not conjugate back to " + f.endo.str());
    int dphi = tr.phi.degree();
    if (f.degree() != tr.t.degree() * dphi * dphi)
        throw std::logic_error("degree identity fails for " + f.endo.str());
    return tr;
}

FixedLocus fixed_locus(const Automorphism& f) {
    CyclicReduction cr = cyclic_reduce(f);
    if (cr.reduced.size() >= 2) return fixed_locus_non_lf(f, cr);
    return fixed_locus_lf(triangularize(f));
}

PseudoEigenPair pseudo_eigenvalues(const Automorphism& f) {
    if (!is_lf(f)) throw Error(ErrorKind::NotLocallyFinite, f.endo.str());
    return pseudo_from_locus(f, fixed_locus(f));
}

UniPoly minimal_polynomial(const Automorphism& f) {
    if (!is_lf(f)) throw Error(ErrorKind::NotLocallyFinite, f.endo.str());
    return minimal_polynomial_lf(f);
}

bool is_semisimple(const Automorphism& f) { return is_lf(f) && is_squarefree(minimal_polynomial_lf(f)); }

bool is_unipotent(const Automorphism& f) { return is_lf(f) && is_power_of_t_minus_one(minimal_polynomial_lf(f)); }

bool in_S(const Automorphism& f) { return fixed_locus(f).kind == FixedLocus::Kind::SimplePoint; }

PlaneEndo evaluate_at(const UniPoly& p, const PlaneEndo& f) {
    PlaneEndo acc{BiPoly(), BiPoly()};
    PlaneEndo power = PlaneEndo::identity();
    for (int k = 0; k <= p.degree(); ++k) {
        acc.f1 += power.f1 * p.coeffs()[k];
        acc.f2 += power.f2 * p.coeffs()[k];
        if (k < p.degree()) power = compose(f, power);
    }
    return acc;
}

UniPoly omega_annihilator(const PseudoEigenPair& pair, int m) {
    if (m < 0) throw Error(ErrorKind::BadInput, "negative m");
    std::set<Scalar> omega;
    for (int k = 0; k <= m; ++k)
        for (int l = 0; k + l <= m; ++l) omega.insert(pair.roots.first.pow(k) * pair.roots.second.pow(l));
    std::vector<Scalar> roots(omega.begin(), omega.end());
    return UniPoly::from_roots(roots);
}

std::vector<Monomial> pullback_basis(const TriangularMap& t, int s) {
    int d = std::max(1, t.p.degree());
    std::vector<Monomial> basis;
    for (int k = 0; d * k <= s; ++k)
        for (int l = 0; d * k + l <= s; ++l) basis.push_back({k, l});
    return basis;
}

std::vector<Scalar> pullback_spectrum(const TriangularMap& t, int s) {
    auto basis = pullback_basis(t, s);
    PlaneEndo te = t.endo();
    std::map<Monomial, std::size_t> pos;
    for (std::size_t i = 0; i < basis.size(); ++i) pos.emplace(basis[i], i);
    std::vector<Scalar> diag;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        BiPoly image = BiPoly::monomial(Scalar(1), basis[j].x, basis[j].y).compose(te.f1, te.f2);
        for (const auto& [m, c] : image.terms()) {
            auto it = pos.find(m);
            if (it == pos.end()) throw std::logic_error("pullback leaves the filtration piece");
            if (it->second > j) throw std::logic_error("pullback matrix is not upper triangular");
        }
        diag.push_back(image.coeff(basis[j].x, basis[j].y));
    }
    return diag;
}

ClassificationReport full_report(const PlaneEndo& f) {
    ClassificationReport r;
    r.input = f;
    Automorphism a = Automorphism::from_endo(f);
    r.degree = f.degree();
    r.jacobian = constant_jacobian(f);
    r.is_lf = is_lf(a);
    CyclicReduction cr = cyclic_reduce(a);
    r.is_triangularizable = cr.reduced.size() <= 1;
    if (r.is_lf != r.is_triangularizable) throw std::logic_error("LF criteria disagree on " + f.str());
    if (!r.is_lf) {
        r.dynamical_degree = cr.reduced.composite().degree();
        r.fixed_locus = fixed_locus_non_lf(a, cr);
        return r;
    }
    r.fixed_locus = fixed_locus_lf(triangularize(a));
    r.pseudo = pseudo_from_locus(a, r.fixed_locus);
    r.minimal_polynomial = minimal_polynomial_lf(a);
    r.is_unipotent = is_power_of_t_minus_one(*r.minimal_polynomial);
    r.is_semisimple = is_squarefree(*r.minimal_polynomial);
    r.in_S = r.fixed_locus.kind == FixedLocus::Kind::SimplePoint;
    r.conjugacy_class_closed = r.is_semisimple;
    return r;
}

std::vector<std::string> self_check(const ClassificationReport& r) {
    std::vector<std::string> failures;
    if (!r.minimal_polynomial) return failures;
    PlaneEndo zero = evaluate_at(*r.minimal_polynomial, r.input);
    if (!zero.f1.is_zero() || !zero.f2.is_zero()) failures.push_back("minimal polynomial does not annihilate");
    if (r.pseudo) {
        const UniPoly& mu = *r.minimal_polynomial;
        if (!mu.eval(r.pseudo->roots.first).is_zero() || !mu.eval(r.pseudo->roots.second).is_zero())
            failures.push_back("pseudo-eigenvalue is not a root of the minimal polynomial");
    }
    if (r.conjugacy_class_closed != r.is_semisimple) failures.push_back("closedness differs from semisimplicity");
    return failures;
}

}  // namespace planeaut
