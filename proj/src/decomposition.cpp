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

#include "planeaut/decomposition.hpp"

#include <stdexcept>

#include "planeaut/error.hpp"

namespace planeaut {

namespace {

TriangularMap compose_triangular(const TriangularMap& s, const TriangularMap& t) {
    UniPoly inner({t.c, t.b}, 'Y');
    UniPoly p = t.p * s.a + s.p.compose(inner);
    return {s.a * t.a, p.relabel('Y'), s.b * t.b, s.b * t.c + s.c};
}

Factor as_factor(const TriangularMap& t) {
    if (!t.is_affine()) return t;
    return AffineMap{{t.a, t.p.coeff(1), 0, t.b}, t.p.coeff(0), t.c};
}

bool is_b_element(const Factor& f) { return f.is_affine() && f.affine().is_triangular(); }

bool is_identity(const Factor& f) { return f.is_affine() && f.affine() == AffineMap::identity(); }

Factor merge(const Factor& f, const Factor& g) {
    if (f.is_affine() && g.is_affine()) return compose(f.affine(), g.affine());
    const TriangularMap s = f.is_affine() ? TriangularMap::from_affine(f.affine()) : f.triangular();
    const TriangularMap t = g.is_affine() ? TriangularMap::from_affine(g.affine()) : g.triangular();
    return as_factor(compose_triangular(s, t));
}

// One simplification step; false when nothing applies.
bool simplify_once(std::vector<Factor>& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].is_triangular() && w[i].triangular().is_affine()) {
            w[i] = as_factor(w[i].triangular());
            return true;
        }
        if (is_identity(w[i])) {
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            return true;
        }
    }
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i].is_affine() == w[i + 1].is_affine()) {
            w[i] = merge(w[i], w[i + 1]);
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            return true;
        }
    if (w.size() < 2) return false;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!is_b_element(w[i])) continue;
        if (i + 1 < w.size() && w[i + 1].is_triangular()) {
            w[i + 1] = merge(w[i], w[i + 1]);
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            return true;
        }
        if (i > 0 && w[i - 1].is_triangular()) {
            w[i - 1] = merge(w[i - 1], w[i]);
            w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
            return true;
        }
    }
    return false;
}

}  // namespace

PlaneEndo Factor::endo() const { return is_affine() ? affine().endo() : triangular().endo(); }

Factor Factor::inverse() const {
    if (is_affine()) return affine().inverse();
    return triangular().inverse();
}

FactorWord FactorWord::normalized(std::vector<Factor> w) {
    while (simplify_once(w)) {
    }
    if (w.size() == 1 && is_b_element(w[0])) w[0] = TriangularMap::from_affine(w[0].affine());
    // Push the triangular part of each inner affine factor into its left
    // neighbour, leaving the representative (Y, X + sY).
    for (std::size_t i = w.size(); i-- > 1;) {
        if (!w[i].is_affine()) continue;
        const AffineMap& a = w[i].affine();
        Scalar s = a.m.m22 / a.m.m21;
        AffineMap b{{a.m.m12 - a.m.m11 * s, a.m.m11, 0, a.m.m21}, a.v1, a.v2};
        AffineMap rep{{0, 1, 1, s}, 0, 0};
        if (!w[i - 1].is_triangular()) throw std::logic_error("word is not alternating");
        w[i - 1] = compose_triangular(w[i - 1].triangular(), TriangularMap::from_affine(b));
        w[i] = rep;
    }
    FactorWord fw;
    fw.factors_ = std::move(w);
    PlaneEndo acc = PlaneEndo::identity();
    for (const auto& f : fw.factors_) acc = compose(acc, f.endo());
    fw.composite_ = std::move(acc);
    if (fw.composite_.degree() != fw.word_degree())
        throw std::logic_error("word degree " + std::to_string(fw.word_degree()) + " differs from composite degree " +
                               std::to_string(fw.composite_.degree()));
    return fw;
}

int FactorWord::word_degree() const {
    int d = 1;
    for (const auto& f : factors_) d *= f.degree();
    return d;
}

FactorWord FactorWord::inverse() const {
    std::vector<Factor> inv;
    for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) inv.push_back(it->inverse());
    return normalized(std::move(inv));
}

FactorWord jvdk_decompose(const PlaneEndo& f) {
    BiPoly jac = jacobian_det(f);
    if (!jac.is_constant() || jac.is_zero())
        throw Error(ErrorKind::NotAnAutomorphism, "Jacobian " + jac.str() + " is not a nonzero constant");
    std::vector<Factor> left;
    PlaneEndo g = f;
    while (g.degree() > 1) {
        int d1 = g.f1.degree(), d2 = g.f2.degree();
        if (d1 < 1 || d2 < 1) throw Error(ErrorKind::NotAnAutomorphism, "constant component in " + f.str());
        bool first = d1 >= d2;
        const BiPoly& hi = first ? g.f1 : g.f2;
        const BiPoly& lo = first ? g.f2 : g.f1;
        int dh = first ? d1 : d2, dl = first ? d2 : d1;
        if (dh % dl != 0) throw Error(ErrorKind::NotAnAutomorphism, "degrees " + std::to_string(d1) + ", " +
                                                                        std::to_string(d2) + " do not divide");
        unsigned k = static_cast<unsigned>(dh / dl);
        BiPoly lh = hi.leading_form();
        BiPoly power = lo.leading_form().pow(k);
        const auto& [mono, lead] = *lh.terms().rbegin();
        Scalar other = power.coeff(mono.x, mono.y);
        if (other.is_zero()) throw Error(ErrorKind::NotAnAutomorphism, "leading forms do not cancel");
        Scalar c = lead / other;
        if (!(lh == power * c)) throw Error(ErrorKind::NotAnAutomorphism, "leading forms do not cancel");
        TriangularMap elem{1, UniPoly::monomial(c, static_cast<int>(k), 'Y'), 1, 0};
        BiPoly reduced = hi - lo.pow(k) * c;
        if (first) {
            left.emplace_back(elem);
            g.f1 = std::move(reduced);
        } else {
            left.emplace_back(AffineMap::swap());
            left.emplace_back(elem);
            left.emplace_back(AffineMap::swap());
            g.f2 = std::move(reduced);
        }
    }
    auto last = AffineMap::from_endo(g);
    if (!last) throw Error(ErrorKind::NotAnAutomorphism, "degenerate affine remainder");
    left.emplace_back(*last);
    FactorWord w = FactorWord::normalized(std::move(left));
    if (!(w.composite() == f)) throw std::logic_error("decomposition does not recompose to " + f.str());
    return w;
}

Automorphism Automorphism::from_endo(const PlaneEndo& f) {
    FactorWord w = jvdk_decompose(f);
    return {f, std::move(w)};
}

Automorphism Automorphism::from_word(std::vector<Factor> factors) {
    FactorWord w = FactorWord::normalized(std::move(factors));
    return {w.composite(), w};
}

Automorphism invert(const Automorphism& f) {
    FactorWord w = f.word.inverse();
    return {w.composite(), w};
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
    std::vector<Factor> all = f.word.factors();
    all.insert(all.end(), g.word.factors().begin(), g.word.factors().end());
    return Automorphism::from_word(std::move(all));
}

CyclicReduction cyclic_reduce(const Automorphism& f) {
    std::vector<Factor> conj;
    std::vector<Factor> w = f.word.factors();
    while (w.size() >= 2 && w.front().is_affine() == w.back().is_affine()) {
        Factor first = w.front();
        conj.push_back(first);
        w.erase(w.begin());
        w.push_back(first);
        w = FactorWord::normalized(std::move(w)).factors();
    }
    return {Automorphism::from_word(std::move(conj)), FactorWord::normalized(std::move(w))};
}

Rational dynamical_degree(const Automorphism& f) {
    CyclicReduction cr = cyclic_reduce(f);
    if (cr.reduced.size() <= 1) return 1;
    return cr.reduced.composite().degree();
}

}  // namespace planeaut
