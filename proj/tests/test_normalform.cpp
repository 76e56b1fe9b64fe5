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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "planeaut/corpus.hpp"
#include "planeaut/error.hpp"
#include "planeaut/normalform.hpp"
#include "support.hpp"

using namespace planeaut;
using namespace planeaut::testing;

namespace {

bool rejects_as_not_semisimple(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind() == ErrorKind::NotSemisimple;
    }
    return false;
}

PlaneEndo diagonal(const Scalar& a, const Scalar& b) {
    return {BiPoly::monomial(a, 1, 0), BiPoly::monomial(b, 0, 1)};
}

Scalar nonunit(CorpusRng& rng) {
    Scalar s;
    do {
        s = rng.rational(3, true);
    } while (s.is_one());
    return s;
}

}  // namespace

TEST_CASE("diagonalize triangular maps") {
    DiagonalForm d = diagonalize_triangular(*TriangularMap::from_endo(endo("(2X+Y^3, 3Y)")));
    CHECK(d.a == q(2));
    CHECK(d.b == q(3));
    CHECK(d.psi.endo == endo("(X + 1/25*Y^3, Y)"));
    CHECK(conjugates(d.psi, d.diagonal(), endo("(2X+Y^3, 3Y)")));

    DiagonalForm e = diagonalize_triangular(*TriangularMap::from_endo(endo("(2X, 3Y+5)")));
    CHECK(e.diagonal() == endo("(2X, 3Y)"));
    CHECK(e.psi.endo == endo("(X, Y - 5/2)"));
    CHECK(conjugates(e.psi, e.diagonal(), endo("(2X, 3Y+5)")));

    CHECK(rejects_as_not_semisimple([] { diagonalize_triangular(*TriangularMap::from_endo(endo("(X+Y^2, Y)"))); }));
    CHECK(rejects_as_not_semisimple([] { diagonalize_triangular(*TriangularMap::from_endo(endo("(2X, Y+1)"))); }));
}

TEST_CASE("diagonalize automorphisms") {
    PlaneEndo g = endo("(2X, 3Y+X^2)");
    DiagonalForm d = diagonalize(Automorphism::from_endo(g));
    CHECK(d.diagonal() == endo("(2X, 3Y)"));
    CHECK(d.psi.degree() <= 2);
    CHECK(conjugates(d.psi, d.diagonal(), g));

    DiagonalForm id = diagonalize(aut("(2X, 3Y)"));
    CHECK(id.psi.endo.is_identity());

    PlaneEndo rot = endo("(-Y, X)");
    DiagonalForm r = diagonalize(Automorphism::from_endo(rot));
    CHECK(r.a == Scalar::sqrt_of(-1));
    CHECK(r.b == -Scalar::sqrt_of(-1));
    CHECK(r.psi.degree() == 1);
    CHECK(conjugates(r.psi, r.diagonal(), rot));

    CHECK(rejects_as_not_semisimple([] { diagonalize(aut("(X+Y^2, Y)")); }));
    CHECK(rejects_as_not_semisimple([] { diagonalize(aut("(Y, X+Y^2)")); }));
}

TEST_CASE("diagonalize recovers planted eigenvalues") {
    CorpusRng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        Scalar a = rng.rational(3, true), b = rng.rational(3, true);
        PlaneEndo f = random_conjugate_of(rng, diagonal(a, b), 2, 2);
        DiagonalForm d = diagonalize(Automorphism::from_endo(f));
        CHECK(((d.a == a && d.b == b) || (d.a == b && d.b == a)));
        CHECK(d.psi.degree() <= f.degree());
        CHECK(conjugates(d.psi, d.diagonal(), f));
    }
}

TEST_CASE("diagonalize succeeds exactly for squarefree minimal polynomials") {
    CorpusConfig cfg;
    cfg.count = 80;
    cfg.seed = 5;
    for (const CorpusEntry& e : generate_corpus(cfg)) {
        Automorphism f = Automorphism::from_endo(e.endo);
        if (!is_lf(f)) continue;
        bool ok = true;
        try {
            DiagonalForm d = diagonalize(f);
            CHECK(d.psi.degree() <= f.degree());
        } catch (const Error& err) {
            CHECK(err.kind() == ErrorKind::NotSemisimple);
            ok = false;
        }
        CHECK(ok == is_squarefree(minimal_polynomial(f)));
    }
}

TEST_CASE("resonant triangular maps are rejected and not semisimple") {
    CorpusRng rng(52);
    for (int trial = 0; trial < 30; ++trial) {
        TriangularMap t;
        t.b = rng.rational(2, true);
        const int k = rng.range(0, 3);
        t.a = t.b.pow(k);
        t.c = rng.rational(3);
        t.p = UniPoly::monomial(rng.rational(3, true), k, 'Y') + UniPoly({Scalar(rng.rational(3))}, 'Y');
        if (k == 0) t.p = UniPoly::monomial(rng.rational(3, true), 0, 'Y');
        CHECK(rejects_as_not_semisimple([&t] { diagonalize_triangular(t); }));
        CHECK_FALSE(is_squarefree(minimal_polynomial(Automorphism::from_endo(t.endo()))));
    }
}

TEST_CASE("conjugacy test examples") {
    PlaneEndo f = endo("(2X+Y^3, 3Y)"), g = endo("(2X, 3Y+X^2)");
    auto psi = conjugacy_test_semisimple(Automorphism::from_endo(f), Automorphism::from_endo(g));
    REQUIRE(psi.has_value());
    CHECK(conjugates(*psi, g, f));
    auto swap = conjugacy_test_semisimple(aut("(2X, 3Y)"), aut("(3X, 2Y)"));
    REQUIRE(swap.has_value());
    CHECK(swap->endo == endo("(Y, X)"));
    CHECK_FALSE(conjugacy_test_semisimple(aut("(2X, 3Y)"), aut("(2X, 5Y)")).has_value());
    CHECK(rejects_as_not_semisimple([] { conjugacy_test_semisimple(aut("(2X, 3Y)"), aut("(X+1, Y)")); }));
}

TEST_CASE("conjugacy verdict equals equality of eigenvalue pairs") {
    CorpusRng rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        Scalar a1 = nonunit(rng), b1 = rng.rational(3, true);
        Scalar a2 = rng.chance(1, 2) ? b1 : nonunit(rng), b2 = rng.chance(1, 2) ? a1 : rng.rational(3, true);
        PlaneEndo f = random_conjugate_of(rng, diagonal(a1, b1), 2, 2);
        PlaneEndo g = random_conjugate_of(rng, diagonal(a2, b2), 2, 2);
        bool same = (a1 == a2 && b1 == b2) || (a1 == b2 && b1 == a2);
        Automorphism af = Automorphism::from_endo(f), ag = Automorphism::from_endo(g);
        auto psi = conjugacy_test_semisimple(af, ag);
        CHECK(psi.has_value() == same);
        if (psi) CHECK(conjugates(*psi, g, f));
        auto back = conjugacy_test_semisimple(ag, af);
        CHECK(back.has_value() == same);
        if (back) CHECK(conjugates(*back, f, g));
    }
}
