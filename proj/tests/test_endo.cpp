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

#include "planeaut/corpus.hpp"
#include "planeaut/error.hpp"
#include "support.hpp"

using namespace planeaut;
using namespace planeaut::testing;

namespace {

BiPoly random_poly(CorpusRng& rng, int degree, bool quadratic = false) {
    BiPoly p;
    for (int i = 0; i <= degree; ++i)
        for (int j = 0; i + j <= degree; ++j) {
            if (!rng.chance(1, 2)) continue;
            Scalar c(rng.rational(5));
            if (quadratic && rng.chance(1, 3)) c += Scalar::quadratic(0, rng.rational(3, true), -3);
            p.add_term({i, j}, c);
        }
    return p;
}

ErrorKind parse_failure(const std::string& text, std::size_t* offset = nullptr) {
    try {
        parse_endo(text);
    } catch (const ParseError& e) {
        if (offset) *offset = e.offset();
        return e.kind();
    }
    FAIL("parse unexpectedly succeeded: " << text);
    return ErrorKind::BadInput;
}

}  // namespace

TEST_CASE("parse and print") {
    PlaneEndo f = endo("(2*X + Y^3, 3*Y)");
    CHECK(f.f1 == BiPoly::monomial(q(2), 1, 0) + BiPoly::monomial(q(1), 0, 3));
    CHECK(f.f2 == BiPoly::monomial(q(3), 0, 1));
    CHECK(f.str() == "(2*X + Y^3, 3*Y)");
    CHECK(endo("(X + 1/25*Y^3, Y)").f1.coeff(0, 3) == q(1, 25));
    CHECK(endo("(2X+Y^3, 3Y)") == f);
    CHECK(endo("( [0, 1, -1]*X , -Y )").f1.coeff(1, 0) == Scalar::sqrt_of(-1));
    CHECK(endo("((X+Y)^2, Y)").f1 == poly("X^2 + 2*X*Y + Y^2"));
}

TEST_CASE("parse errors carry offsets") {
    std::size_t offset = 0;
    CHECK(parse_failure("(X*, Y)", &offset) == ErrorKind::SyntaxError);
    CHECK(offset == 3);
    CHECK(parse_failure("(Z, Y)", &offset) == ErrorKind::UnknownVariable);
    CHECK(offset == 1);
    CHECK(parse_failure("(X, Y") == ErrorKind::SyntaxError);
    CHECK(parse_failure("(X, Y) trailing") == ErrorKind::SyntaxError);
    CHECK(parse_failure("(X, t*Y)") == ErrorKind::UnknownVariable);
}

TEST_CASE("printing round trips through the parser") {
    CorpusRng rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        PlaneEndo f{random_poly(rng, 4, trial % 2 == 1), random_poly(rng, 4)};
        CHECK(parse_endo(f.str()) == f);
    }
}

TEST_CASE("family parse and print") {
    FamilyEndo fam = parse_family("(X + t*Y, Y)");
    CHECK(fam.str() == "(X + t*Y, Y)");
    FamilyEndo neg = parse_family("(X + t^-1*Y^2, (2 + t)*Y)");
    CHECK(parse_family(neg.str()) == neg);
    CHECK(specialize(neg, q(2)) == endo("(X + 1/2*Y^2, 4*Y)"));
}

TEST_CASE("composition examples") {
    CHECK(compose(endo("(2X, 3Y)"), endo("(X+Y, Y)")) == endo("(2X+2Y, 3Y)"));
    PlaneEndo phi = endo("(X, Y+X^2)");
    PlaneEndo phi_inv = endo("(X, Y-X^2)");
    CHECK(compose(phi, compose(endo("(2X, 3Y)"), phi_inv)) == endo("(2X, 3Y+X^2)"));
    PlaneEndo f = endo("(X^2 - 1/3*Y, X*Y + 2)");
    CHECK(compose(f, PlaneEndo::identity()) == f);
    CHECK(compose(PlaneEndo::identity(), f) == f);
}

TEST_CASE("composition is associative") {
    CorpusRng rng(9);
    for (int trial = 0; trial < 20; ++trial) {
        PlaneEndo f{random_poly(rng, 2), random_poly(rng, 2)};
        PlaneEndo g{random_poly(rng, 2), random_poly(rng, 2)};
        PlaneEndo h{random_poly(rng, 2), random_poly(rng, 2)};
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    }
}

TEST_CASE("Jacobian and derivative") {
    CHECK(jacobian_det(endo("(2X+Y^3, 3Y)")) == poly("6"));
    CHECK(jacobian_det(endo("(Y, X+Y^2)")) == poly("-1"));
    CHECK(jacobian_det(PlaneEndo::identity()) == poly("1"));
    CHECK(derivative_at(endo("(2X+Y^3, 3Y)"), {0, 0}) == Matrix2{2, 0, 0, 3});
    CHECK(derivative_at(endo("(Y, X+Y^2)"), {0, 0}) == Matrix2{0, 1, 1, 0});
    CHECK(derivative_at(PlaneEndo::identity(), {q(7), q(-2, 3)}) == Matrix2::identity());
}

TEST_CASE("chain rule for Jacobian determinants") {
    CorpusRng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        PlaneEndo f{random_poly(rng, 2), random_poly(rng, 2)};
        PlaneEndo g{random_poly(rng, 2), random_poly(rng, 2)};
        BiPoly lhs = jacobian_det(compose(f, g));
        BiPoly jf = jacobian_det(f);
        CHECK(lhs == jf.compose(g.f1, g.f2) * jacobian_det(g));
    }
}

TEST_CASE("affine and triangular maps") {
    AffineMap a{{1, 2, 3, 4}, q(1), q(-1)};
    CHECK(compose(a.endo(), a.inverse().endo()).is_identity());
    CHECK(AffineMap::from_endo(a.endo()) == a);
    CHECK_FALSE(AffineMap::from_endo(endo("(X, X)")).has_value());
    auto t = TriangularMap::from_endo(endo("(2X + Y^3 - Y, 3Y + 1)"));
    REQUIRE(t.has_value());
    CHECK(t->degree() == 3);
    CHECK(compose(t->endo(), t->inverse().endo()).is_identity());
    CHECK_FALSE(TriangularMap::from_endo(endo("(Y, X)")).has_value());
}
