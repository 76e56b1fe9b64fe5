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
#include "planeaut/deformation.hpp"
#include "planeaut/error.hpp"
#include "planeaut/normalform.hpp"
#include "support.hpp"

using namespace planeaut;
using namespace planeaut::testing;

namespace {

FamilyEndo family(const std::string& s) { return parse_family(s); }

ErrorKind failure(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::BadInput;
}

}  // namespace

TEST_CASE("family conjugation") {
    CHECK(family_conjugate(family("(t*X, Y)"), endo("(X+Y, Y)")) == family("(X + t*Y, Y)"));
    // Literal h_t∘f∘h_t⁻¹ with h_t = (tX, tY); its inverse family gives (Y, X + t*Y^2).
    CHECK(family_conjugate(family("(t*X, t*Y)"), endo("(Y, X+Y^2)")) == family("(Y, X + t^-1*Y^2)"));
    CHECK(family_conjugate(family("(t^-1*X, t^-1*Y)"), endo("(Y, X+Y^2)")) == family("(Y, X + t*Y^2)"));
    CHECK(family_conjugate(family("(X, Y)"), endo("(2X+Y^3, 3Y)")) == lift(endo("(2X+Y^3, 3Y)")));
    CHECK(family_conjugate(family("(X + Y^2, Y)"), endo("(2X, 3Y)")) ==
          lift(compose(compose(endo("(X+Y^2, Y)"), endo("(2X, 3Y)")), endo("(X-Y^2, Y)"))));
    CHECK(failure([] { family_conjugate(family("(X + t*Y, Y)"), endo("(2X, 3Y)")); }) ==
          ErrorKind::NonInvertibleFamily);
    CHECK(failure([] { family_conjugate(family("(X + t, Y)"), endo("(2X, 3Y)")); }) ==
          ErrorKind::NonInvertibleFamily);
}

TEST_CASE("limits") {
    CHECK(limit_at_zero(family("(X + t*Y, Y)")) == endo("(X, Y)"));
    CHECK(limit_at_zero(family("(Y, X + t*Y^2)")) == endo("(Y, X)"));
    try {
        limit_at_zero(family("(X + t^-1*Y^2, Y)"));
        FAIL("expected NegativeOrder");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NegativeOrder);
        CHECK(std::string(e.what()).find("Y^2") != std::string::npos);
    }
}

TEST_CASE("closure witness examples") {
    DegenerationWitness u = closure_witness(aut("(X+Y, Y)"));
    CHECK(u.family == family("(X + t*Y, Y)"));
    CHECK(u.limit.is_identity());
    CHECK_FALSE(u.limit_in_class);

    DegenerationWitness s = closure_witness(aut("(2X+Y^3, 3Y)"));
    CHECK(s.family == family("(2*X + t*Y^3, 3*Y)"));
    CHECK(s.limit == endo("(2X, 3Y)"));
    CHECK(s.limit_in_class);

    DegenerationWitness h = closure_witness(aut("(Y, X+Y^2)"));
    CHECK(h.family == family("(Y, X + t*Y^2)"));
    CHECK(h.limit == endo("(Y, X)"));
    CHECK(h.limit_semisimple);
    CHECK_FALSE(h.limit_in_class);
    DiagonalForm d = diagonalize(Automorphism::from_endo(h.limit));
    CHECK(d.a == q(-1));
    CHECK(d.b == q(1));
}

TEST_CASE("witnesses on a corpus") {
    CorpusConfig cfg;
    cfg.count = 60;
    cfg.seed = 6;
    for (const CorpusEntry& e : generate_corpus(cfg)) {
        Automorphism f = Automorphism::from_endo(e.endo);
        DegenerationWitness w = closure_witness(f);
        CHECK(specialization_consistent(w, q(1)));
        CHECK(specialization_consistent(w, q(1, 2)));
        CHECK(specialization_consistent(w, q(-3, 5)));
        CHECK(limit_at_zero(w.family) == w.limit);
        CHECK(w.limit_semisimple);
        CHECK(w.limit_jac == w.source_jac);
        if (is_lf(f)) CHECK(w.limit_trace == w.source_trace);
        CHECK(w.limit_in_class == is_semisimple(f));
    }
}

TEST_CASE("fixed points") {
    CHECK(find_fixed_point(endo("(Y, X+Y^2)")) == Point{0, 0});
    Point p = find_fixed_point(endo("(Y, X + Y^2 - 2)"));
    CHECK(apply(endo("(Y, X + Y^2 - 2)"), p) == p);
    Point r = find_fixed_point(endo("(Y, X + Y^2 - 3)"));
    CHECK_FALSE(r.x.is_rational());
    CHECK(apply(endo("(Y, X + Y^2 - 3)"), r) == r);
}
