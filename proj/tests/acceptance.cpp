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

// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "planeaut/classify.hpp"
#include "planeaut/corpus.hpp"
#include "planeaut/deformation.hpp"
#include "planeaut/error.hpp"
#include "planeaut/groebner.hpp"
#include "planeaut/linalg.hpp"
#include "planeaut/membership.hpp"
#include "planeaut/normalform.hpp"
#include "planeaut/parse.hpp"

using namespace planeaut;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Automorphism aut(const char* s) { return Automorphism::from_endo(parse_endo(s)); }
Scalar q(long n, long d = 1) { return Scalar(make_rational(n, d)); }
UniPoly t_minus(long r) { return UniPoly({q(-r), q(1)}); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) detail << "first failure: " << what << "; ";
        pass = pass && ok;
    }
};

struct Element {
    Automorphism f;
    bool lf = false;
    UniPoly mu;
};

Vector coefficients(const PlaneEndo& f, int d) {
    Vector v;
    for (const BiPoly* p : {&f.f1, &f.f2})
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) v.push_back(p->coeff(i, j));
    return v;
}

std::size_t iterate_rank(const PlaneEndo& f, int k) {
    Matrix rows;
    PlaneEndo g = PlaneEndo::identity();
    for (int i = 0; i < k; ++i) {
        rows.push_back(coefficients(g, f.degree()));
        g = compose(f, g);
    }
    return rank(rows);
}

bool annihilates(const UniPoly& mu, const PlaneEndo& f) {
    PlaneEndo v = evaluate_at(mu, f);
    return v.f1.is_zero() && v.f2.is_zero();
}

PlaneEndo diagonal(const Scalar& a, const Scalar& b) {
    return {BiPoly::monomial(a, 1, 0), BiPoly::monomial(b, 0, 1)};
}

int failures = 0;

void criterion(int n, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.require(false, std::string("exception: ") + e.what());
    }
    std::cout << "criterion " << n << ": " << (out.pass ? "PASS" : "FAIL") << " (" << out.detail.str() << "time "
              << seconds_since(start) << " s)" << std::endl;
    failures += !out.pass;
}

}  // namespace

int main() {
    CorpusConfig cfg;  // seed 1, 200 entries, words of <= 6 factors, degree <= 3, height <= 3
    std::vector<CorpusEntry> corpus;
    std::vector<Element> elements;
    const int n = cfg.count;

    criterion(1, [&](Outcome& o) {
        auto start = Clock::now();
        corpus = generate_corpus(cfg);
        int agree = 0;
        for (const CorpusEntry& e : corpus) {
            Element el{Automorphism::from_endo(e.endo), false, UniPoly()};
            el.lf = is_lf(el.f);
            agree += el.lf == lf_by_reduction(el.f) && el.lf == lf_by_iterates(el.f, 4);
            elements.push_back(std::move(el));
        }
        double t = seconds_since(start);
        o.detail << "agree " << agree << "/" << n << ", runtime " << t << " s; ";
        o.require(static_cast<int>(corpus.size()) == n && agree == n, "LF tests disagree");
        o.require(t < 60, "runtime over 60 s");
    });

    criterion(2, [&](Outcome& o) {
        int round = 0, inverse = 0;
        for (const Element& el : elements) {
            PlaneEndo product = PlaneEndo::identity();
            FactorWord word = jvdk_decompose(el.f.endo);
            for (const Factor& g : word.factors()) product = compose(product, g.endo());
            round += product == el.f.endo;
            PlaneEndo inv = invert(el.f).endo;
            inverse += compose(el.f.endo, inv).is_identity() && compose(inv, el.f.endo).is_identity();
        }
        o.detail << "round trip " << round << "/" << n << ", inverse " << inverse << "/" << n << "; ";
        o.require(round == n && inverse == n, "round trip or inverse");
    });

    criterion(3, [&](Outcome& o) {
        int checked = 0, rejected = 0;
        for (const Element& el : elements) {
            if (!el.lf) {
                try {
                    triangularize(el.f);
                    o.require(false, "non-LF element triangularized");
                } catch (const Error& e) {
                    rejected += e.kind() == ErrorKind::NotTriangularizable;
                }
                continue;
            }
            Triangularization tr = triangularize(el.f);
            const int dp = tr.phi.degree();
            o.require(el.f.degree() == tr.t.degree() * dp * dp, "degree identity for " + el.f.endo.str());
            o.require(conjugates(tr.phi, tr.t.endo(), el.f.endo), "conjugation for " + el.f.endo.str());
            ++checked;
        }
        o.detail << checked << " triangularizations, " << rejected << " rejections; ";
        o.require(checked + rejected == n, "unexpected error kind");
    });

    criterion(4, [&](Outcome& o) {
        int lf = 0;
        for (Element& el : elements) {
            if (!el.lf) continue;
            el.mu = minimal_polynomial(el.f);
            o.require(annihilates(el.mu, el.f.endo), "mu(f) != 0 for " + el.f.endo.str());
            o.require(iterate_rank(el.f.endo, el.mu.degree()) == static_cast<std::size_t>(el.mu.degree()),
                      "mu not minimal for " + el.f.endo.str());
            ++lf;
        }
        o.require(minimal_polynomial(aut("(2X+Y^3, 3Y)")) == t_minus(2) * t_minus(3) * t_minus(27), "(2X+Y^3, 3Y)");
        o.require(minimal_polynomial(aut("(X+1, 2Y)")) == t_minus(1) * t_minus(1) * t_minus(2), "(X+1, 2Y)");
        o.require(minimal_polynomial(aut("(X+Y^2, Y)")) == t_minus(1) * t_minus(1), "(X+Y^2, Y)");
        o.detail << lf << " LF elements; ";
    });

    criterion(5, [&](Outcome& o) {
        for (const Element& el : elements) {
            if (!el.lf) continue;
            PseudoEigenPair p = pseudo_eigenvalues(el.f);
            o.require(el.mu.eval(p.roots.first).is_zero() && el.mu.eval(p.roots.second).is_zero(),
                      "pseudo-eigenvalue not a root for " + el.f.endo.str());
        }
        CorpusRng rng(2);
        for (int trial = 0; trial < 50; ++trial) {
            TriangularMap t = random_triangular(rng, 3, 3);
            const int d = std::max(1, t.p.degree());
            for (int s = 0; s <= 4; ++s) {
                std::vector<Scalar> expect;
                for (int k = 0; d * k <= s; ++k)
                    for (int l = 0; d * k + l <= s; ++l) expect.push_back(t.a.pow(k) * t.b.pow(l));
                std::vector<Scalar> got = pullback_spectrum(t, s);
                std::sort(expect.begin(), expect.end());
                std::sort(got.begin(), got.end());
                o.require(got == expect, "pullback spectrum of " + t.endo().str());
            }
        }
        o.detail << "50 triangular maps, s <= 4; ";
    });

    criterion(6, [&](Outcome& o) {
        int semisimple = 0;
        for (const Element& el : elements) {
            if (!el.lf) continue;
            bool diagonalized = false;
            try {
                DiagonalForm d = diagonalize(el.f);
                diagonalized = true;
                o.require(d.psi.degree() <= el.f.degree(), "deg psi > deg f for " + el.f.endo.str());
                o.require(conjugates(d.psi, d.diagonal(), el.f.endo), "diagonalizer for " + el.f.endo.str());
            } catch (const Error& e) {
                o.require(e.kind() == ErrorKind::NotSemisimple, e.what());
            }
            o.require(diagonalized == is_squarefree(el.mu), "squarefree vs diagonalize for " + el.f.endo.str());
            semisimple += diagonalized;
        }
        o.detail << semisimple << " diagonalized; ";
    });

    criterion(7, [&](Outcome& o) {
        CorpusRng rng(3);
        int positive = 0;
        auto nonunit = [&rng] {
            Scalar s;
            do s = rng.rational(3, true);
            while (s.is_one());
            return s;
        };
        for (int trial = 0; trial < 50; ++trial) {
            Scalar a1 = nonunit(), b1 = rng.rational(3, true);
            Scalar a2 = rng.chance(1, 2) ? b1 : nonunit(), b2 = rng.chance(1, 2) ? a1 : rng.rational(3, true);
            PlaneEndo f = random_conjugate_of(rng, diagonal(a1, b1), 2, 2);
            PlaneEndo g = random_conjugate_of(rng, diagonal(a2, b2), 2, 2);
            const bool same = (a1 == a2 && b1 == b2) || (a1 == b2 && b1 == a2);
            auto psi = conjugacy_test_semisimple(Automorphism::from_endo(f), Automorphism::from_endo(g));
            o.require(psi.has_value() == same, "verdict for " + f.str() + " vs " + g.str());
            if (psi) {
                o.require(conjugates(*psi, g, f), "conjugator for " + f.str());
                ++positive;
            }
        }
        o.detail << "50 pairs, " << positive << " conjugate; ";
    });

    criterion(8, [&](Outcome& o) {
        for (const Element& el : elements) {
            DegenerationWitness w = closure_witness(el.f);
            const std::string s = el.f.endo.str();
            o.require(specialization_consistent(w, q(1)) && specialization_consistent(w, q(1, 2)),
                      "specialization for " + s);
            o.require(limit_at_zero(w.family) == w.limit, "limit for " + s);
            o.require(w.limit_semisimple, "limit not semisimple for " + s);
            o.require(w.limit_jac == w.source_jac, "Jacobian for " + s);
            if (el.lf) o.require(w.limit_trace == w.source_trace, "trace for " + s);
            o.require(w.limit_in_class == is_semisimple(el.f), "closure verdict for " + s);
        }
        DegenerationWitness u = closure_witness(aut("(X+Y, Y)"));
        o.require(u.limit.is_identity() && !u.limit_in_class, "(X+Y, Y)");
        DegenerationWitness s = closure_witness(aut("(2X+Y^3, 3Y)"));
        o.require(s.limit == parse_endo("(2X, 3Y)") && s.limit_in_class, "(2X+Y^3, 3Y)");
        DegenerationWitness h = closure_witness(aut("(Y, X+Y^2)"));
        o.require(h.limit == parse_endo("(Y, X)") && h.family == parse_family("(Y, X + t*Y^2)"), "(Y, X+Y^2)");
        o.detail << n << " witnesses plus 3 examples; ";
    });

    criterion(9, [&](Outcome& o) {
        ClassificationReport h = full_report(parse_endo("(Y, X+Y^2)"));
        o.require(!h.is_lf, "Henon LF");
        o.require(h.dynamical_degree == 2, "Henon dynamical degree");
        o.require(h.fixed_locus.kind == FixedLocus::Kind::FiniteScheme && h.fixed_locus.length == 2,
                  "Henon fixed scheme");
        auto dim = quotient_dimension({parse_poly("Y - X"), parse_poly("X + Y^2 - Y")});
        o.require(dim && *dim == 2, "quotient dimension");
        o.require(cyclic_reduce(aut("(Y, X+Y^2)")).reduced.word_degree() == 2, "word degree");
        ClassificationReport s = full_report(parse_endo("(2X+Y^3, 3Y)"));
        o.require(s.fixed_locus.kind == FixedLocus::Kind::SimplePoint && s.fixed_locus.point == Point{0, 0},
                  "SimplePoint (0, 0)");
        o.require(s.in_S, "in_S");
    });

    criterion(10, [&](Outcome& o) {
        o.require(hermann_bound(2, 1, 2) == 17, "K_1 = 17");
        CorpusRng rng(4);
        double worst = 0;
        for (int trial = 0; trial < 20; ++trial) {
            PlaneEndo f = random_s_element(rng, 3, 3);
            auto start = Clock::now();
            FixedPointCertificates c = express_fixed_point(Automorphism::from_endo(f));
            worst = std::max(worst, seconds_since(start));
            const Integer bound = hermann_bound(2, f.degree(), 2);
            o.require(c.x_minus_alpha.verify() && c.y_minus_beta.verify(), "certificate for " + f.str());
            o.require(c.x_minus_alpha.bound == bound && c.y_minus_beta.bound == bound, "bound for " + f.str());
            o.require(Integer(c.x_minus_alpha.multiplier_degree()) <= bound &&
                          Integer(c.y_minus_beta.multiplier_degree()) <= bound,
                      "degree for " + f.str());
        }
        o.detail << "20 certificates, slowest " << worst << " s; ";
        o.require(worst < 10, "membership over 10 s");
    });

    return failures == 0 ? 0 : 1;
}
