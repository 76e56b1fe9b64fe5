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

#include "planeaut/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace planeaut {

int CorpusRng::range(int lo, int hi) {
    if (hi < lo) throw std::logic_error("empty range");
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next() % span);
}

Rational CorpusRng::rational(int height, bool nonzero) {
    int num = 0;
    do {
        num = range(-height, height);
    } while (nonzero && num == 0);
    int den = range(1, height);
    return make_rational(num, den);
}

namespace {

UniPoly random_p(CorpusRng& rng, int degree, int height, bool fix_origin) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    for (int k = fix_origin ? 1 : 0; k < degree; ++k)
        if (rng.chance(2, 3)) c[k] = rng.rational(height);
    c[degree] = rng.rational(height, true);
    return UniPoly(std::move(c), 'Y');
}

Scalar eigen_draw(CorpusRng& rng, int height) {
    if (rng.chance(1, 4)) return Scalar(1);
    return rng.rational(height, true);
}

PlaneEndo word_composite(const std::vector<Factor>& w) {
    PlaneEndo acc = PlaneEndo::identity();
    for (const auto& f : w) acc = compose(acc, f.endo());
    return acc;
}

std::vector<Factor> inverse_word(const std::vector<Factor>& w) {
    std::vector<Factor> inv;
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back(it->inverse());
    return inv;
}

// phi∘t∘phi⁻¹ with phi of at most two factors.
CorpusEntry conjugate_entry(CorpusRng& rng, const CorpusConfig& cfg) {
    for (int attempt = 0;; ++attempt) {
        int budget = attempt < 50 ? cfg.max_degree : 1;
        TriangularMap t;
        t.a = eigen_draw(rng, cfg.height);
        t.b = eigen_draw(rng, cfg.height);
        t.c = rng.chance(1, 2) ? Scalar(0) : Scalar(rng.rational(cfg.height));
        int tdeg = rng.range(0, std::min(cfg.max_triangular_degree, budget));
        t.p = tdeg == 0 ? UniPoly(std::vector<Scalar>{}, 'Y') : random_p(rng, tdeg, cfg.height, false);
        std::vector<Factor> phi;
        int nphi = rng.range(0, 2);
        bool affine_first = rng.chance(1, 2);
        for (int i = 0; i < nphi; ++i) {
            if ((i % 2 == 0) == affine_first)
                phi.emplace_back(random_affine(rng, cfg.height));
            else
                phi.emplace_back(random_triangular(rng, std::min(cfg.max_triangular_degree, 3), cfg.height));
        }
        std::vector<Factor> word = phi;
        word.emplace_back(t);
        auto inv = inverse_word(phi);
        word.insert(word.end(), inv.begin(), inv.end());
        PlaneEndo f = word_composite(word);
        if (f.degree() <= cfg.max_degree) return {f, word, "conjugate"};
    }
}

// Alternating word of origin-fixing factors, moved by a translation.
CorpusEntry word_entry(CorpusRng& rng, const CorpusConfig& cfg) {
    int n = rng.range(1, std::max(1, cfg.max_factors));
    bool affine = rng.chance(1, 2);
    std::vector<Factor> w;
    int product = 1;
    for (int i = 0; i < n; ++i, affine = !affine) {
        if (affine) {
            w.emplace_back(random_affine(rng, cfg.height, false));
            continue;
        }
        int room = std::min(cfg.max_triangular_degree, cfg.max_degree / product);
        if (room < 2) {
            w.emplace_back(random_affine(rng, cfg.height, false));
            continue;
        }
        int deg = rng.range(2, room);
        product *= deg;
        w.emplace_back(TriangularMap{rng.rational(cfg.height, true), random_p(rng, deg, cfg.height, true),
                                     rng.rational(cfg.height, true), 0});
    }
    AffineMap move = AffineMap::translation(rng.rational(cfg.height), rng.rational(cfg.height));
    std::vector<Factor> word{Factor(move)};
    word.insert(word.end(), w.begin(), w.end());
    word.emplace_back(move.inverse());
    return {word_composite(word), word, "word"};
}

}  // namespace

TriangularMap random_triangular(CorpusRng& rng, int max_degree, int height) {
    TriangularMap t;
    t.a = rng.rational(height, true);
    t.b = rng.rational(height, true);
    t.c = rng.rational(height);
    int deg = rng.range(1, std::max(1, max_degree));
    t.p = random_p(rng, deg, height, false);
    return t;
}

AffineMap random_affine(CorpusRng& rng, int height, bool translation) {
    for (;;) {
        AffineMap a;
        a.m = {rng.rational(height), rng.rational(height), rng.rational(height), rng.rational(height)};
        if (a.m.det().is_zero()) continue;
        if (translation) {
            a.v1 = rng.rational(height);
            a.v2 = rng.rational(height);
        }
        return a;
    }
}

std::vector<CorpusEntry> generate_corpus(const CorpusConfig& cfg) {
    CorpusRng rng(cfg.seed);
    std::vector<CorpusEntry> out;
    for (int i = 0; i < cfg.count; ++i) out.push_back(rng.chance(1, 2) ? conjugate_entry(rng, cfg) : word_entry(rng, cfg));
    return out;
}

PlaneEndo random_conjugate_of(CorpusRng& rng, const PlaneEndo& seed, int max_phi_degree, int height) {
    std::vector<Factor> phi{Factor(random_affine(rng, height))};
    if (max_phi_degree >= 2) phi.emplace_back(random_triangular(rng, std::min(3, max_phi_degree), height));
    if (rng.chance(1, 2)) phi.emplace_back(random_affine(rng, height));
    Automorphism p = Automorphism::from_word(phi);
    return compose(compose(p.endo, seed), invert(p).endo);
}

PlaneEndo random_s_element(CorpusRng& rng, int max_degree, int height) {
    TriangularMap t;
    do {
        t.a = rng.rational(height, true);
    } while (t.a.is_one());
    do {
        t.b = rng.rational(height, true);
    } while (t.b.is_one());
    t.c = rng.rational(height);
    t.p = random_p(rng, rng.range(1, std::max(1, max_degree)), height, false);
    AffineMap phi = random_affine(rng, height);
    return compose(compose(phi.endo(), t.endo()), phi.inverse().endo());
}

}  // namespace planeaut
