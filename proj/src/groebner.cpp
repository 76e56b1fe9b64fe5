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

#include "planeaut/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace planeaut {

namespace {

bool divides(const Monomial& a, const Monomial& b) { return a.x <= b.x && a.y <= b.y; }

Monomial lcm(const Monomial& a, const Monomial& b) { return {std::max(a.x, b.x), std::max(a.y, b.y)}; }

BiPoly monic(const BiPoly& p) { return p * p.terms().at(grlex_leading(p)).inverse(); }

BiPoly shift(const BiPoly& p, const Monomial& by, const Scalar& c) {
    BiPoly r;
    for (const auto& [m, v] : p.terms()) r.add_term({m.x + by.x, m.y + by.y}, v * c);
    return r;
}

BiPoly s_polynomial(const BiPoly& f, const BiPoly& g) {
    Monomial lf = grlex_leading(f), lg = grlex_leading(g);
    Monomial l = lcm(lf, lg);
    return shift(f, {l.x - lf.x, l.y - lf.y}, f.terms().at(lf).inverse()) -
           shift(g, {l.x - lg.x, l.y - lg.y}, g.terms().at(lg).inverse());
}

}  // namespace

Monomial grlex_leading(const BiPoly& p) {
    if (p.is_zero()) throw std::logic_error("leading monomial of zero");
    Monomial best = p.terms().begin()->first;
    GrlexOrder less;
    for (const auto& [m, c] : p.terms())
        if (less(best, m)) best = m;
    return best;
}

BiPoly normal_form(const BiPoly& p, const std::vector<BiPoly>& basis) {
    BiPoly rest = p, rem;
    while (!rest.is_zero()) {
        Monomial lm = grlex_leading(rest);
        Scalar lc = rest.terms().at(lm);
        bool reduced = false;
        for (const auto& g : basis) {
            Monomial lg = grlex_leading(g);
            if (!divides(lg, lm)) continue;
            rest -= shift(g, {lm.x - lg.x, lm.y - lg.y}, lc / g.terms().at(lg));
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(lm, lc);
            rest.add_term(lm, -lc);
        }
    }
    return rem;
}

std::vector<BiPoly> groebner_basis(std::vector<BiPoly> gens) {
    std::vector<BiPoly> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(monic(p));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        Monomial li = grlex_leading(g[i]), lj = grlex_leading(g[j]);
        // Buchberger's first criterion: coprime leading monomials.
        if (std::min(li.x, lj.x) == 0 && std::min(li.y, lj.y) == 0) continue;
        BiPoly r = normal_form(s_polynomial(g[i], g[j]), g);
        if (r.is_zero()) continue;
        g.push_back(monic(r));
        for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
    }
    // Minimalize, then interreduce.
    std::vector<BiPoly> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        Monomial li = grlex_leading(g[i]);
        bool redundant = false;
        for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial lj = grlex_leading(g[j]);
            if (divides(lj, li) && (lj != li || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<BiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        Monomial lm = grlex_leading(minimal[i]);
        BiPoly tail = minimal[i];
        tail.add_term(lm, -tail.terms().at(lm));
        minimal[i] = BiPoly::monomial(Scalar(1), lm.x, lm.y) + normal_form(tail, others);
    }
    GrlexOrder less;
    std::sort(minimal.begin(), minimal.end(),
              [&](const BiPoly& a, const BiPoly& b) { return less(grlex_leading(a), grlex_leading(b)); });
    return minimal;
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<BiPoly>& basis) {
    int max_x = -1, max_y = -1;
    std::vector<Monomial> leads;
    for (const auto& g : basis) {
        Monomial l = grlex_leading(g);
        leads.push_back(l);
        if (l.y == 0) max_x = max_x < 0 ? l.x : std::min(max_x, l.x);
        if (l.x == 0) max_y = max_y < 0 ? l.y : std::min(max_y, l.y);
    }
    if (max_x < 0 || max_y < 0) return std::nullopt;
    std::vector<Monomial> out;
    for (int i = 0; i < max_x; ++i)
        for (int j = 0; j < max_y; ++j) {
            Monomial m{i, j};
            if (std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return divides(l, m); }))
                out.push_back(m);
        }
    std::sort(out.begin(), out.end(), GrlexOrder{});
    return out;
}

std::optional<std::size_t> quotient_dimension(const std::vector<BiPoly>& gens) {
    auto std_monos = standard_monomials(groebner_basis(gens));
    if (!std_monos) return std::nullopt;
    return std_monos->size();
}

Matrix multiplication_matrix(const std::vector<BiPoly>& basis, const std::vector<Monomial>& standard, int var) {
    std::size_t n = standard.size();
    Matrix m(n, Vector(n, Scalar(0)));
    for (std::size_t j = 0; j < n; ++j) {
        Monomial shifted = standard[j];
        (var == 0 ? shifted.x : shifted.y) += 1;
        BiPoly nf = normal_form(BiPoly::monomial(Scalar(1), shifted.x, shifted.y), basis);
        for (const auto& [mono, c] : nf.terms()) {
            auto it = std::find(standard.begin(), standard.end(), mono);
            if (it == standard.end()) throw std::logic_error("normal form outside the standard basis");
            m[static_cast<std::size_t>(it - standard.begin())][j] = c;
        }
    }
    return m;
}

}  // namespace planeaut
