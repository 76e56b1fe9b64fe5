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

#include "planeaut/membership.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "planeaut/classify.hpp"
#include "planeaut/error.hpp"
#include "planeaut/groebner.hpp"
#include "planeaut/linalg.hpp"

namespace planeaut {

namespace {

constexpr std::size_t kDefaultMaxUnknowns = 10000;

std::vector<Monomial> monomials_up_to(int d) {
    std::vector<Monomial> out;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) out.push_back({i, j});
    return out;
}

// Exact solve for multipliers of degree <= d.
std::optional<std::vector<BiPoly>> solve_at_degree(const BiPoly& p, const std::vector<BiPoly>& gens, int d) {
    auto monos = monomials_up_to(d);
    int top = std::max(p.degree(), 0);
    for (const auto& g : gens) top = std::max(top, d + std::max(g.degree(), 0));
    std::map<Monomial, std::size_t> row;
    for (const auto& m : monomials_up_to(top)) row.emplace(m, row.size());
    std::size_t cols = gens.size() * monos.size();
    Matrix a(row.size(), Vector(cols, Scalar(0)));
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t k = 0; k < monos.size(); ++k)
            for (const auto& [m, c] : gens[g].terms())
                a[row.at({m.x + monos[k].x, m.y + monos[k].y})][g * monos.size() + k] += c;
    Vector b(row.size(), Scalar(0));
    for (const auto& [m, c] : p.terms()) b[row.at(m)] = c;
    auto x = solve(std::move(a), std::move(b));
    if (!x) return std::nullopt;
    std::vector<BiPoly> lambdas(gens.size());
    for (std::size_t g = 0; g < gens.size(); ++g)
        for (std::size_t k = 0; k < monos.size(); ++k) lambdas[g].add_term(monos[k], (*x)[g * monos.size() + k]);
    return lambdas;
}

}  // namespace

int MembershipCertificate::multiplier_degree() const {
    int d = 0;
    for (const auto& l : multipliers) d = std::max(d, l.degree());
    return d;
}

bool MembershipCertificate::verify() const {
    if (generators.size() != multipliers.size()) return false;
    BiPoly sum;
    for (std::size_t i = 0; i < generators.size(); ++i) sum += multipliers[i] * generators[i];
    return sum == target && Integer(multiplier_degree()) <= bound;
}

Integer hermann_bound(unsigned n, unsigned d, unsigned s) {
    if (n >= 32) throw Error(ErrorKind::BoundTooLarge, "exponent 2^" + std::to_string(n));
    Integer base = Integer(s) * d;
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), 1UL << n);
    return Integer(d) + power;
}

std::size_t max_unknowns() {
    const char* env = std::getenv("PLANEAUT_MAX_UNKNOWNS");
    if (env == nullptr || *env == '\0') return kDefaultMaxUnknowns;
    try {
        return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
        throw Error(ErrorKind::BadInput, std::string("PLANEAUT_MAX_UNKNOWNS is not a number: ") + env);
    }
}

std::optional<MembershipCertificate> ideal_membership_bounded(const BiPoly& p, const std::vector<BiPoly>& gens,
                                                              const Integer& bound) {
    return ideal_membership_bounded(p, gens, bound, max_unknowns());
}

std::optional<MembershipCertificate> ideal_membership_bounded(const BiPoly& p, const std::vector<BiPoly>& gens,
                                                              const Integer& bound, std::size_t unknown_cap) {
    if (!normal_form(p, groebner_basis(gens)).is_zero()) return std::nullopt;
    for (int d = 0; Integer(d) <= bound; ++d) {
        std::size_t unknowns = gens.size() * static_cast<std::size_t>((d + 1) * (d + 2) / 2);
        if (unknowns > unknown_cap)
            throw Error(ErrorKind::BoundTooLarge, std::to_string(unknowns) + " unknowns at multiplier degree " +
                                                      std::to_string(d) + " exceed the cap " +
                                                      std::to_string(unknown_cap));
        if (auto lambdas = solve_at_degree(p, gens, d)) {
            MembershipCertificate cert{p, gens, std::move(*lambdas), bound};
            if (!cert.verify()) throw std::logic_error("membership certificate does not re-expand");
            return cert;
        }
    }
    return std::nullopt;
}

FixedPointCertificates express_fixed_point(const Automorphism& f) {
    FixedLocus fl = fixed_locus(f);
    if (fl.kind != FixedLocus::Kind::SimplePoint)
        throw Error(ErrorKind::NotInS, "fixed locus of " + f.endo.str() + " is " + fl.kind_name());
    Integer k = hermann_bound(2, static_cast<unsigned>(std::max(1, f.degree())), 2);
    std::vector<BiPoly> gens{f.endo.f1 - BiPoly::X(), f.endo.f2 - BiPoly::Y()};
    auto cx = ideal_membership_bounded(BiPoly::X() - BiPoly(fl.point.x), gens, k);
    auto cy = ideal_membership_bounded(BiPoly::Y() - BiPoly(fl.point.y), gens, k);
    if (!cx || !cy) throw std::logic_error("fixed point coordinate outside the fixed-point ideal");
    return {fl.point, std::move(*cx), std::move(*cy)};
}

}  // namespace planeaut
