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

#include "planeaut/bipoly.hpp"

#include "planeaut/error.hpp"

namespace planeaut {

std::string monomial_string(const Monomial& m) {
    std::string s;
    if (m.x > 0) s = m.x == 1 ? "X" : "X^" + std::to_string(m.x);
    if (m.y > 0) {
        if (!s.empty()) s += "*";
        s += m.y == 1 ? "Y" : "Y^" + std::to_string(m.y);
    }
    return s;
}

CoeffText coeff_text(const Scalar& c) {
    CoeffText t;
    if (c.is_rational()) {
        t.negative = sgn(c.a()) < 0;
        Rational mag = abs(c.a());
        t.magnitude = compact_string(mag);
        t.unit = mag == 1;
    } else {
        t.magnitude = c.compact();
    }
    return t;
}

BiPoly in_x(const UniPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k) r.add_term(Monomial{k, 0}, p.coeffs()[k]);
    return r;
}

BiPoly in_y(const UniPoly& p) {
    BiPoly r;
    for (int k = 0; k <= p.degree(); ++k) r.add_term(Monomial{0, k}, p.coeffs()[k]);
    return r;
}

UniPoly as_upoly_y(const BiPoly& p) {
    std::vector<Scalar> c;
    for (const auto& [m, v] : p.terms()) {
        if (m.x != 0) throw Error(ErrorKind::BadInput, "polynomial involves X: " + p.str());
        if (static_cast<int>(c.size()) <= m.y) c.resize(m.y + 1, Scalar(0));
        c[m.y] = v;
    }
    return UniPoly(std::move(c), 'Y');
}

UniPoly as_upoly_x(const BiPoly& p) {
    std::vector<Scalar> c;
    for (const auto& [m, v] : p.terms()) {
        if (m.y != 0) throw Error(ErrorKind::BadInput, "polynomial involves Y: " + p.str());
        if (static_cast<int>(c.size()) <= m.x) c.resize(m.x + 1, Scalar(0));
        c[m.x] = v;
    }
    return UniPoly(std::move(c), 'X');
}

UniPoly specialize_x(const BiPoly& p, const Scalar& x0) {
    std::vector<Scalar> c(p.is_zero() ? 0 : p.degree_y() + 1, Scalar(0));
    for (const auto& [m, v] : p.terms()) c[m.y] += v * x0.pow(m.x);
    return UniPoly(std::move(c), 'Y');
}

bool is_rational(const BiPoly& p) {
    for (const auto& [m, c] : p.terms())
        if (!c.is_rational()) return false;
    return true;
}

namespace detail {

namespace {

// Integer numerators over the lcm of the denominators, laid out densely.
bool scaled_numerators(const BiPoly& p, Integer& den) {
    den = 1;
    for (const auto& [m, c] : p.terms()) {
        if (!c.is_rational()) return false;
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.a().get_den_mpz_t());
    }
    return true;
}

}  // namespace

std::optional<BiPoly> multiply_rational(const BiPoly& a, const BiPoly& b) {
    Integer da, db;
    if (!scaled_numerators(a, da) || !scaled_numerators(b, db)) return std::nullopt;
    auto numerators = [](const BiPoly& p, const Integer& den) {
        std::vector<std::pair<Monomial, Integer>> out;
        out.reserve(p.terms().size());
        for (const auto& [m, c] : p.terms()) out.emplace_back(m, Integer(c.a().get_num() * (den / c.a().get_den())));
        return out;
    };
    auto na = numerators(a, da);
    auto nb = numerators(b, db);
    const int nx = a.degree_x() + b.degree_x() + 1;
    const int ny = a.degree_y() + b.degree_y() + 1;
    std::vector<Integer> acc(static_cast<std::size_t>(nx) * ny);
    for (const auto& [ma, ca] : na)
        for (const auto& [mb, cb] : nb) {
            std::size_t k = static_cast<std::size_t>(ma.x + mb.x) * ny + (ma.y + mb.y);
            mpz_addmul(acc[k].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        }
    const Integer den = da * db;
    BiPoly r;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const Integer& v = acc[static_cast<std::size_t>(i) * ny + j];
            if (sgn(v) != 0) r.add_term(Monomial{i, j}, Scalar(make_rational(v, den)));
        }
    return r;
}

}  // namespace detail

namespace {

// Coefficients of p as a polynomial in Y, each a polynomial in X.
std::vector<UniPoly> y_coefficients(const BiPoly& p) {
    std::vector<UniPoly> out(p.degree_y() + 1, UniPoly({}, 'X'));
    std::vector<std::vector<Scalar>> dense(out.size());
    for (const auto& [m, c] : p.terms()) {
        auto& row = dense[m.y];
        if (static_cast<int>(row.size()) <= m.x) row.resize(m.x + 1, Scalar(0));
        row[m.x] = c;
    }
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = UniPoly(std::move(dense[j]), 'X');
    return out;
}

}  // namespace

UniPoly resultant_y(const BiPoly& p, const BiPoly& q) {
    if (p.is_zero() || q.is_zero()) return UniPoly({}, 'X');
    auto pc = y_coefficients(p);
    auto qc = y_coefficients(q);
    const int m = static_cast<int>(pc.size()) - 1;
    const int n = static_cast<int>(qc.size()) - 1;
    const int size = m + n;
    if (size == 0) return UniPoly({Scalar(1)}, 'X');
    // Sylvester matrix, highest Y power in the first column.
    std::vector<std::vector<UniPoly>> a(size, std::vector<UniPoly>(size, UniPoly({}, 'X')));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + k] = pc[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + k] = qc[n - k];
    // Fraction-free Bareiss elimination over K[X].
    bool negate = false;
    UniPoly prev({Scalar(1)}, 'X');
    for (int k = 0; k + 1 < size; ++k) {
        if (a[k][k].is_zero()) {
            int piv = k + 1;
            while (piv < size && a[piv][k].is_zero()) ++piv;
            if (piv == size) return UniPoly({}, 'X');
            std::swap(a[k], a[piv]);
            negate = !negate;
        }
        for (int i = k + 1; i < size; ++i)
            for (int j = k + 1; j < size; ++j) {
                UniPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = divmod(num, prev).first;
            }
        prev = a[k][k];
        for (int i = k + 1; i < size; ++i) a[i][k] = UniPoly({}, 'X');
    }
    UniPoly det = a[size - 1][size - 1];
    return (negate ? -det : det).relabel('X');
}

}  // namespace planeaut
