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

#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "planeaut/scalar.hpp"
#include "planeaut/upoly.hpp"

namespace planeaut {

/// Exponent pair of X^x Y^y.  The defaulted ordering is the monomial order:
/// lexicographic with the X exponent dominant.
struct Monomial {
    int x = 0;
    int y = 0;
    int degree() const noexcept { return x + y; }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept { return a < b; }
};

/// Degree-then-lex order (grlex), used by the Groebner code.
struct GrlexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const noexcept {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a < b;
    }
};

std::string monomial_string(const Monomial& m);

/// Sign, magnitude text and unit flag for printing a coefficient.
struct CoeffText {
    bool negative = false;
    std::string magnitude;
    bool unit = false;
};

CoeffText coeff_text(const Scalar& c);

/*
  Sparse bivariate polynomial with coefficients in R.  R needs value
  semantics, construction from int, ring operators and is_zero().
*/
template <class R>
class BasicBiPoly;

namespace detail {
/// Product of two polynomials with rational coefficients over a common
/// denominator; nullopt when either factor has an irrational coefficient.
std::optional<BasicBiPoly<Scalar>> multiply_rational(const BasicBiPoly<Scalar>& a, const BasicBiPoly<Scalar>& b);
}  // namespace detail

template <class R>
class BasicBiPoly {
   public:
    using Coeff = R;
    using Terms = std::map<Monomial, R, MonomialOrder>;

    BasicBiPoly() = default;
    BasicBiPoly(const R& c) {
        if (!c.is_zero()) t_.emplace(Monomial{0, 0}, c);
    }
    BasicBiPoly(int c) : BasicBiPoly(R(c)) {}

    static BasicBiPoly monomial(const R& c, int i, int j) {
        BasicBiPoly p;
        if (!c.is_zero()) p.t_.emplace(Monomial{i, j}, c);
        return p;
    }
    static BasicBiPoly X() { return monomial(R(1), 1, 0); }
    static BasicBiPoly Y() { return monomial(R(1), 0, 1); }

    const Terms& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    bool is_constant() const noexcept { return t_.empty() || (t_.size() == 1 && t_.begin()->first == Monomial{0, 0}); }

    int degree() const noexcept {
        if (t_.empty()) return kDegreeNegInf;
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.degree());
        return d;
    }
    int degree_x() const noexcept { return t_.empty() ? kDegreeNegInf : t_.rbegin()->first.x; }
    int degree_y() const noexcept {
        if (t_.empty()) return kDegreeNegInf;
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.y);
        return d;
    }

    R coeff(int i, int j) const {
        auto it = t_.find(Monomial{i, j});
        return it == t_.end() ? R(0) : it->second;
    }
    R constant_term() const { return coeff(0, 0); }

    /// Terms of total degree k.
    BasicBiPoly homogeneous_part(int k) const {
        BasicBiPoly r;
        for (const auto& [m, c] : t_)
            if (m.degree() == k) r.t_.emplace_hint(r.t_.end(), m, c);
        return r;
    }
    /// Top-degree homogeneous form (zero for the zero polynomial).
    BasicBiPoly leading_form() const { return is_zero() ? BasicBiPoly() : homogeneous_part(degree()); }

    void add_term(const Monomial& m, const R& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    BasicBiPoly operator-() const {
        BasicBiPoly r = *this;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    BasicBiPoly& operator+=(const BasicBiPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    BasicBiPoly& operator-=(const BasicBiPoly& o) {
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    BasicBiPoly& operator*=(const R& s) {
        if (s.is_zero()) {
            t_.clear();
            return *this;
        }
        for (auto it = t_.begin(); it != t_.end();) {
            it->second *= s;
            if (it->second.is_zero())
                it = t_.erase(it);
            else
                ++it;
        }
        return *this;
    }
    BasicBiPoly& operator*=(const BasicBiPoly& o) { return *this = *this * o; }

    friend BasicBiPoly operator+(BasicBiPoly a, const BasicBiPoly& b) { return a += b; }
    friend BasicBiPoly operator-(BasicBiPoly a, const BasicBiPoly& b) { return a -= b; }
    friend BasicBiPoly operator*(BasicBiPoly a, const R& s) { return a *= s; }
    friend BasicBiPoly operator*(const R& s, BasicBiPoly a) { return a *= s; }

    friend BasicBiPoly operator*(const BasicBiPoly& a, const BasicBiPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if constexpr (std::is_same_v<R, Scalar>) {
            if (auto r = detail::multiply_rational(a, b)) return std::move(*r);
        }
        const int nx = a.degree_x() + b.degree_x() + 1;
        const int ny = a.degree_y() + b.degree_y() + 1;
        std::vector<R> acc(static_cast<std::size_t>(nx) * ny, R(0));
        std::vector<char> used(acc.size(), 0);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) {
                std::size_t k = static_cast<std::size_t>(ma.x + mb.x) * ny + (ma.y + mb.y);
                acc[k] += ca * cb;
                used[k] = 1;
            }
        BasicBiPoly r;
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j) {
                std::size_t k = static_cast<std::size_t>(i) * ny + j;
                if (used[k] && !acc[k].is_zero()) r.t_.emplace_hint(r.t_.end(), Monomial{i, j}, std::move(acc[k]));
            }
        return r;
    }

    friend bool operator==(const BasicBiPoly& a, const BasicBiPoly& b) { return a.t_ == b.t_; }

    BasicBiPoly pow(unsigned e) const {
        BasicBiPoly r(R(1)), base = *this;
        while (e > 0) {
            if (e & 1u) r = r * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return r;
    }

    /// p(u, v).
    BasicBiPoly compose(const BasicBiPoly& u, const BasicBiPoly& v) const {
        if (is_zero()) return {};
        std::vector<BasicBiPoly> vpow{BasicBiPoly(R(1))};
        const int dy = degree_y();
        for (int j = 1; j <= dy; ++j) vpow.push_back(vpow.back() * v);
        // Horner in the X exponent; each step multiplies by the small u.
        BasicBiPoly acc;
        int current = degree_x();
        auto it = t_.rbegin();
        for (int i = current; i >= 0; --i) {
            if (i != current) acc = acc * u;
            BasicBiPoly row;
            for (; it != t_.rend() && it->first.x == i; ++it) row += vpow[it->first.y] * it->second;
            acc += row;
        }
        return acc;
    }

    BasicBiPoly partial_x() const {
        BasicBiPoly r;
        for (const auto& [m, c] : t_)
            if (m.x > 0) r.add_term(Monomial{m.x - 1, m.y}, c * R(m.x));
        return r;
    }
    BasicBiPoly partial_y() const {
        BasicBiPoly r;
        for (const auto& [m, c] : t_)
            if (m.y > 0) r.add_term(Monomial{m.x, m.y - 1}, c * R(m.y));
        return r;
    }

    R eval(const R& x, const R& y) const {
        R acc(0);
        for (const auto& [m, c] : t_) {
            R term = c;
            for (int i = 0; i < m.x; ++i) term *= x;
            for (int j = 0; j < m.y; ++j) term *= y;
            acc += term;
        }
        return acc;
    }

    template <class F>
    auto map_coeffs(F&& fn) const -> BasicBiPoly<decltype(fn(std::declval<const R&>()))> {
        BasicBiPoly<decltype(fn(std::declval<const R&>()))> r;
        for (const auto& [m, c] : t_) r.add_term(m, fn(c));
        return r;
    }

    /// Canonical text: terms in descending monomial order, explicit '*' and '^'.
    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            CoeffText ct = coeff_text(it->second);
            if (out.empty())
                out = ct.negative ? "-" : "";
            else
                out += ct.negative ? " - " : " + ";
            if (it->first == Monomial{0, 0})
                out += ct.magnitude;
            else if (ct.unit)
                out += monomial_string(it->first);
            else
                out += ct.magnitude + "*" + monomial_string(it->first);
        }
        return out;
    }

   private:
    Terms t_;
};

using BiPoly = BasicBiPoly<Scalar>;

/// Embeds a univariate polynomial as a polynomial in X or in Y.
BiPoly in_x(const UniPoly& p);
BiPoly in_y(const UniPoly& p);

/// Converts a polynomial that involves only Y (resp. only X) to UniPoly;
/// throws BadInput otherwise.
UniPoly as_upoly_y(const BiPoly& p);
UniPoly as_upoly_x(const BiPoly& p);

/// p(x0, Y) as a polynomial in Y.
UniPoly specialize_x(const BiPoly& p, const Scalar& x0);

/// Resultant with respect to Y, as a polynomial in X.
UniPoly resultant_y(const BiPoly& p, const BiPoly& q);

/// True when every coefficient is rational.
bool is_rational(const BiPoly& p);

}  // namespace planeaut
