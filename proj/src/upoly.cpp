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

#include "planeaut/upoly.hpp"

#include <algorithm>
#include <set>

#include "planeaut/error.hpp"

namespace planeaut {

UniPoly::UniPoly(std::vector<Scalar> coeffs, char label) : c_(std::move(coeffs)), label_(label) {
    trim();
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(const Scalar& c, int k, char label) {
    std::vector<Scalar> v(static_cast<std::size_t>(k) + 1, Scalar(0));
    v[k] = c;
    return UniPoly(std::move(v), label);
}

UniPoly UniPoly::from_roots(std::span<const Scalar> roots, char label) {
    UniPoly p({Scalar(1)}, label);
    for (const auto& r : roots) p *= UniPoly({-r, Scalar(1)}, label);
    return p;
}

Scalar UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Scalar(0);
    return c_[k];
}

const Scalar& UniPoly::leading() const {
    if (c_.empty()) throw Error(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
    return c_.back();
}

bool UniPoly::is_rational() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_rational(); });
}

UniPoly UniPoly::monic() const {
    if (c_.empty()) return *this;
    UniPoly r = *this;
    Scalar inv = leading().inverse();
    for (auto& x : r.c_) x *= inv;
    return r;
}

UniPoly UniPoly::derivative() const {
    std::vector<Scalar> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * Scalar(static_cast<long>(k)));
    return UniPoly(std::move(d), label_);
}

Scalar UniPoly::eval(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& u) const {
    UniPoly acc({}, label_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= u;
        acc += UniPoly({*it}, label_);
    }
    return acc;
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (c_.empty() || o.c_.empty()) {
        c_.clear();
        return *this;
    }
    std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
    for (auto& x : c_) x *= s;
    trim();
    return *this;
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const Scalar& c = c_[k];
        if (c.is_zero()) continue;
        std::string coef;
        bool negative = c.is_rational() && sgn(c.a()) < 0;
        Scalar mag = negative ? -c : c;
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string var;
        if (k >= 1) var = std::string(1, label_) + (k > 1 ? "^" + std::to_string(k) : "");
        if (k == 0)
            out += mag.compact();
        else if (mag.is_one())
            out += var;
        else
            out += mag.compact() + "*" + var;
    }
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& p, const UniPoly& q) {
    if (q.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
    std::vector<Scalar> rem = p.coeffs();
    int dq = q.degree();
    int dp = p.degree();
    if (dp < dq) return {UniPoly({}, p.label()), p};
    std::vector<Scalar> quo(static_cast<std::size_t>(dp - dq) + 1, Scalar(0));
    Scalar inv = q.leading().inverse();
    for (int k = dp; k >= dq; --k) {
        if (rem[k].is_zero()) continue;
        Scalar f = rem[k] * inv;
        quo[k - dq] = f;
        for (int j = 0; j <= dq; ++j) rem[k - dq + j] -= f * q.coeffs()[j];
    }
    return {UniPoly(std::move(quo), p.label()), UniPoly(std::move(rem), p.label())};
}

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly r({Scalar(1)}, p.label()), base = p;
    while (e > 0) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
    for (const auto& c : p.coeffs())
        for (const auto& d : q.coeffs()) common_discriminant(c, d);
    UniPoly a = p, b = q;
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

bool is_squarefree(const UniPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefreeness of the zero polynomial");
    return gcd(p, p.derivative()).degree() == 0;
}

UniPoly squarefree_part(const UniPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree part of the zero polynomial");
    return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::pair<Scalar, Scalar> quadratic_roots(const UniPoly& p) {
    if (p.degree() != 2 || !p.leading().is_one() || !p.is_rational())
        throw Error(ErrorKind::BadInput, "quadratic_roots needs a monic rational quadratic, got " + p.str());
    const Rational& lin = p.coeffs()[1].rational();
    const Rational& cst = p.coeffs()[0].rational();
    Rational disc = lin * lin - 4 * cst;
    Rational half = -lin / 2;
    if (sgn(disc) == 0) return {Scalar(half), Scalar(half)};
    Integer m = disc.get_num() * disc.get_den();
    Integer sf = squarefree_part(m);
    Integer k2 = m / sf;
    Integer k;
    mpz_sqrt(k.get_mpz_t(), k2.get_mpz_t());
    Rational root_scale = make_rational(k, disc.get_den()) / 2;  // sqrt(disc)/2 = root_scale*sqrt(sf)
    if (sf == 1) {
        Scalar lo(half - root_scale), hi(half + root_scale);
        return {lo, hi};
    }
    if (!sf.fits_slong_p()) throw Error(ErrorKind::UnsupportedExtension, "discriminant too large");
    long d = sf.get_si();
    return {Scalar::quadratic(half, root_scale, d), Scalar::quadratic(half, -root_scale, d)};
}

namespace {

using RVec = std::vector<Rational>;

Rational eval_r(const RVec& p, const Rational& x) {
    Rational acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

void trim_r(RVec& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RVec rem_r(RVec a, const RVec& b) {
    int db = static_cast<int>(b.size()) - 1;
    for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
        if (sgn(a[k]) == 0) continue;
        Rational f = a[k] / b.back();
        for (int j = 0; j <= db; ++j) a[k - db + j] -= f * b[j];
    }
    a.resize(std::min<std::size_t>(a.size(), b.size() - 1));
    trim_r(a);
    return a;
}

std::vector<RVec> sturm_chain(const RVec& p) {
    std::vector<RVec> chain{p};
    RVec d;
    for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
    trim_r(d);
    chain.push_back(d);
    while (chain.back().size() > 1) {
        RVec r = rem_r(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;
        for (auto& x : r) x = -x;
        // scaling by a positive constant keeps the sign pattern and the sizes small
        Rational lead = abs(r.back());
        for (auto& x : r) x /= lead;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_changes(const std::vector<RVec>& chain, const Rational& x) {
    int changes = 0, last = 0;
    for (const auto& p : chain) {
        int s = sgn(eval_r(p, x));
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

Integer floor_q(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Smallest-denominator rational strictly inside (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (sgn(lo) < 0 && sgn(hi) > 0) return 0;
    if (sgn(hi) <= 0) return -simplest_between(-hi, -lo);
    Integer fl = floor_q(lo);
    if (Rational(fl + 1) < hi) return Rational(fl + 1);
    if (lo == Rational(fl)) {
        Integer y = floor_q(Rational(1) / (hi - fl)) + 1;
        return Rational(fl) + Rational(1) / Rational(y);
    }
    return Rational(fl) + Rational(1) / simplest_between(Rational(1) / (hi - fl), Rational(1) / (lo - fl));
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "roots of the zero polynomial");
    if (!p.is_rational()) throw Error(ErrorKind::BadInput, "rational_roots needs rational coefficients");
    UniPoly sf = squarefree_part(p);
    RVec work;
    for (const auto& c : sf.coeffs()) work.push_back(c.rational());
    // Denominators of rational roots divide the leading coefficient of the
    // primitive integer multiple.
    Integer lcm_den = 1;
    for (const auto& c : work) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
    Rational lead_q = work.back() * lcm_den;
    Integer lead = abs(lead_q.get_num());
    Integer content = 0;
    for (const auto& c : work) {
        Rational zq = c * lcm_den;
        Integer z = zq.get_num();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
    }
    lead /= content;
    Rational resolution = Rational(1) / Rational(lead * lead);

    std::set<Rational> found;
    bool restart = true;
    while (restart) {
        restart = false;
        if (work.size() <= 1) break;
        if (work.size() == 2) {
            found.insert(-work[0] / work[1]);
            break;
        }
        auto chain = sturm_chain(work);
        Rational bound = 1;
        for (std::size_t k = 0; k + 1 < work.size(); ++k) bound = std::max(bound, Rational(1 + abs(work[k] / work.back())));
        std::vector<std::pair<Rational, Rational>> stack{{-bound, bound}};
        while (!stack.empty() && !restart) {
            auto [lo, hi] = stack.back();
            stack.pop_back();
            int count = sign_changes(chain, lo) - sign_changes(chain, hi);
            if (count == 0) continue;
            if (count > 1) {
                Rational mid = (lo + hi) / 2;
                if (sgn(eval_r(work, mid)) == 0) {
                    found.insert(mid);
                    RVec quo(work.size() - 1);
                    Rational carry = 0;
                    for (int k = static_cast<int>(work.size()) - 1; k >= 1; --k) {
                        carry = work[k] + carry * mid;
                        quo[k - 1] = carry;
                    }
                    work = std::move(quo);
                    restart = true;
                    break;
                }
                stack.emplace_back(lo, mid);
                stack.emplace_back(mid, hi);
                continue;
            }
            int slo = sgn(eval_r(work, lo));
            while (hi - lo >= resolution) {
                Rational mid = (lo + hi) / 2;
                int sm = sgn(eval_r(work, mid));
                if (sm == 0) {
                    found.insert(mid);
                    lo = hi;  // interval held exactly this root
                    break;
                }
                if (sm == slo)
                    lo = mid;
                else
                    hi = mid;
            }
            if (lo == hi) continue;
            Rational cand = simplest_between(lo, hi);
            if (sgn(eval_r(work, cand)) == 0) found.insert(cand);
        }
    }
    return {found.begin(), found.end()};
}

}  // namespace planeaut
