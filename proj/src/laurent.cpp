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

#include "planeaut/laurent.hpp"

#include "planeaut/error.hpp"

namespace planeaut {

LaurentScalar LaurentScalar::term(const Scalar& c, int e) {
    LaurentScalar l;
    if (!c.is_zero()) l.c_.emplace(e, c);
    return l;
}

int LaurentScalar::order() const {
    if (c_.empty()) throw Error(ErrorKind::BadInput, "order of zero");
    return c_.begin()->first;
}

Scalar LaurentScalar::coeff(int e) const {
    auto it = c_.find(e);
    return it == c_.end() ? Scalar(0) : it->second;
}

Scalar LaurentScalar::eval(const Scalar& t0) const {
    if (t0.is_zero()) throw Error(ErrorKind::BadInput, "Laurent value at t = 0");
    Scalar acc(0);
    for (const auto& [e, c] : c_) acc += c * t0.pow(e);
    return acc;
}

LaurentScalar LaurentScalar::operator-() const {
    LaurentScalar r = *this;
    for (auto& [e, c] : r.c_) c = -c;
    return r;
}

LaurentScalar& LaurentScalar::operator+=(const LaurentScalar& o) {
    for (const auto& [e, c] : o.c_) {
        auto [it, inserted] = c_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    return *this;
}

LaurentScalar& LaurentScalar::operator-=(const LaurentScalar& o) { return *this += -o; }

LaurentScalar& LaurentScalar::operator*=(const LaurentScalar& o) {
    LaurentScalar r;
    for (const auto& [e1, c1] : c_)
        for (const auto& [e2, c2] : o.c_) r += term(c1 * c2, e1 + e2);
    return *this = std::move(r);
}

namespace {

std::string power_of_t(int e) { return e == 1 ? "t" : "t^" + std::to_string(e); }

}  // namespace

std::string LaurentScalar::str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        CoeffText ct = coeff_text(it->second);
        if (out.empty())
            out = ct.negative ? "-" : "";
        else
            out += ct.negative ? " - " : " + ";
        if (it->first == 0)
            out += ct.magnitude;
        else if (ct.unit)
            out += power_of_t(it->first);
        else
            out += ct.magnitude + "*" + power_of_t(it->first);
    }
    return out;
}

CoeffText coeff_text(const LaurentScalar& c) {
    if (c.terms().size() != 1) return {false, "(" + c.str() + ")", false};
    const auto& [e, s] = *c.terms().begin();
    CoeffText ct = coeff_text(s);
    if (e == 0) return ct;
    ct.magnitude = ct.unit ? power_of_t(e) : ct.magnitude + "*" + power_of_t(e);
    ct.unit = false;
    return ct;
}

FamilyPoly lift(const BiPoly& p) {
    return p.map_coeffs([](const Scalar& c) { return LaurentScalar(c); });
}

BiPoly specialize(const FamilyPoly& p, const Scalar& t0) {
    return p.map_coeffs([&](const LaurentScalar& c) { return c.eval(t0); });
}

}  // namespace planeaut
