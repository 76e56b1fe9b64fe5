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

#include "planeaut/parse.hpp"

#include <cctype>

#include "planeaut/error.hpp"

namespace planeaut {

namespace {

constexpr int kMaxExponent = 100000;

class Parser {
   public:
    Parser(std::string_view s, bool family) : s_(s), family_(family) {}

    FamilyEndo endo() {
        expect('(');
        FamilyPoly p1 = sum();
        expect(',');
        FamilyPoly p2 = sum();
        expect(')');
        finish();
        return {std::move(p1), std::move(p2)};
    }

    FamilyPoly whole_poly() {
        FamilyPoly p = sum();
        finish();
        return p;
    }

   private:
    [[noreturn]] void fail(const std::string& msg, ErrorKind kind = ErrorKind::SyntaxError) const {
        throw ParseError(kind, pos_, msg);
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(pos_ < s_.size() ? std::string("expected '") + c + "'" : "unexpected end of input");
        ++pos_;
    }

    void finish() {
        if (peek() != '\0') fail("trailing characters");
    }

    FamilyPoly sum() {
        FamilyPoly acc;
        bool negative = false;
        char c = peek();
        if (c == '+' || c == '-') {
            negative = c == '-';
            ++pos_;
        }
        for (;;) {
            FamilyPoly t = term();
            if (negative)
                acc -= t;
            else
                acc += t;
            c = peek();
            if (c != '+' && c != '-') break;
            negative = c == '-';
            ++pos_;
        }
        return acc;
    }

    FamilyPoly term() {
        bool numeric = false;
        FamilyPoly acc = factor(numeric);
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor(numeric);
            } else if (numeric && (std::isalpha(static_cast<unsigned char>(c)) || c == '(')) {
                acc = acc * factor(numeric);
            } else {
                break;
            }
        }
        return acc;
    }

    Integer digits() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    Rational signed_rational() {
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        peek();
        Integer num = digits();
        Integer den = 1;
        if (peek() == '/') {
            ++pos_;
            peek();
            den = digits();
            if (den == 0) fail("zero denominator");
        }
        Rational q = make_rational(num, den);
        return neg ? Rational(-q) : q;
    }

    int exponent(bool allow_negative) {
        if (peek() != '^') return 1;
        ++pos_;
        bool neg = false;
        if (peek() == '-') {
            if (!allow_negative) fail("negative exponent");
            neg = true;
            ++pos_;
        }
        peek();
        Integer e = digits();
        if (e > kMaxExponent) fail("exponent too large");
        int v = static_cast<int>(e.get_si());
        return neg ? -v : v;
    }

    FamilyPoly factor(bool& numeric) {
        char c = peek();
        numeric = false;
        if (c == '\0') fail("unexpected end of input");
        if (std::isdigit(static_cast<unsigned char>(c))) {
            numeric = true;
            Integer num = digits();
            Integer den = 1;
            if (peek() == '/') {
                ++pos_;
                peek();
                den = digits();
                if (den == 0) fail("zero denominator");
            }
            return FamilyPoly(LaurentScalar(Scalar(make_rational(num, den))));
        }
        if (c == '[') {
            ++pos_;
            Rational a = signed_rational();
            expect(',');
            Rational b = signed_rational();
            expect(',');
            std::size_t at = pos_;
            Rational d = signed_rational();
            expect(']');
            numeric = true;
            if (d.get_den() != 1 || !d.get_num().fits_slong_p()) {
                pos_ = at;
                fail("discriminant must be an integer");
            }
            try {
                return FamilyPoly(LaurentScalar(Scalar::quadratic(a, b, d.get_num().get_si())));
            } catch (const Error& e) {
                pos_ = at;
                fail(e.what());
            }
        }
        if (c == '(') {
            ++pos_;
            FamilyPoly inner = sum();
            expect(')');
            return inner.pow(static_cast<unsigned>(exponent(false)));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = pos_;
            ++pos_;
            if (c == 'X' || c == 'Y') {
                int e = exponent(false);
                return FamilyPoly::monomial(LaurentScalar(1), c == 'X' ? e : 0, c == 'Y' ? e : 0);
            }
            if (c == 't' && family_) {
                int e = exponent(true);
                return FamilyPoly(LaurentScalar::term(Scalar(1), e));
            }
            pos_ = at;
            fail(std::string("unknown variable '") + c + "'", ErrorKind::UnknownVariable);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view s_;
    bool family_;
    std::size_t pos_ = 0;
};

BiPoly to_plain(const FamilyPoly& p) {
    // Without t every coefficient is a constant Laurent value.
    return p.map_coeffs([](const LaurentScalar& c) { return c.coeff(0); });
}

}  // namespace

PlaneEndo parse_endo(std::string_view text) {
    FamilyEndo f = Parser(text, false).endo();
    return {to_plain(f.f1), to_plain(f.f2)};
}

FamilyEndo parse_family(std::string_view text) { return Parser(text, true).endo(); }

BiPoly parse_poly(std::string_view text) { return to_plain(Parser(text, false).whole_poly()); }

}  // namespace planeaut
