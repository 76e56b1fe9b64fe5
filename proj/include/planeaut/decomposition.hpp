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

#include <string>
#include <variant>
#include <vector>

#include "planeaut/endo.hpp"

namespace planeaut {

class Factor {
   public:
    Factor(const AffineMap& a) : v_(a) {}
    Factor(const TriangularMap& t) : v_(t) {}

    bool is_affine() const noexcept { return std::holds_alternative<AffineMap>(v_); }
    bool is_triangular() const noexcept { return !is_affine(); }
    const AffineMap& affine() const { return std::get<AffineMap>(v_); }
    const TriangularMap& triangular() const { return std::get<TriangularMap>(v_); }

    PlaneEndo endo() const;
    Factor inverse() const;
    int degree() const { return is_affine() ? 1 : triangular().degree(); }
    std::string kind() const { return is_affine() ? "affine" : "triangular"; }

    friend bool operator==(const Factor& a, const Factor& b) { return a.v_ == b.v_; }

   private:
    std::variant<AffineMap, TriangularMap> v_;
};

/*
  Alternating word of affine and triangular factors in normal form:
  triangular factors have degree >= 2, affine factors are not triangular,
  and every affine factor after the first is (Y, X + sY).  A word of one
  map that is both affine and triangular holds a Triangular factor.  The
  composite is cached.
*/
class FactorWord {
   public:
    FactorWord() : composite_(PlaneEndo::identity()) {}
    /// Brings any factor list into normal form.
    static FactorWord normalized(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const noexcept { return factors_; }
    std::size_t size() const noexcept { return factors_.size(); }
    const PlaneEndo& composite() const noexcept { return composite_; }
    FactorWord inverse() const;
    /// Product of the triangular factor degrees.
    int word_degree() const;

   private:
    std::vector<Factor> factors_;
    PlaneEndo composite_;
};

/// An endomorphism together with its factor word.
struct Automorphism {
    PlaneEndo endo;
    FactorWord word;

    static Automorphism identity() { return {PlaneEndo::identity(), FactorWord()}; }
    /// Decomposes f; throws NotAnAutomorphism.
    static Automorphism from_endo(const PlaneEndo& f);
    static Automorphism from_word(std::vector<Factor> factors);
    int degree() const { return endo.degree(); }
};

FactorWord jvdk_decompose(const PlaneEndo& f);
Automorphism invert(const Automorphism& f);
/// f∘g at the level of words.
Automorphism compose(const Automorphism& f, const Automorphism& g);

struct CyclicReduction {
    Automorphism conjugator;
    FactorWord reduced;
};

/// f = conjugator ∘ reduced ∘ conjugator⁻¹.
CyclicReduction cyclic_reduce(const Automorphism& f);

Rational dynamical_degree(const Automorphism& f);

}  // namespace planeaut
