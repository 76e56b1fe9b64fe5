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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "planeaut/decomposition.hpp"

namespace planeaut {

/// Portable draws on top of mt19937_64 (the std distributions are not
/// specified bit-exactly across standard libraries).
class CorpusRng {
   public:
    explicit CorpusRng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }
    /// Uniform integer in [lo, hi].
    int range(int lo, int hi);
    bool chance(int num, int den) { return range(1, den) <= num; }
    /// n/d with |n| <= height, 1 <= d <= height.
    Rational rational(int height, bool nonzero = false);

   private:
    std::mt19937_64 gen_;
};

struct CorpusConfig {
    std::uint64_t seed = 1;
    int count = 200;
    int max_factors = 6;
    int max_triangular_degree = 3;
    int height = 3;
    int max_degree = 9;
};

struct CorpusEntry {
    PlaneEndo endo;
    std::vector<Factor> word;  // factors that generated endo
    std::string kind;          // "conjugate" or "word"
};

/*
  Half the entries are conjugates phi∘t∘phi⁻¹ of a random triangular map by
  a word of at most two factors; the others are random alternating words of
  origin-fixing factors moved by a random translation, so every entry has a
  rational fixed point or is locally finite.  Composite degree never exceeds
  max_degree.
*/
std::vector<CorpusEntry> generate_corpus(const CorpusConfig& cfg);

TriangularMap random_triangular(CorpusRng& rng, int max_degree, int height);
AffineMap random_affine(CorpusRng& rng, int height, bool translation = true);

/// phi∘(aX, bY)∘phi⁻¹ for a random phi of degree <= max_phi_degree.
PlaneEndo random_conjugate_of(CorpusRng& rng, const PlaneEndo& seed, int max_phi_degree, int height);

/// A map with a unique simple fixed point and degree <= max_degree.
PlaneEndo random_s_element(CorpusRng& rng, int max_degree, int height);

}  // namespace planeaut
