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

#include "planeaut/normalform.hpp"

#include <stdexcept>

#include "planeaut/error.hpp"

namespace planeaut {

bool conjugates(const Automorphism& psi, const PlaneEndo& g, const PlaneEndo& f) {
    return compose(compose(psi.endo, g), invert(psi).endo) == f;
}

DiagonalForm diagonalize_triangular(const TriangularMap& t) {
    Scalar e(0);
    if (!t.b.is_one())
        e = t.c / (t.b - Scalar(1));
    else if (!t.c.is_zero())
        throw Error(ErrorKind::NotSemisimple, "b = 1 with nonzero translation " + t.c.compact());
    UniPoly shifted = t.p.compose(UniPoly({-e, Scalar(1)}, 'Y'));
    std::vector<Scalar> q(shifted.coeffs().size(), Scalar(0));
    for (int k = 0; k <= shifted.degree(); ++k) {
        const Scalar& pk = shifted.coeffs()[k];
        if (pk.is_zero()) continue;
        Scalar denom = t.b.pow(k) - t.a;
        if (denom.is_zero())
            throw Error(ErrorKind::NotSemisimple, "resonance a = b^" + std::to_string(k) + " with p_" +
                                                      std::to_string(k) + " != 0");
        q[k] = pk / denom;
    }
    TriangularMap shift_back{1, UniPoly(std::vector<Scalar>{}, 'Y'), 1, -e};
    TriangularMap chi{1, UniPoly(std::move(q), 'Y'), 1, 0};
    Automorphism psi = Automorphism::from_word({Factor(shift_back), Factor(chi)});
    DiagonalForm df{t.a, t.b, psi};
    if (!conjugates(psi, df.diagonal(), t.endo()))
        throw std::logic_error("diagonalization fails to conjugate back to " + t.endo().str());
    return df;
}

DiagonalForm diagonalize(const Automorphism& f) {
    Triangularization tr;
    try {
        tr = triangularize(f);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotTriangularizable) throw;
        throw Error(ErrorKind::NotSemisimple, "not locally finite: " + f.endo.str());
    }
    DiagonalForm dt = diagonalize_triangular(tr.t);
    DiagonalForm df{dt.a, dt.b, compose(tr.phi, dt.psi)};
    if (df.a.is_rational() && df.b.is_rational() && df.b.rational() < df.a.rational()) {
        std::swap(df.a, df.b);
        df.psi = compose(df.psi, Automorphism::from_word({Factor(AffineMap::swap())}));
    }
    if (df.psi.degree() > std::max(1, f.degree()))
        throw std::logic_error("diagonalizer degree exceeds the input degree for " + f.endo.str());
    if (!conjugates(df.psi, df.diagonal(), f.endo))
        throw std::logic_error("diagonalization fails to conjugate back to " + f.endo.str());
    return df;
}

std::optional<Automorphism> conjugacy_test_semisimple(const Automorphism& f, const Automorphism& g) {
    if (!is_semisimple(f)) throw Error(ErrorKind::NotSemisimple, f.endo.str());
    if (!is_semisimple(g)) throw Error(ErrorKind::NotSemisimple, g.endo.str());
    if (!pseudo_eigenvalues(f).same_pair(pseudo_eigenvalues(g))) return std::nullopt;
    DiagonalForm df = diagonalize(f), dg = diagonalize(g);
    std::vector<Factor> sigma;
    bool swapped = !(df.a == dg.a && df.b == dg.b);
    if (swapped && !(df.a == dg.b && df.b == dg.a))
        throw std::logic_error("equal trace and Jacobian but different diagonal entries");
    if (swapped) sigma.emplace_back(AffineMap::swap());
    Automorphism psi = compose(compose(df.psi, Automorphism::from_word(sigma)), invert(dg.psi));
    if (!conjugates(psi, g.endo, f.endo)) throw std::logic_error("conjugator does not verify");
    return psi;
}

}  // namespace planeaut
