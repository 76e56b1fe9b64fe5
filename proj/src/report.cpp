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

#include "planeaut/report.hpp"

#include "planeaut/deformation.hpp"
#include "planeaut/error.hpp"
#include "planeaut/normalform.hpp"

namespace planeaut {

using nlohmann::json;

json scalar_json(const Scalar& s) { return s.str(); }

namespace {

json point_json(const Point& p) { return json::array({scalar_json(p.x), scalar_json(p.y)}); }

json fixed_locus_json(const FixedLocus& l) {
    json j = {{"kind", l.kind_name()}};
    switch (l.kind) {
        case FixedLocus::Kind::SimplePoint:
            j["point"] = point_json(l.point);
            break;
        case FixedLocus::Kind::Lines:
            j["count"] = l.count;
            j["equation"] = l.equation.str();
            break;
        case FixedLocus::Kind::FiniteScheme:
            j["length"] = l.length;
            break;
        default:
            break;
    }
    return j;
}

json scheme_length(const FixedLocus& l) {
    switch (l.kind) {
        case FixedLocus::Kind::Empty:
            return 0;
        case FixedLocus::Kind::SimplePoint:
            return 1;
        case FixedLocus::Kind::FiniteScheme:
            return l.length;
        default:
            return nullptr;
    }
}

json base(const PlaneEndo& f) { return {{"input", f.str()}, {"tool_version", kToolVersion}}; }

}  // namespace

json classification_json(const ClassificationReport& r) {
    json j = base(r.input);
    j["degree"] = r.degree;
    j["lf"] = r.is_lf;
    j["triangularizable"] = r.is_triangularizable;
    j["semisimple"] = r.is_semisimple;
    j["unipotent"] = r.is_unipotent;
    j["in_S"] = r.in_S;
    j["closed"] = r.conjugacy_class_closed;
    j["jacobian"] = scalar_json(r.jacobian);
    j["dynamical_degree"] = fraction_string(r.dynamical_degree);
    j["fixed_locus"] = fixed_locus_json(r.fixed_locus);
    j["fixed_scheme_length"] = scheme_length(r.fixed_locus);
    if (r.pseudo) {
        j["pseudo_eigenvalues"] = json::array({scalar_json(r.pseudo->roots.first), scalar_json(r.pseudo->roots.second)});
        j["trace"] = scalar_json(r.pseudo->trace);
    } else {
        j["pseudo_eigenvalues"] = nullptr;
        j["trace"] = nullptr;
    }
    j["minimal_polynomial"] = r.minimal_polynomial ? json(r.minimal_polynomial->str()) : json(nullptr);
    return j;
}

json classify_document(const PlaneEndo& f) { return classification_json(full_report(f)); }

json diagonalize_document(const PlaneEndo& f) {
    Automorphism a = Automorphism::from_endo(f);
    DiagonalForm d = diagonalize(a);
    json j = base(f);
    j["eigenvalues"] = json::array({scalar_json(d.a), scalar_json(d.b)});
    j["diagonal"] = d.diagonal().str();
    j["conjugator"] = d.psi.endo.str();
    j["verified"] = conjugates(d.psi, d.diagonal(), f) && d.psi.degree() <= f.degree();
    return j;
}

json triangularize_document(const PlaneEndo& f) {
    Automorphism a = Automorphism::from_endo(f);
    Triangularization tr = triangularize(a);
    json j = base(f);
    j["conjugator"] = tr.phi.endo.str();
    j["triangular"] = tr.t.endo().str();
    const int dp = tr.phi.degree();
    j["verified"] = conjugates(tr.phi, tr.t.endo(), f) && f.degree() == tr.t.degree() * dp * dp;
    return j;
}

json decompose_document(const PlaneEndo& f) {
    Automorphism a = Automorphism::from_endo(f);
    json j = base(f);
    json factors = json::array();
    PlaneEndo product = PlaneEndo::identity();
    for (const Factor& g : a.word.factors()) {
        factors.push_back({{"kind", g.kind()}, {"map", g.endo().str()}});
        product = compose(product, g.endo());
    }
    j["factors"] = std::move(factors);
    j["verified"] = product == f;
    return j;
}

json invert_document(const PlaneEndo& f) {
    Automorphism a = Automorphism::from_endo(f);
    Automorphism inv = invert(a);
    json j = base(f);
    j["inverse"] = inv.endo.str();
    j["verified"] = compose(f, inv.endo).is_identity() && compose(inv.endo, f).is_identity();
    return j;
}

json degenerate_document(const PlaneEndo& f) {
    Automorphism a = Automorphism::from_endo(f);
    DegenerationWitness w = closure_witness(a);
    json j = base(f);
    j["conjugator"] = w.conjugator.endo.str();
    j["scaling"] = w.scaling.endo().str();
    j["family"] = w.family.str();
    j["limit"] = w.limit.str();
    j["limit_semisimple"] = w.limit_semisimple;
    j["limit_in_class"] = w.limit_in_class;
    j["jacobian"] = scalar_json(w.source_jac);
    j["trace"] = w.source_trace ? scalar_json(*w.source_trace) : json(nullptr);
    bool ok = limit_at_zero(w.family) == w.limit && specialization_consistent(w, 1) &&
              specialization_consistent(w, Scalar(Rational(1, 2))) && w.limit_jac == w.source_jac &&
              (!w.source_trace || w.limit_trace == w.source_trace);
    j["verified"] = ok;
    return j;
}

json conjugate_document(const PlaneEndo& f, const PlaneEndo& g) {
    Automorphism a = Automorphism::from_endo(f);
    Automorphism b = Automorphism::from_endo(g);
    auto psi = conjugacy_test_semisimple(a, b);
    json j = {{"inputs", json::array({f.str(), g.str()})}, {"tool_version", kToolVersion}};
    j["conjugate"] = psi.has_value();
    j["conjugator"] = psi ? json(psi->endo.str()) : json(nullptr);
    j["verified"] = psi ? conjugates(*psi, g, f) : false;
    return j;
}

std::string render_text(const json& doc) {
    std::string out;
    for (const auto& [key, value] : doc.items()) {
        out += key + ": ";
        out += value.is_string() ? value.get<std::string>() : value.dump();
        out += "\n";
    }
    return out;
}

}  // namespace planeaut
