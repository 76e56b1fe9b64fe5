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

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "planeaut/classify.hpp"
#include "planeaut/corpus.hpp"
#include "planeaut/error.hpp"
#include "planeaut/parse.hpp"
#include "planeaut/report.hpp"

namespace {

using nlohmann::json;
using namespace planeaut;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kNotAutomorphism = 3;
constexpr int kModuleError = 4;

struct Options {
    bool json = false;
    bool check = false;
    std::uint64_t seed = 1;
    int count = 200;
    int max_degree = 9;
    std::vector<std::string> inputs;
};

int error_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::SyntaxError:
        case ErrorKind::UnknownVariable:
            return kUsage;
        case ErrorKind::NotAnAutomorphism:
            return kNotAutomorphism;
        default:
            return kModuleError;
    }
}

void emit(const Options& opt, const json& doc) {
    if (opt.json)
        std::cout << doc.dump(2) << "\n";
    else
        std::cout << render_text(doc);
}

std::vector<std::string> read_inputs(const Options& opt) {
    if (!opt.inputs.empty()) return opt.inputs;
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(std::cin, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    return lines;
}

int run_single(const std::string& command, const Options& opt) {
    std::vector<std::string> inputs = read_inputs(opt);
    if (inputs.empty()) {
        std::cerr << "error: no input\n";
        return kUsage;
    }
    int status = kOk;
    auto note = [&status](int code) {
        if (status == kOk) status = code;
    };
    bool first = true;
    for (const std::string& text : inputs) {
        try {
            PlaneEndo f = parse_endo(text);
            json doc;
            if (command == "classify") {
                ClassificationReport r = full_report(f);
                doc = classification_json(r);
                if (opt.check) {
                    std::vector<std::string> failed = self_check(r);
                    doc["check"] = failed.empty();
                    for (const std::string& msg : failed) std::cerr << "check failed: " << msg << "\n";
                    if (!failed.empty()) note(kMismatch);
                }
            } else if (command == "diagonalize") {
                doc = diagonalize_document(f);
            } else if (command == "triangularize") {
                doc = triangularize_document(f);
            } else if (command == "decompose") {
                doc = decompose_document(f);
            } else if (command == "invert") {
                doc = invert_document(f);
            } else {
                doc = degenerate_document(f);
            }
            if (doc.contains("verified") && !doc["verified"].get<bool>()) {
                std::cerr << "error: witness for " << text << " did not verify\n";
                note(kMismatch);
            }
            if (!first && !opt.json) std::cout << "\n";
            first = false;
            emit(opt, doc);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            note(error_code(e));
        }
    }
    return status;
}

int run_conjugate(const Options& opt) {
    std::vector<std::string> inputs = read_inputs(opt);
    if (inputs.size() != 2) {
        std::cerr << "error: conjugate takes exactly two maps\n";
        return kUsage;
    }
    try {
        json doc = conjugate_document(parse_endo(inputs[0]), parse_endo(inputs[1]));
        emit(opt, doc);
        if (doc["conjugate"].get<bool>() && !doc["verified"].get<bool>()) {
            std::cerr << "error: conjugator did not verify\n";
            return kMismatch;
        }
        return kOk;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return error_code(e);
    }
}

int run_corpus(const Options& opt) {
    if (opt.count < 1 || opt.max_degree < 1) {
        std::cerr << "error: --count and --max-degree must be positive\n";
        return kUsage;
    }
    CorpusConfig cfg;
    cfg.seed = opt.seed;
    cfg.count = opt.count;
    cfg.max_degree = opt.max_degree;
    std::vector<CorpusEntry> corpus = generate_corpus(cfg);
    int agree = 0, roundtrip = 0, lf = 0, semisimple = 0, checked = 0, errors = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const CorpusEntry& e = corpus[i];
        try {
            Automorphism a = Automorphism::from_endo(e.endo);
            const bool by_square = is_lf(a);
            const bool by_reduction = lf_by_reduction(a);
            const bool by_iterates = lf_by_iterates(a);
            const bool same = by_square == by_reduction && by_reduction == by_iterates;
            agree += same;
            PlaneEndo product = PlaneEndo::identity();
            for (const Factor& g : a.word.factors()) product = compose(product, g.endo());
            roundtrip += product == e.endo;
            ClassificationReport r = full_report(e.endo);
            lf += r.is_lf;
            semisimple += r.is_semisimple;
            if (opt.check) checked += self_check(r).empty();
            if (opt.json) {
                json doc = classification_json(r);
                doc["index"] = i;
                doc["kind"] = e.kind;
                doc["lf_criteria_agree"] = same;
                std::cout << doc.dump() << "\n";
            } else {
                std::cout << i << " " << e.kind << " degree=" << r.degree << " lf=" << r.is_lf
                          << " semisimple=" << r.is_semisimple << " closed=" << r.conjugacy_class_closed
                          << " agree=" << same << " " << e.endo.str() << "\n";
            }
        } catch (const Error& err) {
            ++errors;
            std::cerr << "error: entry " << i << ": " << err.what() << "\n";
        }
    }
    const std::string total = "/" + std::to_string(corpus.size());
    json summary = {{"lf_criteria_agree", std::to_string(agree) + total},
                    {"decomposition_roundtrip", std::to_string(roundtrip) + total},
                    {"lf", lf},
                    {"semisimple", semisimple},
                    {"errors", errors}};
    if (opt.check) summary["self_check"] = std::to_string(checked) + total;
    if (opt.json)
        std::cout << json{{"summary", summary}}.dump() << "\n";
    else
        std::cout << render_text(summary);
    const int n = static_cast<int>(corpus.size());
    const bool ok = agree == n && roundtrip == n && errors == 0 && (!opt.check || checked == n);
    return ok ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Classify plane polynomial automorphisms over Q."};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json, "Emit JSON instead of text");
    app.add_flag("--check", opt.check, "Run internal cross-checks and fail on mismatch");
    app.add_option("--seed", opt.seed, "Corpus seed");
    app.add_option("--count", opt.count, "Corpus size");
    app.add_option("--max-degree", opt.max_degree, "Largest corpus degree");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"classify", "Full classification report"},
        {"diagonalize", "Conjugate a semisimple map to (aX, bY)"},
        {"triangularize", "Conjugate a locally finite map to a triangular one"},
        {"decompose", "Factor into affine and triangular maps"},
        {"invert", "Inverse automorphism"},
        {"degenerate", "One-parameter family with semisimple limit"},
        {"conjugate", "Conjugator between two semisimple maps"},
        {"corpus", "Classify a deterministic random corpus"},
    };
    std::string selected;
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        if (name != "corpus") sub->add_option("inputs", opt.inputs, "Maps \"(f1, f2)\"; read from stdin when absent");
        sub->callback([&selected, n = name] { selected = n; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    if (selected == "corpus") return run_corpus(opt);
    if (selected == "conjugate") return run_conjugate(opt);
    return run_single(selected, opt);
}
