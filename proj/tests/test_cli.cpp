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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>

#include "planeaut/report.hpp"
#include "support.hpp"

using namespace planeaut;
using namespace planeaut::testing;
using nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd = std::string(PLANEAUT_CLI) + " " + args + " 2>/dev/null";
    if (!stdin_text.empty()) cmd = "printf '%s' '" + stdin_text + "' | " + cmd;
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

json run_json(const std::string& args, int expect_status = 0) {
    Run r = run("--json " + args);
    CHECK(r.status == expect_status);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("classification document") {
    json a = classify_document(endo("(2X+Y^3, 3Y)"));
    CHECK(a["semisimple"] == true);
    CHECK(a["closed"] == true);
    CHECK(a["pseudo_eigenvalues"] == json::array({"2/1", "3/1"}));
    CHECK(a["minimal_polynomial"] == "T^3 - 32*T^2 + 141*T - 162");
    CHECK(a["tool_version"] == kToolVersion);
    CHECK(parse_endo(a["input"].get<std::string>()) == endo("(2X+Y^3, 3Y)"));
    json h = classify_document(endo("(Y, X+Y^2)"));
    CHECK(h["lf"] == false);
    CHECK(h["dynamical_degree"] == "2/1");
    CHECK(h["fixed_scheme_length"] == 2);
    json r = classify_document(endo("(-Y, X)"));
    CHECK(r["pseudo_eigenvalues"] == json::array({"[0/1, 1/1, -1]", "[0/1, -1/1, -1]"}));
}

TEST_CASE("keys are sorted") {
    std::string text = classify_document(endo("(X+1, 2Y)")).dump();
    json doc = json::parse(text);
    std::string previous;
    for (const auto& [key, value] : doc.items()) {
        CHECK(previous < key);
        previous = key;
    }
}

TEST_CASE("witness documents re-parse") {
    json d = degenerate_document(endo("(X+Y, Y)"));
    CHECK(d["family"] == "(X + t*Y, Y)");
    CHECK(d["limit"] == "(X, Y)");
    CHECK(d["limit_in_class"] == false);
    CHECK(d["verified"] == true);
    CHECK(parse_family(d["family"].get<std::string>()) == parse_family("(X + t*Y, Y)"));
    json c = conjugate_document(endo("(2X+Y^3, 3Y)"), endo("(2X, 3Y+X^2)"));
    CHECK(c["verified"] == true);
    PlaneEndo psi = parse_endo(c["conjugator"].get<std::string>());
    CHECK(compose(psi, endo("(2X, 3Y+X^2)")) == compose(endo("(2X+Y^3, 3Y)"), psi));
    json t = triangularize_document(endo("(2X, 3Y+X^2)"));
    CHECK(t["triangular"] == "(3*X + Y^2, 2*Y)");
    CHECK(t["verified"] == true);
    json f = decompose_document(endo("(2X, 3Y+X^2)"));
    CHECK(f["factors"].size() == 3);
    CHECK(f["verified"] == true);
    CHECK(invert_document(endo("(Y, X+Y^2)"))["inverse"] == "(-X^2 + Y, X)");
}

TEST_CASE("cli classify") {
    json a = run_json("classify \"(2X+Y^3, 3Y)\"");
    CHECK(a["semisimple"] == true);
    CHECK(a["pseudo_eigenvalues"] == json::array({"2/1", "3/1"}));
    json h = run_json("classify \"(Y, X+Y^2)\"");
    CHECK(h["fixed_scheme_length"] == 2);
    CHECK(run("classify \"(X^2, Y)\"").status == 3);
    CHECK(run("classify \"(X*, Y)\"").status == 2);
    CHECK(run("classify --check \"(X+1, 2Y)\"").status == 0);
    Run text = run("classify \"(X+Y^2, Y)\"");
    CHECK(text.status == 0);
    CHECK(text.out.find("unipotent: true") != std::string::npos);
}

TEST_CASE("cli reads standard input") {
    Run r = run("--json classify", "(2X, 3Y)\n(X+1, Y)\n");
    CHECK(r.status == 0);
    CHECK(r.out.find("\"input\": \"(2*X, 3*Y)\"") != std::string::npos);
    CHECK(r.out.find("\"input\": \"(X + 1, Y)\"") != std::string::npos);
}

TEST_CASE("cli transforms") {
    json d = run_json("degenerate \"(X+Y, Y)\"");
    CHECK(d["family"] == "(X + t*Y, Y)");
    CHECK(d["limit"] == "(X, Y)");
    CHECK(d["limit_in_class"] == false);
    json c = run_json("conjugate \"(2X+Y^3, 3Y)\" \"(2X, 3Y+X^2)\"");
    CHECK(c["verified"] == true);
    CHECK(run("diagonalize \"(X+Y^2, Y)\"").status == 4);
    CHECK(run("triangularize \"(Y, X+Y^2)\"").status == 4);
    CHECK(run("conjugate \"(2X, 3Y)\"").status == 2);
    CHECK(run_json("invert \"(2X, 3Y)\"")["inverse"] == "(1/2*X, 1/3*Y)");
    CHECK(run_json("decompose \"(X+Y^2, Y)\"")["factors"].size() == 1);
}

TEST_CASE("cli corpus") {
    Run a = run("corpus --seed 1 --count 10");
    CHECK(a.status == 0);
    CHECK(a.out.find("lf_criteria_agree: 10/10") != std::string::npos);
    Run b = run("corpus --seed 1 --count 10");
    CHECK(a.out == b.out);
    CHECK(run("corpus --count 0").status == 2);
    CHECK(run("bogus").status == 2);
}
