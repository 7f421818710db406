/*
   Copyright 2026 The lrpencil Authors

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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lrp/cli.hpp"
#include "lrp/json_io.hpp"
#include "lrp/oracle.hpp"
#include "support.hpp"

using namespace lrp;
using namespace lrp::testing;

namespace {

std::string data(const std::string& name) { return std::string(LRP_DATA_DIR) + "/" + name; }

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run lrpencil(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class Scratch {
   public:
    Scratch() {
        dir_ = std::filesystem::temp_directory_path() /
               ("lrp_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
                std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
        std::filesystem::create_directories(dir_);
    }
    ~Scratch() { std::filesystem::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) const {
        const auto p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }
    std::string path(const std::string& name) const { return (dir_ / name).string(); }

   private:
    std::filesystem::path dir_;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    return json::parse(in);
}

}  // namespace

TEST_CASE("json round trips") {
    const auto a = jordan_a<Rational>(Q);
    CHECK(pencil_from_json<Rational>(pencil_to_json(a), Q) == a);
    const auto s = compute_structure(jordan_b<Zp>(F2));
    CHECK(structure_from_json<Zp>(structure_to_json(s), F2) == s);
    CHECK(field_from_json(field_to_json(F7)) == F7);
    CHECK(field_from_json(field_to_json(Q)) == Q);

    const Matrix<Rational> half = M<Rational>(Q, {{1, 2}}) * Rational(mpq_class(1, 3));
    CHECK(matrix_from_json<Rational>(matrix_to_json(half), Q, 1, 2, "m") == half);
    CHECK(matrix_to_json(half)[0][0] == "1/3");

    const Route<Zp> nested = Route<Zp>::deflation({P<Zp>(F2, "s + 1")}, Route<Zp>::unspectral({Zp::make(F2, 1)}));
    CHECK(route_from_json<Zp>(route_to_json(nested), F2) == nested);
    const Route<Rational> at_inf = Route<Rational>::unspectral({});
    CHECK(route_from_json<Rational>(route_to_json(at_inf), Q) == at_inf);

    const Certificate<Rational> c{jordan_p<Rational>(Q), 1, compute_structure(jordan_b<Rational>(Q)),
                                  Route<Rational>::unspectral({Rational(1)}), 4};
    const auto back = certificate_from_json<Rational>(certificate_to_json(c), Q);
    CHECK(back.P == c.P);
    CHECK(back.claimed_rank == 1);
    CHECK(back.route == c.route);
    CHECK(back.trials_used == 4);
    CHECK(verify_certificate(jordan_a<Rational>(Q), back));

    const auto doc = analysis_to_json(compute_structure(a));
    CHECK(structure_from_json<Rational>(doc, Q) == compute_structure(a));
    CHECK(is_structure_document(doc));
    CHECK_FALSE(is_structure_document(pencil_to_json(a)));
}

TEST_CASE("json diagnostics name the offending member") {
    auto doc = pencil_to_json(jordan_a<Rational>(Q));
    doc["A1"][2][1] = "1/0";
    try {
        pencil_from_json<Rational>(doc, Q);
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("A1[2][1]") != std::string::npos);
    }
    auto short_doc = pencil_to_json(jordan_a<Rational>(Q));
    short_doc["A0"].erase(1);
    CHECK_THROWS_AS(pencil_from_json<Rational>(short_doc, Q), InputError);
    CHECK_THROWS_AS(field_from_json(json{{"kind", "prime"}, {"p", 6}}), InputError);
    auto bad_s = structure_to_json(compute_structure(jordan_b<Rational>(Q)));
    bad_s["structure"][1]["q"] = 5;
    CHECK_THROWS_AS(structure_from_json<Rational>(bad_s, Q), InputError);
}

TEST_CASE("analyze") {
    const Run r = lrpencil({"analyze", data("jordan3_A.json")});
    CHECK(r.code == cli::kOk);
    const json doc = json::parse(r.out);
    CHECK(structure_from_json<Rational>(doc, Q) == S<Rational>(Q, {{"1", 0}, {"s", 0}, {"s^2", 0}}));
    CHECK(doc["det"] == "s^3");
    CHECK(doc["points"][0]["multiplicities"] == json::array({0, 1, 2}));
    CHECK(doc["points"][0]["weyr"] == json::array({2, 1}));

    const Run b = lrpencil({"analyze", data("jordan3_B_f2.json")});
    CHECK(b.code == cli::kOk);
    CHECK(structure_from_json<Zp>(json::parse(b.out), F2) == S<Zp>(F2, {{"1", 0}, {"1", 0}, {"s", 2}}));

    const Run five = lrpencil({"analyze", data("deflation5_A.json")});
    CHECK(five.code == cli::kOk);
    const Run text = lrpencil({"analyze", "--format", "text", data("jordan3_A.json")});
    CHECK(text.code == cli::kOk);
    CHECK_FALSE(text.out.empty());
}

TEST_CASE("check exit codes") {
    const Run ok = lrpencil({"check", "--rank", "1", data("jordan3_A.json"), data("jordan3_B.json")});
    CHECK(ok.code == cli::kOk);
    const json v = json::parse(ok.out);
    CHECK(v["verdict"] == "feasible");
    CHECK(v["route"]["kind"] == "unspectral_point");
    CHECK(v["route"]["c"] == "1");

    CHECK(lrpencil({"check", "--rank", "0", data("jordan3_A.json"), data("jordan3_B.json")}).code == cli::kNegative);
    const Run defl = lrpencil({"check", "--rank", "1", data("deflation5_A.json"), data("deflation5_B.json")});
    CHECK(defl.code == cli::kOk);
    CHECK(json::parse(defl.out)["route"]["kind"] == "deflation");

    Scratch tmp;
    const auto a = tmp.write("a.json", structure_to_json(S<Zp>(F2, {{"1", 0}, {"s^2", 0}})).dump());
    const auto b = tmp.write("b.json", structure_to_json(S<Zp>(F2, {{"1", 0}, {"s + 1", 1}})).dump());
    CHECK(lrpencil({"check", "--rank", "1", a, b}).code == cli::kUnknown);
    CHECK(lrpencil({"check", "--rank", "1", a, data("jordan3_B_f2.json")}).code == cli::kUsage);
    CHECK(lrpencil({"check", "--rank", "1", data("jordan3_A.json"), data("jordan3_B_f2.json")}).code == cli::kUsage);
}

TEST_CASE("perturb, place and verify") {
    Scratch tmp;
    const auto cert = tmp.path("cert.json");
    const Run p = lrpencil({"perturb", "--rank", "1", "--out", cert, data("jordan3_A.json"), data("jordan3_B.json")});
    CHECK(p.code == cli::kOk);
    CHECK(lrpencil({"verify", data("jordan3_A.json"), cert}).code == cli::kOk);
    CHECK(lrpencil({"verify", data("jordan3_A.json"), data("jordan3_P_cert.json")}).code == cli::kOk);
    CHECK(lrpencil({"verify", data("jordan3_A_f2.json"), data("jordan3_P_cert_f2.json")}).code == cli::kOk);

    json tampered = read_json(cert);
    tampered["claimed_rank"] = 0;
    CHECK(lrpencil({"verify", data("jordan3_A.json"), tmp.write("low.json", tampered.dump())}).code == cli::kNegative);

    CHECK(lrpencil({"perturb", "--rank", "0", data("jordan3_A.json"), data("jordan3_B.json")}).code == cli::kNegative);
    CHECK(lrpencil({"perturb", "--rank", "1", "--budget", "0", data("jordan3_A.json"), data("jordan3_B.json")}).code ==
          cli::kNotFound);

    const auto dcert = tmp.path("defl.json");
    CHECK(lrpencil({"perturb", "--rank", "1", "--out", dcert, data("deflation5_A.json"), data("deflation5_B.json")}).code ==
          cli::kOk);
    CHECK(lrpencil({"verify", data("deflation5_A.json"), dcert}).code == cli::kOk);

    const auto pcert = tmp.path("place.json");
    const Run pl = lrpencil({"place", "--rank", "1", "--poly", "2*s^3 - 4*s^2 + 2*s", "--out", pcert, data("jordan3_A.json")});
    CHECK(pl.code == cli::kOk);
    const json pj = read_json(pcert);
    CHECK(pj["target"]["determinant"] == "s^3 - 2*s^2 + s");
    CHECK(pj["normalization"] == "2");
    CHECK(lrpencil({"verify", data("jordan3_A.json"), pcert}).code == cli::kOk);
    CHECK(lrpencil({"place", "--rank", "1", "--poly", "s^3 - 1", data("jordan3_A.json")}).code == cli::kNegative);
}

TEST_CASE("usage and input errors") {
    Scratch tmp;
    CHECK(lrpencil({}).code == cli::kUsage);
    CHECK(lrpencil({"frobnicate"}).code == cli::kUsage);
    CHECK(lrpencil({"check", data("jordan3_A.json"), data("jordan3_B.json")}).code == cli::kUsage);
    CHECK(lrpencil({"check", "--rank", "-1", data("jordan3_A.json"), data("jordan3_B.json")}).code == cli::kUsage);
    const Run missing = lrpencil({"analyze", tmp.path("nope.json")});
    CHECK(missing.code == cli::kUsage);
    CHECK(missing.err.find("nope.json") != std::string::npos);
    const Run garbage = lrpencil({"analyze", tmp.write("g.json", "{ not json")});
    CHECK(garbage.code == cli::kUsage);

    auto doc = pencil_to_json(jordan_a<Rational>(Q));
    doc["A0"][1][0] = "x";
    const Run bad = lrpencil({"analyze", tmp.write("bad.json", doc.dump())});
    CHECK(bad.code == cli::kUsage);
    CHECK(bad.err.find("A0[1][0]") != std::string::npos);

    auto nofield = pencil_to_json(jordan_a<Rational>(Q));
    nofield.erase("field");
    const Run nf = lrpencil({"analyze", tmp.write("nf.json", nofield.dump())});
    CHECK(nf.code == cli::kUsage);
    CHECK(nf.err.find("field") != std::string::npos);

    const Run singular = lrpencil({"analyze", tmp.write("z.json", pencil_to_json(Pencil<Rational>::zero(Q, 2)).dump())});
    CHECK(singular.code == cli::kUsage);
    CHECK(lrpencil({"place", "--rank", "1", "--poly", "s^^2", data("jordan3_A.json")}).code == cli::kUsage);
    CHECK(lrpencil({"oracle", "--field", "4", "--n", "2", "--rank", "1"}).code == cli::kUsage);
}

TEST_CASE("oracle command") {
    const Run one = lrpencil({"oracle", "--field", "2", "--n", "2", "--rank", "1"});
    CHECK(one.code == cli::kOk);
    const json rep = json::parse(one.out);
    CHECK(rep["counts"]["necessity_violations"] == 0);
    CHECK(rep["counts"]["sufficiency_violations"] == 0);
    CHECK_FALSE(one.err.empty());
    const Run four = lrpencil({"oracle", "--field", "2", "--n", "2", "--rank", "1", "--jobs", "4"});
    CHECK(four.code == one.code);
    CHECK(four.out == one.out);
}

TEST_CASE("results do not depend on --jobs") {
    Scratch tmp;
    std::vector<std::string> texts;
    for (const char* jobs : {"1", "3"}) {
        const auto c = tmp.path(std::string("c") + jobs + ".json");
        CHECK(lrpencil({"perturb", "--rank", "1", "--seed", "5", "--jobs", jobs, "--out", c, data("deflation5_A.json"),
                        data("deflation5_B.json")})
                  .code == cli::kOk);
        texts.push_back(read_json(c).dump());
    }
    CHECK(texts[0] == texts[1]);
}
