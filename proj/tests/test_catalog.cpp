#include "doctest.h"

#include "cytkit/catalog.hpp"
#include "cytkit/errors.hpp"
#include "cytkit/exforms.hpp"
#include "cytkit/json_io.hpp"
#include "cytkit/presentations.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

using namespace cytkit;
using namespace cytkit::exforms;
namespace P = cytkit::presentations;
namespace J = cytkit::json_io;

namespace {

Rat random_rat(std::mt19937& rng, int bound)
{
    std::uniform_int_distribution<int> num(-bound * 4, bound * 4), den(1, 4);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

const std::vector<std::string> parallelizable = {"c3", "heisenberg", "s2c", "s3", "s3_lambda", "sl2c"};

}  // namespace

TEST_CASE("Chern-Ricci potential on SU(2) x SU(2) is alpha1 + alpha2")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        Rat a = random_rat(rng, 6), b = random_rat(rng, 6);
        if (b == 0)
            continue;
        auto p = P::su2su2(a, b);
        CHECK(chern_ricci_potential(p, *p.complex_structure) == su2su2_sigma(p));
    }
}

TEST_CASE("Bismut-Ricci form vanishes exactly on the CYT region")
{
    std::mt19937 rng(11);
    int seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        Rat a = random_rat(rng, 6), b = random_rat(rng, 6);
        if (b == 0 || !su2su2_cyt_region(a, b))
            continue;
        auto p = P::su2su2(a, b);
        const auto& j = *p.complex_structure;
        CHECK(bismut_ricci_form(p, su2su2_cyt_metric(a, b), j).is_zero());
        // doubling the first fiber factor leaves the region's metric family
        RatMatrix doubled = su2su2_cyt_metric(a, b).gram();
        for (std::size_t i = 2; i < 4; ++i)
            for (std::size_t k = 2; k < 4; ++k)
                doubled(i, k) *= 2;
        CHECK_FALSE(bismut_ricci_form(p, InvariantMetric(doubled), j).is_zero());
        ++seen;
    }
    CHECK(seen > 10);
}

TEST_CASE("complex parallelizable algebras")
{
    for (const auto& name : parallelizable) {
        CAPTURE(name);
        auto p = P::by_name(name);
        const auto& j = *p.complex_structure;
        CHECK(is_complex_parallelizable(p, j));
        CHECK(is_integrable(p, j));
        CHECK(ext_d(p, chern_ricci_potential(p, j)).is_zero());
    }
    for (const auto& name : {"su2su2", "hopf_t2"}) {
        CAPTURE(name);
        auto p = P::by_name(name);
        CHECK_FALSE(is_complex_parallelizable(p, *p.complex_structure));
    }
    auto hopf = P::hopf_torus();
    CHECK(is_integrable(hopf, *hopf.complex_structure));
    CHECK(bismut_ricci_form(hopf, *hopf.metric, *hopf.complex_structure).is_zero());
}

TEST_CASE("catalog entries recompute their tags")
{
    std::set<std::string> names;
    for (const auto& e : catalog::entries()) {
        CAPTURE(e.name);
        CHECK(names.insert(e.name).second);
        CHECK(std::is_sorted(e.tags.begin(), e.tags.end()));
        auto r = catalog::check(e);
        CHECK(r.ok);
        CHECK(r.computed_tags == e.tags);
    }
    CHECK(names.size() >= 20);
    CHECK_THROWS_AS(catalog::find("no-such-entry"), DomainError);

    // a tampered entry is caught
    auto e = catalog::find("su4-u1-unbalanced");
    e.tags = {"c1-zero"};
    CHECK_FALSE(catalog::check(e).ok);
}

TEST_CASE("presentation JSON round trip")
{
    for (const auto& name : P::shipped_names()) {
        CAPTURE(name);
        auto p = P::by_name(name);
        auto back = J::presentation_from_json(J::to_json(p));
        CHECK(J::same_presentation(p, back));
        CHECK(J::to_json(back) == J::to_json(p));
    }
    CHECK_FALSE(J::same_presentation(P::su2su2(0, 1), P::su2su2(1, 1)));
}

TEST_CASE("shipped presentation files match the builders")
{
    for (const auto& name : P::shipped_names()) {
        CAPTURE(name);
        auto p = J::load_presentation(std::string(CYTKIT_DATA_DIR) + "/presentations/" + name + ".json");
        CHECK(J::same_presentation(p, P::by_name(name)));
    }
}

TEST_CASE("malformed presentations are domain errors")
{
    using nlohmann::json;
    auto base = J::to_json(P::heisenberg_c());
    CHECK_NOTHROW(J::presentation_from_json(base));

    auto bad = base;
    bad.erase("basis");
    CHECK_THROWS_AS(J::presentation_from_json(bad), DomainError);
    bad = base;
    bad["d"]["nope"] = json::array();
    CHECK_THROWS_AS(J::presentation_from_json(bad), DomainError);
    bad = base;
    bad["d"][base["basis"][0].get<std::string>()] = json::parse(R"([["1", 0, 17]])");
    CHECK_THROWS_AS(J::presentation_from_json(bad), DomainError);
    bad = base;
    bad["d"][base["basis"][0].get<std::string>()] = json::parse(R"([["1.5", 0, 1]])");
    CHECK_THROWS_AS(J::presentation_from_json(bad), DomainError);
    bad = base;
    bad["J"] = json::parse(R"([["0","1"],["-1","0"]])");
    CHECK_THROWS_AS(J::presentation_from_json(bad), DomainError);
    bad = base;
    bad["metric"] = "identity";
    CHECK_THROWS_AS(J::presentation_from_json(bad), DomainError);

    // d^2 != 0
    auto jac = json::parse(R"({"basis":["x0","x1","x2","x3"],
        "d":{"x2":[["1",0,1]],"x3":[["1",0,2]],"x0":[["1",1,3]]}})");
    CHECK_THROWS_AS(J::presentation_from_json(jac), DomainError);
    CHECK_THROWS_AS(J::load_presentation("/nonexistent/file.json"), DomainError);
}

TEST_CASE("rationals and forms in JSON")
{
    CHECK(J::parse_rational_json(nlohmann::json("-7/21")) == Rat(-1, 3));
    CHECK(J::parse_rational_json(nlohmann::json(4)) == 4);
    CHECK_THROWS_AS(J::parse_rational_json(nlohmann::json(0.5)), DomainError);
    CHECK_THROWS_AS(J::parse_rational_json(nlohmann::json("1/0")), DomainError);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        KForm f(6, 3);
        for (int t = 0; t < 5; ++t) {
            std::vector<std::size_t> idx(6);
            std::iota(idx.begin(), idx.end(), 0);
            std::shuffle(idx.begin(), idx.end(), rng);
            idx.resize(3);
            f += KForm::monomial(6, idx, random_rat(rng, 5));
        }
        CHECK(J::form_from_json(J::form(f), 6, 3) == f);
    }
}

TEST_CASE("cohomology report JSON")
{
    auto r = J::cohomology_report(1, 0);
    CHECK(r.eligible);
    auto j = J::to_json(r);
    CHECK(j["cohomology"]["4"]["torsion"] == nlohmann::json::array({"13"}));
    CHECK(j["cohomology"]["3"]["rank"] == 0);
    CHECK(j["cohomology"]["5"]["rank"] == 1);
    CHECK(J::cohomology_report_from_json(j) == r);
    CHECK(J::cohomology_report_from_json(nlohmann::json::parse(j.dump())) == r);
    CHECK_THROWS_AS(J::cohomology_report(2, 2), DomainError);
    j.erase("M4");
    CHECK_THROWS_AS(J::cohomology_report_from_json(j), DomainError);
}

TEST_CASE("catalog entry JSON")
{
    for (const auto& e : catalog::entries()) {
        auto back = J::catalog_entry_from_json(J::to_json(e));
        CHECK(back.name == e.name);
        CHECK(back.kind == e.kind);
        CHECK(back.construction == e.construction);
        CHECK(back.tags == e.tags);
    }
    auto bad = J::to_json(catalog::entries().front());
    bad["kind"] = "other";
    CHECK_THROWS_AS(J::catalog_entry_from_json(bad), DomainError);
}

TEST_CASE("CLI cohomology output parses back to the report")
{
    std::ifstream in(std::string(CYTKIT_GOLDEN_DIR) + "/cohomology_1_0.json");
    REQUIRE(in);
    auto j = nlohmann::json::parse(in);
    CHECK(J::cohomology_report_from_json(j) == J::cohomology_report(1, 0));
}
