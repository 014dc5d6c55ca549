#include <catch2/catch_amalgamated.hpp>

#include <indpoly/fixtures.hpp>
#include <indpoly/report.hpp>

#include "test_support.hpp"

using namespace indpoly;

TEST_CASE("the built-in catalog reproduces every published value") {
    auto outcomes = run_fixtures(false);
    CHECK(outcomes.size() >= 12);
    for (const auto& o : outcomes) {
        INFO(o.name << ": " << o.detail);
        CHECK(o.passed);
    }
}

TEST_CASE("drawing reconstructions match their printed coefficients") {
    auto outcomes = run_fixtures(true);
    int reconstructions = 0;
    for (const auto& o : outcomes) {
        INFO(o.name << ": " << o.detail);
        CHECK(o.passed);
        if (o.name.rfind("drawing-", 0) == 0) ++reconstructions;
    }
    CHECK(reconstructions == 4);
}

TEST_CASE("catalog entries are marked and filtered") {
    bool has_reconstruction = false;
    for (const Fixture& f : paper_fixtures()) has_reconstruction |= f.reconstruction;
    CHECK(has_reconstruction);
    for (const auto& o : run_fixtures(false)) CHECK(o.name.rfind("drawing-", 0) != 0);
}

TEST_CASE("a deliberately wrong expectation is flagged") {
    Fixture broken;
    broken.name = "broken";
    broken.expr = "C7";
    broken.coeffs = {1, 7, 14, 8};
    FixtureOutcome o = run_fixture(broken);
    CHECK_FALSE(o.passed);
    CHECK(o.detail.find("polynomial mismatch") != std::string::npos);
}

TEST_CASE("JSON reports are deterministic byte for byte") {
    auto build = [] {
        GraphReport r;
        r.source = "expr";
        r.input = "C7";
        r.graph = cycle_graph(7);
        r.poly = independence_polynomial(r.graph);
        r.has_poly = true;
        r.poly_shape = shape(r.poly);
        r.window = roller_coaster_window(r.poly.degree());
        r.classes = classify(r.graph);
        r.verdicts.push_back(verify_prop3(r.graph));
        OrderedJson run = make_run_report("compute", 40, 14);
        run["graphs"] = OrderedJson::array({json_of(r)});
        return run.dump(2);
    };
    std::string a = build();
    std::string b = build();
    CHECK(a == b);
    CHECK(a.find("\"coefficients\"") != std::string::npos);
    CHECK(a.find("\"1\"") != std::string::npos);  // decimal strings, not numbers
}

TEST_CASE("JSON shapes carry the documented fields") {
    OrderedJson cls = json_of(classify(path_graph(5)));
    CHECK(cls["girth"] == "infinity");
    CHECK(cls["tree"] == true);
    CHECK(cls["well_covered"] == false);

    OrderedJson big = json_of(classify(edgeless_graph(15)));
    CHECK_FALSE(big.contains("perfect"));  // skipped for size: key absent

    OrderedJson verdict = json_of(verify_prop2(complete_bipartite(1, 3)));
    CHECK(verdict["premise"] == "fails");
    CHECK(verdict["conclusion_holds"] == false);
    REQUIRE(verdict.contains("first_violation"));
    CHECK(verdict["first_violation"]["left"].get<std::string>() == "8");
    bool found_part_ii = false;
    for (const auto& p : verdict["parts"]) {
        if (p["part"] == "ii") {
            found_part_ii = true;
            CHECK(p["violation"]["k"] == 2);
            CHECK(p["violation"]["left"] == "4");
            CHECK(p["violation"]["right"] == "3");
        }
    }
    CHECK(found_part_ii);
}

TEST_CASE("CSV flattening") {
    CHECK(csv_coeffs(independence_polynomial(cycle_graph(7))) == "1;7;14;7");
    CHECK(csv_escape("plain") == "plain");
    CHECK(csv_escape("a,b") == "\"a,b\"");
    CHECK(csv_escape("say \"hi\"") == "\"say \"\"hi\"\"\"");
}
