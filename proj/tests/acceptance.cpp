// Acceptance suite: one test case per acceptance criterion, each printing
// a single PASS/FAIL line. Run from the build directory (artifacts and
// temp files are written to the working directory).

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <indpoly/classify.hpp>
#include <indpoly/expr.hpp>
#include <indpoly/fixtures.hpp>
#include <indpoly/graph.hpp>
#include <indpoly/graph6.hpp>
#include <indpoly/independence.hpp>
#include <indpoly/report.hpp>
#include <indpoly/verify.hpp>

#include "test_support.hpp"

#ifndef INDPOLY_CLI_PATH
#define INDPOLY_CLI_PATH "indpoly"
#endif

using namespace indpoly;

namespace {

struct Criterion {
    std::string id;
    std::string description;
    std::vector<std::string> failures;

    void expect(bool cond, const std::string& what) {
        if (!cond && failures.size() < 10) failures.push_back(what);
        if (!cond && failures.size() == 10) failures.push_back("...");
    }

    bool finish() {
        std::cout << "[" << id << "] " << (failures.empty() ? "PASS" : "FAIL") << " - "
                  << description << "\n";
        for (const auto& f : failures) std::cout << "    " << f << "\n";
        std::cout.flush();
        return failures.empty();
    }
};

CoeffSeq seq(std::vector<long long> v) { return CoeffSeq::from_ints(v); }

// exit code of the CLI, or -1 on spawn failure / negative on signal
int run_cli(const std::string& args, const std::string& stderr_file = "/dev/null") {
    std::string cmd =
        std::string(INDPOLY_CLI_PATH) + " " + args + " >/dev/null 2>" + stderr_file;
    int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -2;
}

std::size_t file_size(const std::string& path) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) return 0;
    return static_cast<std::size_t>(in.tellg());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
}

const std::vector<Graph>& exhaustive_through_6() {
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> out;
        for (int n = 1; n <= 6; ++n)
            testsupport::for_each_graph(n, [&](const Graph& g, std::uint64_t) {
                out.push_back(g);
            });
        return out;
    }();
    return graphs;
}

std::vector<Graph> sampled_order7(int count, unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(testsupport::random_graph_uniform(rng, 7));
    return out;
}

}  // namespace

TEST_CASE("criterion 1: published polynomials reproduce exactly") {
    Criterion c{"criterion 1", "fixtures reproduce every printed polynomial in under 10s"};
    auto t0 = std::chrono::steady_clock::now();

    const std::vector<std::pair<std::string, std::vector<long long>>> pinned = {
        {"K1,3", {1, 4, 3, 1}},
        {"K24 + (K3 | K3 | K4)", {1, 34, 33, 36}},
        {"P5", {1, 5, 6, 1}},
        {"C7", {1, 7, 14, 7}},
        {"deledge(K4, 0, 1)", {1, 4, 1}},
        {"K10 + E6", {1, 16, 15, 20, 15, 6, 1}},
        {"(K24 + E6) | (K25 + E6)",
         {1, 61, 960, 955, 1475, 1527, 1218, 841, 495, 220, 66, 12, 1}},
        {"4*C5", {1, 20, 170, 800, 2275, 4000, 4250, 2500, 625}},
        {"(K95 + 4*K3) | C5", {1, 112, 594, 913, 891, 945, 405}},
        {"addedge((K97 + 4*K3) | C5, 0, 109)", {1, 114, 603, 921, 891, 945, 405}},
    };
    for (const auto& [expr, coeffs] : pinned) {
        CoeffSeq got = independence_polynomial(graph_from_expr(expr), kFixtureMaxVertices);
        c.expect(got == seq(coeffs), expr + " mismatched");
    }

    for (const auto& o : run_fixtures(false))
        c.expect(o.passed, "fixture " + o.name + ": " + o.detail);

    c.expect(run_cli("fixtures --run") == 0, "CLI `fixtures --run` exited nonzero");
    c.expect(run_cli("fixtures --run --all --format text") == 0,
             "CLI `fixtures --run --all` exited nonzero");

    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(dt < 10.0, "runtime " + std::to_string(dt) + "s exceeds 10s");
    REQUIRE(c.finish());
}

TEST_CASE("criterion 2: recursion matches the subset-enumeration oracle") {
    Criterion c{"criterion 2",
                "oracle equivalence: exhaustive n<=6, sampled n=7, 1000 random n<=18"};

    for (const Graph& g : exhaustive_through_6())
        c.expect(independence_polynomial(g) == independence_polynomial_bruteforce(g),
                 "mismatch on a graph with " + std::to_string(g.order()) + " vertices");

    for (const Graph& g : sampled_order7(20000, 1001))
        c.expect(independence_polynomial(g) == independence_polynomial_bruteforce(g),
                 "mismatch on a sampled 7-vertex graph");

    std::mt19937 rng(1002);
    std::uniform_int_distribution<int> order(1, 18);
    std::uniform_real_distribution<double> density(0.05, 0.95);
    for (int i = 0; i < 1000; ++i) {
        Graph g = testsupport::random_graph(rng, order(rng), density(rng));
        c.expect(independence_polynomial(g) == independence_polynomial_bruteforce(g),
                 "mismatch on random graph #" + std::to_string(i));
    }
    REQUIRE(c.finish());
}

TEST_CASE("criterion 3: proved statements hold whenever their premises do") {
    Criterion c{"criterion 3",
                "soundness sweep: zero violations with true premises (exhaustive n<=6, "
                "sampled n=7)"};

    long long premise_hits = 0;
    auto sweep = [&](const Graph& g) {
        for (const CheckVerdict& v :
             {verify_lemma1(g), verify_prop1(g), verify_prop2(g), verify_prop3(g),
              verify_cor1(g), verify_cor2_cor3(g), verify_main_theorem(g), finbow_verdict(g)}) {
            c.expect(v.first_violation.has_value() == !v.conclusion_holds,
                     v.statement_id + ": violation/conclusion inconsistency");
            if (v.premise == PremiseStatus::Holds) {
                ++premise_hits;
                c.expect(v.conclusion_holds,
                         v.statement_id + " failed with a true premise on " +
                             encode_graph6(g));
            }
        }
    };
    for (const Graph& g : exhaustive_through_6()) sweep(g);
    for (const Graph& g : sampled_order7(3000, 1003)) sweep(g);
    c.expect(premise_hits > 50000, "suspiciously few true premises: " +
                                       std::to_string(premise_hits));

    // the pendant-matching agreement also sweeps order 7 exhaustively
    testsupport::for_each_graph(7, [&](const Graph& g, std::uint64_t) {
        Verdict v = finbow_check(g);
        if (v.premise == PremiseStatus::Holds)
            c.expect(v.conclusion_holds, "agreement check failed on " + encode_graph6(g));
    });
    REQUIRE(c.finish());
}

TEST_CASE("criterion 4: the published violations reproduce exactly") {
    Criterion c{"criterion 4", "known violations appear with the printed values"};

    Graph cycles = graph_from_expr("4*C5");
    CheckVerdict p3 = verify_prop3(cycles, kDefaultMaxVertices, 20);
    c.expect(p3.premise == PremiseStatus::Fails, "4*C5 should fail the perfection premise");
    c.expect(!p3.conclusion_holds, "4*C5 tail check should fail");
    c.expect(p3.first_violation == Violation{5, BigInt(4000), BigInt(4250)},
             "4*C5 violation is not (k=5, 4000, 4250)");

    CheckVerdict p2 = verify_prop2(complete_bipartite(1, 3));
    bool found = false;
    for (const auto& p : p2.parts)
        if (p.name == "ii" && p.violation && *p.violation == Violation{2, BigInt(4), BigInt(3)})
            found = true;
    c.expect(found, "K1,3 part (ii) violation is not (k=2, 4, 3)");

    CoeffSeq product = independence_polynomial(graph_from_expr("(K24 + E6) | (K25 + E6)"), 64);
    ShapeReport psh = shape(product);
    c.expect(!psh.unimodal, "order-12 product should be non-unimodal");
    c.expect(product[2] == 960 && product[3] == 955 && product[4] == 1475,
             "order-12 product dip coefficients mismatch");
    c.expect(product[2] > product[3] && product[3] < product[4],
             "order-12 product dip shape mismatch");
    c.expect(psh.head_nondecreasing_through == 2 && psh.tail_nonincreasing_from == 5,
             "order-12 product dip not located at the bold indices");

    CoeffSeq k95 = independence_polynomial(graph_from_expr("(K95 + 4*K3) | C5"),
                                           kFixtureMaxVertices);
    ShapeReport ksh = shape(k95);
    c.expect(!ksh.unimodal, "K95 construction should be non-unimodal");
    c.expect(k95[3] == 913 && k95[4] == 891 && k95[5] == 945, "K95 dip coefficients mismatch");
    c.expect(k95[3] > k95[4] && k95[4] < k95[5], "K95 dip shape mismatch");
    REQUIRE(c.finish());
}

TEST_CASE("criterion 5: classifier ground truth") {
    Criterion c{"criterion 5", "classifier answers on the pinned graphs; bipartite => perfect"};

    c.expect(is_very_well_covered(star_graph(complete_graph(3))), "K3^* not very well-covered");
    c.expect(!is_well_covered(path_graph(5)).value, "P5 reported well-covered");
    c.expect(is_well_covered(cycle_graph(7)).value, "C7 not well-covered");
    c.expect(!is_very_well_covered(cycle_graph(7)), "C7 reported very well-covered");

    QuasiRegResult claw = is_quasi_regularizable(complete_bipartite(1, 3));
    c.expect(!claw.value, "K1,3 reported quasi-regularizable");
    c.expect(claw.witness == VertexSet{1, 2, 3}, "K1,3 witness is not the leaf set");

    int bipartite_checked = 0;
    for (const Graph& g : exhaustive_through_6()) {
        if (!is_bipartite(g)) continue;
        ++bipartite_checked;
        c.expect(is_perfect(g).status == PerfectStatus::True,
                 "bipartite graph judged imperfect: " + encode_graph6(g));
    }
    std::mt19937 rng(1005);
    for (int i = 0; i < 500; ++i) {
        int n = 7 + i % 4;  // orders 7..10
        std::uniform_int_distribution<int> split(1, n - 1);
        int a = split(rng);
        std::bernoulli_distribution coin(0.4);
        std::vector<Edge> edges;
        for (int u = 0; u < a; ++u)
            for (int v = a; v < n; ++v)
                if (coin(rng)) edges.emplace_back(u, v);
        Graph g = Graph::make(n, edges);
        ++bipartite_checked;
        c.expect(is_perfect(g, 10).status == PerfectStatus::True,
                 "bipartite graph judged imperfect: " + encode_graph6(g));
    }
    c.expect(bipartite_checked > 600, "too few bipartite graphs checked");
    REQUIRE(c.finish());
}

TEST_CASE("criterion 6: window arithmetic boundary") {
    Criterion c{"criterion 6", "window width <= 1 for alpha 1..9, width 2 at alpha 10"};
    for (int alpha = 1; alpha <= 9; ++alpha) {
        WindowReport w = roller_coaster_window(alpha);
        c.expect(w.upper - w.lower <= 1,
                 "width > 1 at alpha " + std::to_string(alpha));
        c.expect(w.lower == (alpha + 1) / 2, "lower bound wrong at alpha " +
                                                 std::to_string(alpha));
    }
    WindowReport w10 = roller_coaster_window(10);
    c.expect(w10.upper - w10.lower == 2, "width at alpha 10 is not 2");
    REQUIRE(c.finish());
}

TEST_CASE("criterion 7: conjecture evidence run") {
    Criterion c{"criterion 7",
                "no log-concavity counterexample among very well-covered graphs of order <= "
                "10; star constructions up to alpha 9 stay unimodal"};

    std::vector<GraphSource> corpus;
    for (const Graph& g : exhaustive_through_6()) corpus.emplace_back(encode_graph6(g), g);
    std::mt19937 rng(1007);
    for (int i = 0; i < 20000; ++i) {
        Graph g = testsupport::random_graph_uniform(rng, 8);
        corpus.emplace_back(encode_graph6(g), g);
    }
    for (int i = 0; i < 20000; ++i) {
        Graph g = testsupport::random_graph_uniform(rng, 10);
        corpus.emplace_back(encode_graph6(g), g);
    }
    for (int i = 0; i < 300; ++i) {
        std::uniform_int_distribution<int> order(1, 5);
        Graph g = star_graph(testsupport::random_graph(rng, order(rng), 0.4));
        corpus.emplace_back(encode_graph6(g), g);
    }

    std::size_t filtered = 0;
    for (const auto& [id, g] : corpus)
        if (g.order() > 0 && g.order() <= 10 && is_very_well_covered(g)) ++filtered;
    c.expect(filtered > 400, "very well-covered sample too thin: " + std::to_string(filtered));

    auto records = hunt(corpus, "very-well-covered", "log-concave");
    c.expect(records.empty(),
             std::to_string(records.size()) + " unexpected counterexample records");

    // archive the run as a test artifact
    OrderedJson run = make_run_report("hunt", kDefaultMaxVertices, kDefaultPerfectMaxVertices);
    run["predicate"] = "very-well-covered";
    run["property"] = "log-concave";
    run["corpus_size"] = corpus.size();
    run["very_well_covered_matches"] = filtered;
    OrderedJson arr = OrderedJson::array();
    for (const auto& rec : records) arr.push_back(json_of(rec));
    run["counterexamples"] = arr;
    write_file("acceptance_hunt_report.json", run.dump(2) + "\n");
    c.expect(file_size("acceptance_hunt_report.json") > 0, "hunt report artifact not written");

    std::uniform_int_distribution<int> base_order(1, 9);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int i = 0; i < 500; ++i) {
        Graph base = testsupport::random_graph(rng, base_order(rng), density(rng));
        Graph gs = star_graph(base);
        CoeffSeq poly = independence_polynomial(gs);
        c.expect(poly.degree() == base.order(), "star construction alpha mismatch");
        c.expect(shape(poly).unimodal,
                 "unimodality failed for a star construction with alpha " +
                     std::to_string(poly.degree()));
    }
    REQUIRE(c.finish());
}

TEST_CASE("criterion 8: malformed inputs diagnose cleanly with exit code 2") {
    Criterion c{"criterion 8", "20+ malformed inputs: diagnostics and exit code 2, no crashes"};

    std::vector<std::string> expr_cases = {
        "C2",       "K0",  "Q5", "(K3", "K3 +", "addedge(K3, 0)", "3K5", "deledge(K3, 0, 7)",
        "deledge(K3 | K3, 0, 3)",
    };
    std::vector<std::string> g6_cases = {"D?", "D?{?", "D?}", "D {", "~?", ">>graph6<"};
    std::vector<std::string> edge_cases = {"n 2\n0 0\n", "n 3\n0 5\n", "x 3\n",
                                           "n 3\n0\n",   "n 3\n0 1 2\n", "n -1\n"};

    int cases = 0;
    auto check_case = [&](const std::string& label, const std::string& args) {
        ++cases;
        std::string err_file = "acceptance_stderr_" + std::to_string(cases) + ".txt";
        int rc = run_cli(args, err_file);
        c.expect(rc == 2, label + ": exit code " + std::to_string(rc) + " (wanted 2)");
        c.expect(file_size(err_file) > 0, label + ": no diagnostic on stderr");
        std::remove(err_file.c_str());
    };

    for (const auto& e : expr_cases) check_case("expr " + e, "compute --expr '" + e + "'");
    for (std::size_t i = 0; i < g6_cases.size(); ++i) {
        std::string path = "acceptance_bad_" + std::to_string(i) + ".g6";
        write_file(path, g6_cases[i] + "\n");
        check_case("graph6 case " + std::to_string(i), "compute --g6 " + path);
        std::remove(path.c_str());
    }
    for (std::size_t i = 0; i < edge_cases.size(); ++i) {
        std::string path = "acceptance_bad_" + std::to_string(i) + ".edges";
        write_file(path, edge_cases[i]);
        check_case("edge-list case " + std::to_string(i), "classify --edges " + path);
        std::remove(path.c_str());
    }
    check_case("unknown flag", "compute --wat");
    check_case("missing input source", "compute");
    check_case("missing file", "compute --g6 acceptance_no_such_file.g6");

    c.expect(cases >= 20, "only " + std::to_string(cases) + " cases exercised");

    // valid inputs still succeed end to end
    c.expect(run_cli("compute --expr C7 --format text") == 0, "valid compute failed");
    c.expect(run_cli("verify --checks prop3 --expr '4*C5' --perfect-max-n 20") == 0,
             "valid verify failed");
    REQUIRE(c.finish());
}
