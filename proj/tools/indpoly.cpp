// indpoly: independence polynomials, class recognizers, inequality
// checks, and a counterexample hunt over graph corpora.
//
// Exit codes: 0 success, 1 counterexample or fixture mismatch found,
// 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <indpoly/classify.hpp>
#include <indpoly/expr.hpp>
#include <indpoly/fixtures.hpp>
#include <indpoly/graph.hpp>
#include <indpoly/graph6.hpp>
#include <indpoly/independence.hpp>
#include <indpoly/polyseq.hpp>
#include <indpoly/report.hpp>
#include <indpoly/verify.hpp>

namespace {

using namespace indpoly;

struct GlobalOptions {
    std::string format = "json";
    int max_n = kDefaultMaxVertices;
    int perfect_max_n = kDefaultPerfectMaxVertices;
};

struct InputOptions {
    std::string g6_file;
    std::string edges_file;
    std::string expr;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> nonempty_lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

std::vector<GraphSource> load_inputs(const InputOptions& in) {
    std::vector<GraphSource> out;
    if (!in.expr.empty()) {
        out.emplace_back(in.expr, graph_from_expr(in.expr));
    } else if (!in.g6_file.empty()) {
        for (const std::string& line : nonempty_lines(read_file(in.g6_file)))
            out.emplace_back(line, parse_graph6(line));
    } else {
        out.emplace_back(in.edges_file, parse_edge_list(read_file(in.edges_file)));
    }
    return out;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* grp = cmd->add_option_group("input", "graph source (exactly one)");
    grp->add_option("--g6", in.g6_file, "file of graph6 lines, one graph per line");
    grp->add_option("--edges", in.edges_file, "edge-list file: 'n <count>' then 'u v' lines");
    grp->add_option("--expr", in.expr,
                    "construction expression, e.g. \"K24 + (K3 | K3 | K4)\" or \"K3^*\"");
    grp->require_option(1);
}

void emit_json(const OrderedJson& j) { std::cout << j.dump(2) << "\n"; }

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string verdict_line(const CheckVerdict& v) {
    std::string s = v.statement_id + ": premise=" + to_string(v.premise) +
                    " conclusion=" + (v.conclusion_holds ? "holds" : "fails");
    if (v.first_violation)
        s += " violation k=" + std::to_string(v.first_violation->index) + " (" +
             v.first_violation->left.str() + " vs " + v.first_violation->right.str() + ")";
    return s;
}

int cmd_compute(const GlobalOptions& opt, const InputOptions& in) {
    auto inputs = load_inputs(in);
    OrderedJson run = make_run_report("compute", opt.max_n, opt.perfect_max_n);
    OrderedJson graphs = OrderedJson::array();
    std::vector<GraphReport> reports;
    for (const auto& [identity, g] : inputs) {
        GraphReport r;
        r.source = !in.expr.empty() ? "expr" : !in.g6_file.empty() ? "graph6" : "edges";
        r.input = identity;
        r.graph = g;
        r.poly = independence_polynomial(g, opt.max_n);
        r.has_poly = true;
        r.poly_shape = shape(r.poly);
        if (r.poly.degree() >= 1) r.window = roller_coaster_window(r.poly.degree());
        reports.push_back(r);
        graphs.push_back(json_of(r));
    }
    if (opt.format == "json") {
        run["graphs"] = graphs;
        emit_json(run);
    } else if (opt.format == "csv") {
        std::cout << "input,n,edges,alpha,coefficients,unimodal,log_concave,window_lower,"
                     "window_upper\n";
        for (const auto& r : reports) {
            std::cout << csv_escape(r.input) << "," << r.graph.order() << ","
                      << r.graph.edge_count() << "," << r.poly.degree() << ","
                      << csv_coeffs(r.poly) << "," << bool_str(r.poly_shape->unimodal) << ","
                      << bool_str(r.poly_shape->log_concave) << ","
                      << (r.window ? std::to_string(r.window->lower) : "") << ","
                      << (r.window ? std::to_string(r.window->upper) : "") << "\n";
        }
    } else {
        for (const auto& r : reports) {
            std::cout << r.input << ": n=" << r.graph.order() << " m=" << r.graph.edge_count()
                      << " alpha=" << r.poly.degree() << "\n";
            std::cout << "  I = " << to_polynomial_string(r.poly) << "\n";
            std::cout << "  unimodal=" << bool_str(r.poly_shape->unimodal)
                      << " log-concave=" << bool_str(r.poly_shape->log_concave);
            if (r.window)
                std::cout << " window=[" << r.window->lower << "," << r.window->upper << "]";
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_classify(const GlobalOptions& opt, const InputOptions& in) {
    auto inputs = load_inputs(in);
    OrderedJson run = make_run_report("classify", opt.max_n, opt.perfect_max_n);
    OrderedJson graphs = OrderedJson::array();
    std::vector<GraphReport> reports;
    for (const auto& [identity, g] : inputs) {
        GraphReport r;
        r.source = !in.expr.empty() ? "expr" : !in.g6_file.empty() ? "graph6" : "edges";
        r.input = identity;
        r.graph = g;
        r.classes = classify(g, opt.perfect_max_n);
        reports.push_back(r);
        graphs.push_back(json_of(r));
    }
    if (opt.format == "json") {
        run["graphs"] = graphs;
        emit_json(run);
    } else if (opt.format == "csv") {
        std::cout << "input,n,well_covered,very_well_covered,quasi_regularizable,perfect,"
                     "bipartite,tree,girth\n";
        for (const auto& r : reports) {
            const auto& c = *r.classes;
            std::cout << csv_escape(r.input) << "," << r.graph.order() << ","
                      << bool_str(c.well_covered) << "," << bool_str(c.very_well_covered) << ","
                      << bool_str(c.quasi_regularizable) << ","
                      << (c.perfect ? bool_str(*c.perfect) : "skipped") << ","
                      << bool_str(c.bipartite) << "," << bool_str(c.tree) << ","
                      << (c.girth ? std::to_string(*c.girth) : "infinity") << "\n";
        }
    } else {
        for (const auto& r : reports) {
            const auto& c = *r.classes;
            std::cout << r.input << ": well-covered=" << bool_str(c.well_covered)
                      << " very-well-covered=" << bool_str(c.very_well_covered)
                      << " quasi-regularizable=" << bool_str(c.quasi_regularizable)
                      << " perfect=" << (c.perfect ? bool_str(*c.perfect) : "skipped")
                      << " bipartite=" << bool_str(c.bipartite) << " tree=" << bool_str(c.tree)
                      << " girth=" << (c.girth ? std::to_string(*c.girth) : "infinity") << "\n";
            if (c.witness) std::cout << "  witness: " << *c.witness << "\n";
        }
    }
    return 0;
}

const std::vector<std::string>& all_check_names() {
    static const std::vector<std::string> names = {"lemma1", "prop1",     "prop2",   "prop3",
                                                   "cor1",   "cor2_cor3", "theorem", "finbow"};
    return names;
}

CheckVerdict run_check(const std::string& name, const Graph& g, const GlobalOptions& opt) {
    if (name == "lemma1") return verify_lemma1(g, opt.max_n);
    if (name == "prop1") return verify_prop1(g, opt.max_n);
    if (name == "prop2") return verify_prop2(g, opt.max_n);
    if (name == "prop3") return verify_prop3(g, opt.max_n, opt.perfect_max_n);
    if (name == "cor1") return verify_cor1(g, opt.max_n);
    if (name == "cor2" || name == "cor3" || name == "cor2_cor3") return verify_cor2_cor3(g, opt.max_n);
    if (name == "theorem") return verify_main_theorem(g, opt.max_n);
    if (name == "finbow") return finbow_verdict(g);
    throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<std::string> parse_checks(const std::string& spec) {
    if (spec == "all") return all_check_names();
    std::vector<std::string> out;
    std::istringstream in(spec);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name.empty()) continue;
        run_check(name, Graph::make(1, {}), GlobalOptions{});  // validates the name
        out.push_back(name);
    }
    if (out.empty()) throw std::invalid_argument("no checks selected");
    return out;
}

int cmd_verify(const GlobalOptions& opt, const InputOptions& in, const std::string& checks_spec) {
    auto checks = parse_checks(checks_spec);
    auto inputs = load_inputs(in);
    OrderedJson run = make_run_report("verify", opt.max_n, opt.perfect_max_n);
    OrderedJson graphs = OrderedJson::array();
    std::vector<GraphReport> reports;
    for (const auto& [identity, g] : inputs) {
        GraphReport r;
        r.source = !in.expr.empty() ? "expr" : !in.g6_file.empty() ? "graph6" : "edges";
        r.input = identity;
        r.graph = g;
        r.poly = independence_polynomial(g, opt.max_n);
        r.has_poly = true;
        for (const auto& name : checks) r.verdicts.push_back(run_check(name, g, opt));
        reports.push_back(r);
        graphs.push_back(json_of(r));
    }
    if (opt.format == "json") {
        run["graphs"] = graphs;
        emit_json(run);
    } else if (opt.format == "csv") {
        std::cout << "input,check,premise,conclusion_holds,violation_k,violation_left,"
                     "violation_right\n";
        for (const auto& r : reports)
            for (const auto& v : r.verdicts) {
                std::cout << csv_escape(r.input) << "," << v.statement_id << ","
                          << to_string(v.premise) << "," << bool_str(v.conclusion_holds) << ",";
                if (v.first_violation)
                    std::cout << v.first_violation->index << "," << v.first_violation->left.str()
                              << "," << v.first_violation->right.str();
                else
                    std::cout << ",,";
                std::cout << "\n";
            }
    } else {
        for (const auto& r : reports) {
            std::cout << r.input << ": I = " << to_polynomial_string(r.poly) << "\n";
            for (const auto& v : r.verdicts) std::cout << "  " << verdict_line(v) << "\n";
        }
    }
    return 0;
}

int cmd_hunt(const GlobalOptions& opt, const std::string& corpus_file,
             const std::string& predicate, const std::string& property) {
    std::vector<GraphSource> corpus;
    for (const std::string& line : nonempty_lines(read_file(corpus_file)))
        corpus.emplace_back(line, parse_graph6(line));
    HuntOptions hopt{opt.max_n, opt.perfect_max_n};
    auto records = hunt(corpus, predicate, property, hopt);

    if (opt.format == "json") {
        OrderedJson run = make_run_report("hunt", opt.max_n, opt.perfect_max_n);
        run["corpus"] = corpus_file;
        run["corpus_size"] = corpus.size();
        run["predicate"] = predicate;
        run["property"] = property;
        OrderedJson arr = OrderedJson::array();
        for (const auto& rec : records) arr.push_back(json_of(rec));
        run["counterexamples"] = arr;
        emit_json(run);
    } else if (opt.format == "csv") {
        std::cout << "index,identity,n_coefficients,coefficients,unimodal,log_concave\n";
        for (const auto& rec : records)
            std::cout << rec.index << "," << csv_escape(rec.identity) << ","
                      << rec.poly.size() << "," << csv_coeffs(rec.poly) << ","
                      << bool_str(rec.poly_shape.unimodal) << ","
                      << bool_str(rec.poly_shape.log_concave) << "\n";
    } else {
        std::cout << "scanned " << corpus.size() << " graphs: " << records.size()
                  << " counterexample(s) where '" << predicate << "' holds but '" << property
                  << "' fails\n";
        for (const auto& rec : records)
            std::cout << "  #" << rec.index << " " << rec.identity
                      << "  I = " << to_polynomial_string(rec.poly) << "\n";
    }
    return records.empty() ? 0 : 1;
}

int cmd_fixtures(const GlobalOptions& opt, bool list_only, bool include_reconstructions,
                 int fixtures_max_n) {
    if (list_only) {
        if (opt.format == "json") {
            OrderedJson run = make_run_report("fixtures", fixtures_max_n, opt.perfect_max_n);
            OrderedJson arr = OrderedJson::array();
            for (const Fixture& f : paper_fixtures()) {
                OrderedJson j;
                j["name"] = f.name;
                if (!f.expr.empty()) j["expr"] = f.expr;
                j["sequence_only"] = f.sequence_only();
                j["reconstruction_dependent"] = f.reconstruction;
                arr.push_back(j);
            }
            run["fixtures"] = arr;
            emit_json(run);
        } else {
            for (const Fixture& f : paper_fixtures())
                std::cout << f.name << (f.reconstruction ? "  [reconstruction-dependent]" : "")
                          << "\n";
        }
        return 0;
    }

    auto outcomes = run_fixtures(include_reconstructions, fixtures_max_n);
    bool all_passed = true;
    for (const auto& o : outcomes) all_passed = all_passed && o.passed;

    if (opt.format == "json") {
        OrderedJson run = make_run_report("fixtures", fixtures_max_n, opt.perfect_max_n);
        OrderedJson arr = OrderedJson::array();
        for (const auto& o : outcomes) arr.push_back(json_of(o));
        run["fixtures"] = arr;
        run["all_passed"] = all_passed;
        emit_json(run);
    } else if (opt.format == "csv") {
        std::cout << "name,passed,coefficients,detail\n";
        for (const auto& o : outcomes)
            std::cout << csv_escape(o.name) << "," << bool_str(o.passed) << ","
                      << csv_coeffs(o.actual) << "," << csv_escape(o.detail) << "\n";
    } else {
        for (const auto& o : outcomes) {
            if (o.passed)
                std::cout << "ok   " << o.name << "  I = " << to_polynomial_string(o.actual)
                          << "\n";
            else
                std::cout << "FAIL " << o.name << "  " << o.detail << "\n";
        }
        std::cout << (all_passed ? "all fixtures passed" : "fixture mismatches found") << "\n";
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"independence polynomials of simple graphs: exact computation, class "
                 "recognizers, inequality checks, and counterexample hunting"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOptions opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--max-n", opt.max_n, "vertex-count ceiling for exponential computations")
        ->capture_default_str();
    app.add_option("--perfect-max-n", opt.perfect_max_n,
                   "vertex-count ceiling for the perfection check")
        ->capture_default_str();

    InputOptions compute_in, classify_in, verify_in;
    std::string checks_spec = "all";
    std::string corpus_file, predicate, property;
    bool fixtures_run = false, fixtures_list = false, fixtures_all = false;
    int fixtures_max_n = kFixtureMaxVertices;

    auto* compute = app.add_subcommand("compute", "independence polynomial, shape and window");
    add_input_options(compute, compute_in);

    auto* classify_cmd = app.add_subcommand("classify", "graph class recognizers");
    add_input_options(classify_cmd, classify_in);

    auto* verify = app.add_subcommand("verify", "run inequality checks against a graph");
    add_input_options(verify, verify_in);
    verify->add_option("--checks", checks_spec,
                       "'all' or comma list: lemma1,prop1,prop2,prop3,cor1,cor2_cor3,theorem,"
                       "finbow")
        ->capture_default_str();

    auto* hunt_cmd = app.add_subcommand("hunt", "scan a corpus for counterexamples");
    hunt_cmd->add_option("--corpus", corpus_file, "file of graph6 lines")->required();
    hunt_cmd->add_option("--predicate", predicate, "class filter: any, well-covered, "
                         "very-well-covered, quasi-regularizable, tree, bipartite, perfect")
        ->required();
    hunt_cmd->add_option("--property", property, "shape property: unimodal, log-concave")
        ->required();

    auto* fixtures_cmd = app.add_subcommand("fixtures", "built-in catalog of published values");
    fixtures_cmd->add_flag("--run", fixtures_run, "run the catalog and compare");
    fixtures_cmd->add_flag("--list", fixtures_list, "list catalog entries");
    fixtures_cmd->add_flag("--all", fixtures_all, "include reconstruction-dependent entries");
    fixtures_cmd->add_option("--fixtures-max-n", fixtures_max_n,
                             "vertex ceiling for catalog entries")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(opt, compute_in);
        if (classify_cmd->parsed()) return cmd_classify(opt, classify_in);
        if (verify->parsed()) return cmd_verify(opt, verify_in, checks_spec);
        if (hunt_cmd->parsed()) return cmd_hunt(opt, corpus_file, predicate, property);
        if (fixtures_cmd->parsed()) {
            if (fixtures_run == fixtures_list) {
                std::cerr << "fixtures: pass exactly one of --run or --list\n";
                return 2;
            }
            return cmd_fixtures(opt, fixtures_list, fixtures_all, fixtures_max_n);
        }
    } catch (const TooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
