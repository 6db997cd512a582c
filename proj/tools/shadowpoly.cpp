// shadowpoly: command-line front end for the coloring-graph counting library.
//
// Exit codes: 0 ok, 1 verify found a disagreement, 2 usage / bad input,
// 3 the brute-force budget was exceeded.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <shadowpoly.hpp>

using namespace shadowpoly;
using json = nlohmann::json;

namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Options {
    std::string g6;
    std::string pattern_g6;
    std::size_t r = 2;
    std::vector<std::size_t> sizes;
    std::size_t d = 1;
    std::size_t i = 0;
    int k = 0;
    int kmax = 4;
    std::uint64_t budget = kDefaultColoringBudget;
    std::string input;
    unsigned threads = 0;
    std::size_t n = 0;
    bool connected = false;
    bool trees = false;
    bool json = false;
};

using Clock = std::chrono::steady_clock;

long long elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

json degree_json(const RationalPoly& p) {
    if (p.is_zero()) return nullptr;
    return p.degree();
}

// Prints one polynomial result in the selected mode.
void emit_poly(const Options& o, const RationalPoly& p, Clock::time_point start, const std::string& pattern = {}) {
    if (!o.json) {
        std::cout << poly_format(p) << "\n";
        return;
    }
    json out;
    out["input"] = o.g6;
    if (!pattern.empty()) out["pattern"] = pattern;
    out["polynomial"] = poly_to_json(p);
    out["degree"] = degree_json(p);
    out["elapsed_ms"] = elapsed_ms(start);
    std::cout << out.dump() << "\n";
}

std::string sizes_text(const std::vector<std::size_t>& sizes) {
    std::string s;
    for (auto r : sizes) s += (s.empty() ? "K" : "xK") + std::to_string(r);
    return s;
}

int run_verify(const Options& o) {
    Graph g = parse_graph6(o.g6), h = parse_graph6(o.pattern_g6);
    auto start = Clock::now();
    RationalPoly p = count_poly(g, h);
    json rows = json::array();
    bool ok = true;
    for (int k = 0; k <= o.kmax; ++k) {
        Rational predicted = poly_eval(p, k);
        BigInt seen = oracle_count(g, h, k, o.budget);
        bool agree = predicted == Rational(seen);
        rows.push_back({{"k", k}, {"polynomial", to_fraction_string(predicted)}, {"oracle", seen.str()}, {"agree", agree}});
        if (!agree) {
            ok = false;
            std::cerr << "disagreement: G=" << o.g6 << " H=" << o.pattern_g6 << " k=" << k << " polynomial "
                      << to_fraction_string(predicted) << " oracle " << seen << "\n";
            break;
        }
        if (!o.json) std::cout << "k=" << k << " " << seen << " ok\n";
    }
    if (o.json) {
        json out{{"input", o.g6},          {"pattern", o.pattern_g6}, {"polynomial", poly_to_json(p)},
                 {"degree", degree_json(p)}, {"checks", rows},         {"agree", ok},
                 {"elapsed_ms", elapsed_ms(start)}};
        std::cout << out.dump() << "\n";
    } else if (ok) {
        std::cout << "all k agree (0.." << o.kmax << ")\n";
    }
    return ok ? 0 : kExitDisagree;
}

int run_search(const Options& o) {
    auto start = Clock::now();
    CollisionReport report;
    if (o.input == "-") {
        report = search_p2_collisions(std::cin, o.threads);
    } else {
        std::ifstream in(o.input);
        if (!in) throw std::invalid_argument("cannot open " + o.input);
        report = search_p2_collisions(in, o.threads);
    }
    for (const auto& s : report.skipped)
        std::cerr << "warning: line " << s.line << ": skipped '" << s.text << "': " << s.error << "\n";

    auto found = report.counterexamples();
    if (o.json) {
        json groups = json::array();
        for (const auto& grp : report.groups) {
            json members = json::array();
            for (const auto& m : grp.members)
                members.push_back({{"graph6", m.graph6}, {"line", m.line}, {"chromatic", poly_to_json(m.chromatic)}});
            groups.push_back({{"pairs", poly_to_json(grp.pairs)},
                              {"counterexample", grp.is_counterexample()},
                              {"members", members}});
        }
        json skipped = json::array();
        for (const auto& s : report.skipped) skipped.push_back({{"line", s.line}, {"text", s.text}, {"error", s.error}});
        json out{{"input", o.input},           {"graphs_read", report.graphs_read}, {"groups", groups},
                 {"counterexamples", found.size()}, {"skipped", skipped},            {"elapsed_ms", elapsed_ms(start)}};
        std::cout << out.dump() << "\n";
        return 0;
    }
    std::cout << "graphs read: " << report.graphs_read << "\n";
    std::cout << "pairs-polynomial collisions: " << report.groups.size() << "\n";
    std::cout << "counterexamples: " << found.size() << "\n";
    for (const auto* grp : found) {
        std::cout << "\npairs: " << poly_format(grp->pairs) << "\n";
        for (const auto& m : grp->members)
            std::cout << "  " << m.graph6 << " (line " << m.line << "): " << poly_format(m.chromatic) << "\n";
    }
    return 0;
}

int run_gds(const Options& o) {
    Graph t = parse_graph6(o.g6);
    auto start = Clock::now();
    auto entries = gds_multiset(t, o.i);
    if (o.json) {
        json arr = json::array();
        for (const auto& e : entries) arr.push_back({e.size, e.internal, e.external});
        std::cout << json{{"input", o.g6}, {"i", o.i}, {"multiset", arr}, {"elapsed_ms", elapsed_ms(start)}}.dump()
                  << "\n";
        return 0;
    }
    for (const auto& e : entries) std::cout << e.size << " " << e.internal << " " << e.external << "\n";
    return 0;
}

int run_oracle(const Options& o) {
    Graph g = parse_graph6(o.g6), h = parse_graph6(o.pattern_g6);
    auto start = Clock::now();
    BigInt count = oracle_count(g, h, o.k, o.budget);
    if (o.json)
        std::cout << json{{"input", o.g6}, {"pattern", o.pattern_g6}, {"k", o.k}, {"count", count.str()},
                          {"elapsed_ms", elapsed_ms(start)}}
                         .dump()
                  << "\n";
    else
        std::cout << count << "\n";
    return 0;
}

int run_generate(const Options& o) {
    std::vector<Graph> out = o.trees ? all_trees(o.n) : all_graphs_upto(o.n, o.connected);
    for (const auto& g : out) std::cout << encode_graph6(g) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomials counting induced subgraphs of coloring graphs"};
    app.require_subcommand(1);
    Options o;
    std::string command;

    auto add_g6 = [&](CLI::App* sub) { sub->add_option("--g6", o.g6, "base graph (graph6)")->required(); };
    auto add_pattern = [&](CLI::App* sub) {
        sub->add_option("--pattern-g6", o.pattern_g6, "pattern graph (graph6)")->required();
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", o.budget, "maximum number of colorings to enumerate");
    };
    auto make = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_flag("--json", o.json, "machine-readable output");
        sub->callback([&command, name] { command = name; });
        return sub;
    };

    add_g6(make("chromatic", "chromatic polynomial of G"));
    {
        auto* sub = make("count", "induced copies of a pattern in C_k(G)");
        add_g6(sub);
        add_pattern(sub);
    }
    add_g6(make("pairs", "edges of C_k(G)"));
    {
        auto* sub = make("clique", "induced r-cliques of C_k(G)");
        add_g6(sub);
        sub->add_option("--r", o.r, "clique size")->required()->check(CLI::Range(2, 64));
    }
    {
        auto* sub = make("product", "induced products of cliques");
        add_g6(sub);
        sub->add_option("--sizes", o.sizes, "clique sizes, comma separated")->required()->delimiter(',');
    }
    add_g6(make("hexagon", "induced 6-cycles of C_k(G)"));
    {
        auto* sub = make("tree-qd", "induced d-cubes of C_k(T) for a tree T");
        add_g6(sub);
        sub->add_option("--d", o.d, "cube dimension")->required();
    }
    {
        auto* sub = make("gds", "(size, internal, external) over all i-subsets of a tree");
        add_g6(sub);
        sub->add_option("--i", o.i, "subset size")->required();
    }
    {
        auto* sub = make("oracle", "brute-force count in the explicit coloring graph");
        add_g6(sub);
        add_pattern(sub);
        sub->add_option("--k", o.k, "number of colors")->required()->check(CLI::NonNegativeNumber);
        add_budget(sub);
    }
    {
        auto* sub = make("verify", "compare count polynomial and brute force for k = 0..kmax");
        add_g6(sub);
        add_pattern(sub);
        sub->add_option("--kmax", o.kmax, "largest k to check")->check(CLI::NonNegativeNumber);
        add_budget(sub);
    }
    {
        auto* sub = make("search-p2", "look for equal pairs polynomials with different chromatic polynomials");
        sub->add_option("--input", o.input, "graph6 file, one graph per line ('-' for stdin)")->required();
        sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    }
    {
        auto* sub = make("generate", "list isomorphism classes as graph6");
        sub->add_option("--n", o.n, "largest order")->required()->check(CLI::Range(0, 10));
        sub->add_flag("--connected", o.connected, "connected graphs only");
        sub->add_flag("--trees", o.trees, "trees on exactly n vertices");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        auto start = Clock::now();
        if (command == "chromatic") {
            emit_poly(o, chromatic_polynomial(parse_graph6(o.g6)), start);
        } else if (command == "count") {
            Graph h = parse_graph6(o.pattern_g6);
            emit_poly(o, count_poly(parse_graph6(o.g6), h), start, o.pattern_g6);
        } else if (command == "pairs") {
            emit_poly(o, pairs_poly(parse_graph6(o.g6)), start, "P2");
        } else if (command == "clique") {
            emit_poly(o, clique_poly(parse_graph6(o.g6), o.r), start, "K" + std::to_string(o.r));
        } else if (command == "product") {
            ProductCliqueSpec spec(o.sizes);
            emit_poly(o, product_clique_poly(parse_graph6(o.g6), spec), start, sizes_text(o.sizes));
        } else if (command == "hexagon") {
            emit_poly(o, hexagon_poly(parse_graph6(o.g6)), start, "C6");
        } else if (command == "tree-qd") {
            emit_poly(o, tree_hypercube_poly(parse_graph6(o.g6), o.d), start, "Q" + std::to_string(o.d));
        } else if (command == "gds") {
            return run_gds(o);
        } else if (command == "oracle") {
            return run_oracle(o);
        } else if (command == "verify") {
            return run_verify(o);
        } else if (command == "search-p2") {
            return run_search(o);
        } else if (command == "generate") {
            return run_generate(o);
        }
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --budget or lower k)\n";
        return kExitBudget;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return 0;
}
