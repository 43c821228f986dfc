// omcg: check, generate, transform and benchmark sign-vector systems from the
// command line. Batch interface; all randomness sits behind explicit seeds and
// every command's output is byte-reproducible.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "omcg/generators.hpp"
#include "omcg/graphs.hpp"
#include "omcg/lattice.hpp"
#include "omcg/serialize.hpp"
#include "omcg/system_io.hpp"
#include "omcg/verify.hpp"

namespace {

using namespace omcg;

// Exit codes are a stable contract.
constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResource = 3;
constexpr int kExitHypothesis = 4;

struct Options {
    std::string input = "-";
    std::string format = "text";
    std::string kind = "cocircuit";
    std::string vertices;
    std::string elements;
    std::size_t max_covectors = 200'000;
    long long time_cap_ms = 0;
    std::size_t exhaustive_cap = 16;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    bool times = false;
};

Budget budget_of(const Options& o) {
    Budget b;
    b.max_covectors = o.max_covectors;
    b.time_limit = std::chrono::milliseconds(o.time_cap_ms);
    return b;
}

EnumerationPolicy policy_of(const Options& o) {
    EnumerationPolicy p;
    p.exhaustive_cap = o.exhaustive_cap;
    p.sample_count = o.samples;
    p.seed = o.seed;
    return p;
}

SignSystem load_system(const std::string& path) {
    if (path == "-") return read_system(std::cin);
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    return read_system(in);
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<SignVector> parse_vertex_list(const std::string& csv, const GroundPtr& ground) {
    std::vector<SignVector> out;
    std::string current;
    std::istringstream in(csv);
    while (std::getline(in, current, ',')) {
        if (!current.empty()) out.push_back(SignVector::parse(current, ground));
    }
    if (out.empty()) throw InvalidArgumentError("--vertices needs at least one sign string");
    return out;
}

ElementSet parse_element_list(const std::string& csv, const GroundSet& ground) {
    ElementSet set;
    std::string current;
    std::istringstream in(csv);
    bool any = false;
    while (std::getline(in, current, ',')) {
        if (current.empty()) continue;
        any = true;
        auto idx = ground.index_of(current);
        if (!idx) throw InvalidArgumentError("unknown ground element '" + current + "'");
        set = set | ElementSet::single(*idx);
    }
    if (!any) throw InvalidArgumentError("--elements needs at least one label");
    return set;
}

int cmd_check(const Options& o) {
    const SignSystem s = load_system(o.input);
    const Verdict v = check_all(s);
    if (o.format == "json") {
        std::cout << verdict_json(v, *s.ground());
    } else {
        std::cout << (v.pass ? "PASS" : "FAIL " + v.violation->describe(*s.ground())) << '\n';
        if (!v.warning.empty()) std::cout << "WARNING: " << v.warning << '\n';
    }
    return v.pass ? kExitPass : kExitViolation;
}

SignedGraph build_graph(const SignSystem& s, const Options& o) {
    const FaceLattice lattice = build_lattice(s, budget_of(o));
    if (o.kind == "tope") return tope_graph(lattice);
    return cocircuit_graph(lattice);
}

int cmd_graph(const Options& o) {
    const SignSystem s = load_system(o.input);
    const SignedGraph g = build_graph(s, o);
    std::cout << (o.format == "json" ? graph_json(g) : to_dot(g));
    return kExitPass;
}

int cmd_closure(const Options& o) {
    const SignSystem s = load_system(o.input);
    const FaceLattice lattice = build_lattice(s, budget_of(o));
    if (o.format == "json") {
        std::cout << lattice_json(lattice);
    } else {
        write_system(std::cout, lattice.covectors());
    }
    return kExitPass;
}

int cmd_contract(const Options& o) {
    const SignSystem s = load_system(o.input);
    const ElementSet a = parse_element_list(o.elements, *s.ground());
    const Contraction c = contract(s, a);
    if (o.format == "json") {
        std::ostringstream out;
        out << "{\n  \"ground\": [";
        for (std::size_t i = 0; i < c.system.ground()->size(); ++i) {
            out << (i ? ", " : "") << '"' << c.system.ground()->label(i) << '"';
        }
        out << "],\n  \"kept_original\": [";
        for (std::size_t i = 0; i < c.kept.size(); ++i) {
            out << (i ? ", " : "") << '"' << s.ground()->label(c.kept[i]) << '"';
        }
        out << "],\n  \"members\": [";
        for (std::size_t i = 0; i < c.system.size(); ++i) {
            out << (i ? ", " : "") << '"' << c.system[i].to_string() << '"';
        }
        out << "]\n}\n";
        std::cout << out.str();
    } else {
        write_system(std::cout, c.system);
    }
    return kExitPass;
}

int cmd_hull(const Options& o) {
    const SignSystem s = load_system(o.input);
    const SignedGraph g = build_graph(s, o);
    const std::vector<SignVector> tuple = parse_vertex_list(o.vertices, s.ground());
    const SignedGraph hull = crabbed_hull(g, hull_signature(tuple));
    std::cout << (o.format == "json" ? graph_json(hull) : to_dot(hull));
    return kExitPass;
}

int cmd_verify_theorem(const Options& o) {
    const SignSystem s = load_system(o.input);
    const EquivalenceReport r = equivalence_harness(s, policy_of(o), budget_of(o), o.jobs);
    if (o.format == "json") {
        std::cout << equivalence_report_json(r, *s.ground());
    } else {
        auto line = [](bool pass) { return pass ? "PASS" : "FAIL"; };
        std::cout << "(i)   cocircuit axioms (C0)-(C3): " << line(r.verdict_i.pass);
        if (!r.verdict_i.pass) {
            std::cout << "  [" << r.verdict_i.violation->describe(*s.ground()) << "]";
        }
        std::cout << '\n';
        std::cout << "(ii)  hull connectivity >= h-1:   " << line(r.verdict_ii.pass)
                  << "  (hulls: " << r.verdict_ii.hulls.size()
                  << ", tuples: " << r.verdict_ii.tuples_enumerated << ")\n";
        std::cout << "(iii) crabbed paths for pairs:    " << line(r.verdict_iii.pass);
        if (r.verdict_iii.counterexample) {
            std::cout << "  [no crabbed path: " << r.verdict_iii.counterexample->x.to_string()
                      << ", " << r.verdict_iii.counterexample->y.to_string() << "]";
        }
        std::cout << '\n';
        std::cout << "agree (i)<=>(iii): " << (r.agree ? "yes" : "NO") << '\n';
        std::cout << "(i)=>(ii):         " << (r.i_implies_ii ? "yes" : "NO") << '\n';
        std::cout << "cost: naive=" << r.cost_naive << " graph=" << r.cost_graph << '\n';
    }
    return (r.agree && r.i_implies_ii) ? kExitPass : kExitViolation;
}

int run_bench(const std::string& family, std::size_t r, std::size_t lo, std::size_t hi,
              const Options& o) {
    std::vector<std::pair<std::size_t, CostReport>> rows;
    for (std::size_t n = lo; n <= hi; ++n) {
        const SignSystem s = family == "u2n" ? u2n(n) : cyclic(r, n);
        rows.emplace_back(n, cost_comparison(s, budget_of(o)));
    }
    if (o.format == "json") {
        std::cout << "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            std::string body = cost_report_json(rows[i].second, o.times);
            // splice the family/n fields into the object
            body.erase(0, 1); // drop '{'
            std::cout << "  {\n    \"family\": \"" << family << "\",\n    \"n\": " << rows[i].first
                      << ',' << body.substr(0, body.size() - 2) << (i + 1 < rows.size() ? "," : "")
                      << '\n';
        }
        std::cout << "]\n";
    } else {
        std::printf("%-6s %4s %10s %6s %12s %12s %8s", "family", "n", "cocircuits", "edges",
                    "cost_naive", "cost_graph", "ratio");
        if (o.times) std::printf(" %10s %10s", "naive_ms", "graph_ms");
        std::printf("\n");
        for (const auto& [n, rep] : rows) {
            const double ratio =
                rep.cost_graph == 0 ? 0.0 : double(rep.cost_naive) / double(rep.cost_graph);
            std::printf("%-6s %4zu %10zu %6zu %12llu %12llu %8.3f", family.c_str(), n,
                        rep.cocircuits, rep.edges, (unsigned long long)rep.cost_naive,
                        (unsigned long long)rep.cost_graph, ratio);
            if (o.times) std::printf(" %10.3f %10.3f", rep.naive_ms, rep.graph_ms);
            std::printf("\n");
        }
    }
    return kExitPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cocircuit-graph toolkit for sign-vector systems"};
    app.require_subcommand(1);

    Options o;
    std::string family;
    std::size_t gen_n = 0, gen_r = 0, lo = 0, hi = 0, pairs = 0;
    std::string mutate_kind = "drop-pair";
    std::string matrix_path;

    auto add_io = [&](CLI::App* cmd, bool with_format = true) {
        cmd->add_option("input", o.input, "input system file ('-' for stdin)");
        if (with_format) cmd->add_option("--format", o.format, "output format")->
            check(CLI::IsMember({"text", "json", "dot"}));
    };
    auto add_budget = [&](CLI::App* cmd) {
        cmd->add_option("--max-covectors", o.max_covectors, "closure size budget");
        cmd->add_option("--time-cap-ms", o.time_cap_ms, "closure wall-clock budget (0 = off)");
    };

    CLI::App* check = app.add_subcommand("check", "run the cocircuit axioms (C0)-(C3)");
    add_io(check);

    CLI::App* graph = app.add_subcommand("graph", "emit the cocircuit or tope graph");
    add_io(graph);
    graph->add_option("--kind", o.kind, "graph kind")->check(CLI::IsMember({"cocircuit", "tope"}));
    add_budget(graph);

    CLI::App* closurec = app.add_subcommand("closure", "emit the composition closure / lattice");
    add_io(closurec);
    add_budget(closurec);

    CLI::App* contractc = app.add_subcommand("contract", "contract by ground elements");
    add_io(contractc);
    contractc->add_option("--elements", o.elements, "comma-separated element labels")->required();

    CLI::App* hull = app.add_subcommand("hull", "emit a crabbed hull subgraph");
    add_io(hull);
    hull->add_option("--vertices", o.vertices, "comma-separated sign strings")->required();
    hull->add_option("--kind", o.kind, "graph kind")->check(CLI::IsMember({"cocircuit", "tope"}));
    add_budget(hull);

    CLI::App* verify = app.add_subcommand("verify-theorem",
                                          "check equivalence of the axiom and graph conditions");
    add_io(verify);
    add_budget(verify);
    verify->add_option("--exhaustive-cap", o.exhaustive_cap,
                       "enumerate all subsets when |C*| <= cap");
    verify->add_option("--samples", o.samples, "sampled larger subsets above the cap");
    verify->add_option("--seed", o.seed, "sampling seed");
    verify->add_option("--jobs", o.jobs, "worker threads for the pair checks")
        ->check(CLI::PositiveNumber);

    CLI::App* bench = app.add_subcommand("bench", "sweep a family and compare check costs");
    std::vector<std::size_t> bench_args;
    bench->add_option("family", family, "u2n or cyclic")->required()
        ->check(CLI::IsMember({"u2n", "cyclic"}));
    bench->add_option("range", bench_args, "u2n: <lo> <hi>; cyclic: <rank> <lo> <hi>")
        ->expected(2, 3);
    bench->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    bench->add_flag("--times", o.times, "include wall-clock columns (not byte-reproducible)");
    add_budget(bench);

    CLI::App* gen = app.add_subcommand("gen", "generate sign-vector systems");
    gen->require_subcommand(1);
    CLI::App* gen_u2n = gen->add_subcommand("u2n", "rank-2 uniform family");
    gen_u2n->add_option("n", gen_n, "number of elements")->required();
    CLI::App* gen_cyc = gen->add_subcommand("cyclic", "moment-curve uniform family");
    gen_cyc->add_option("r", gen_r, "rank")->required();
    gen_cyc->add_option("n", gen_n, "number of elements")->required();
    CLI::App* gen_mat = gen->add_subcommand("matrix", "realizable system from an integer matrix");
    gen_mat->add_option("file", matrix_path, "matrix file, one row per line ('-' for stdin)")
        ->required();
    CLI::App* gen_rand = gen->add_subcommand("random", "random system satisfying (C0)-(C2)");
    gen_rand->add_option("--n", gen_n, "ground-set size")->required();
    gen_rand->add_option("--pairs", pairs, "number of antipodal pairs")->required();
    gen_rand->add_option("--seed", o.seed, "sampling seed");
    CLI::App* gen_mut = gen->add_subcommand("mutate", "seeded near-miss mutation");
    gen_mut->add_option("input", o.input, "input system file ('-' for stdin)");
    gen_mut->add_option("--kind", mutate_kind, "mutation kind")
        ->check(CLI::IsMember({"drop-pair", "flip-entry", "add-random"}));
    gen_mut->add_option("--seed", o.seed, "mutation seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }

    try {
        if (check->parsed()) return cmd_check(o);
        if (graph->parsed()) return cmd_graph(o);
        if (closurec->parsed()) return cmd_closure(o);
        if (contractc->parsed()) return cmd_contract(o);
        if (hull->parsed()) return cmd_hull(o);
        if (verify->parsed()) return cmd_verify_theorem(o);
        if (bench->parsed()) {
            if (family == "u2n") {
                if (bench_args.size() != 2) {
                    throw InvalidArgumentError("bench u2n takes exactly <lo> <hi>");
                }
                lo = bench_args[0];
                hi = bench_args[1];
            } else {
                if (bench_args.size() != 3) {
                    throw InvalidArgumentError("bench cyclic takes exactly <rank> <lo> <hi>");
                }
                gen_r = bench_args[0];
                lo = bench_args[1];
                hi = bench_args[2];
            }
            return run_bench(family, gen_r, lo, hi, o);
        }
        if (gen->parsed()) {
            SignSystem out = [&] {
                if (gen_u2n->parsed()) return u2n(gen_n);
                if (gen_cyc->parsed()) return cyclic(gen_r, gen_n);
                if (gen_mat->parsed()) {
                    return from_matrix(VectorConfiguration::parse(read_file(matrix_path)));
                }
                if (gen_rand->parsed()) return random_c0c2(gen_n, pairs, o.seed);
                SignSystem base = load_system(o.input);
                MutationKind kind = mutate_kind == "drop-pair"   ? MutationKind::DropPair
                                    : mutate_kind == "flip-entry" ? MutationKind::FlipEntry
                                                                  : MutationKind::AddRandom;
                return mutate(base, kind, o.seed);
            }();
            write_system(std::cout, out);
            return kExitPass;
        }
    } catch (const HypothesisError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const ResourceError& e) {
        std::cerr << "error (" << e.budget() << " budget): " << e.what() << '\n';
        return kExitResource;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const GroundMismatchError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const InvalidArgumentError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitInputError;
}
