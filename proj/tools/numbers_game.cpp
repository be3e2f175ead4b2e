// Command-line front end: plays numbers games on GCM graphs, classifies
// finite-type diagrams, and machine-checks the divergence certificates of the
// inadmissible-family catalog.
//
// Exit codes: 0 success/converged, 1 usage or input error, 2 budget
// exhausted, 3 certificate verification failure.

#include "ngame/certificates.hpp"
#include "ngame/graph_format.hpp"
#include "ngame/plans.hpp"
#include "ngame/repl.hpp"
#include "ngame/trace_json.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace ngame;

struct Args {
    std::map<std::string, std::string> values;
    bool all = false;

    const std::string* get(const std::string& key) const {
        auto it = values.find(key);
        return it == values.end() ? nullptr : &it->second;
    }
    std::string require(const std::string& key) const {
        const std::string* v = get(key);
        if (!v) throw ParseError("missing required flag --" + key);
        return *v;
    }
    long get_long(const std::string& key, long fallback) const {
        const std::string* v = get(key);
        if (!v) return fallback;
        try {
            return std::stol(*v);
        } catch (...) {
            throw ParseError("flag --" + key + " wants an integer, got '" + *v + "'");
        }
    }
};

Args parse_args(int argc, char** argv, int from) {
    Args args;
    for (int i = from; i < argc; ++i) {
        std::string flag = argv[i];
        if (flag.rfind("--", 0) != 0) throw ParseError("expected a --flag, got '" + flag + "'");
        flag = flag.substr(2);
        if (flag == "all") {
            args.all = true;
            continue;
        }
        if (i + 1 >= argc) throw ParseError("flag --" + flag + " wants a value");
        args.values[flag] = argv[++i];
    }
    return args;
}

GcmGraph load_graph(const std::string& spec) {
    if (!spec.empty() && spec[0] == '@') {
        const std::string name = spec.substr(1);
        if (auto g = lookup_catalog_graph(name)) return *g;
        throw ParseError("unknown catalog graph '" + name + "'");
    }
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open graph file '" + spec + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph_text(buffer.str());
}

Strategy load_strategy(const Args& args) {
    const std::string* name = args.get("strategy");
    const long seed = args.get_long("seed", 0);
    if (!name || *name == "greedy-min") return Strategy::greedy_min();
    if (*name == "greedy-max") return Strategy::greedy_max();
    if (*name == "random") return Strategy::random_seeded(static_cast<std::uint64_t>(seed));
    throw ParseError("unknown strategy '" + *name + "' (greedy-min, greedy-max, random)");
}

int cmd_play(const Args& args) {
    const GcmGraph g = load_graph(args.require("graph"));
    const Position start(parse_rational_list(args.require("position")));
    const long budget = args.get_long("budget", 10000);
    const GameTrace trace = run_game(g, start, load_strategy(args), budget);
    if (const std::string* path = args.get("trace-out")) {
        std::ofstream out(*path);
        if (!out) throw ParseError("cannot write trace file '" + *path + "'");
        out << trace_to_json(g, trace).dump(2) << "\n";
    }
    if (trace.outcome.kind == OutcomeKind::Converged) {
        std::cout << "steps=" << trace.outcome.steps
                  << " terminal=" << format_rational_list(trace.outcome.terminal->values()) << "\n";
        return 0;
    }
    std::cout << "steps=" << trace.outcome.steps << " exhausted\n";
    return 2;
}

int cmd_classify(const Args& args) {
    const GcmGraph g = load_graph(args.require("graph"));
    const auto cls = classify_finite(g);
    if (!cls) {
        std::cout << "not finite type\n";
        return 0;
    }
    std::cout << "finite-type " << to_string(cls->first);
    bool identity = true;
    for (int i = 1; i <= g.size(); ++i) identity &= cls->second[static_cast<std::size_t>(i - 1)] == i;
    if (!identity) {
        std::cout << " via sigma=(";
        for (int i = 1; i <= g.size(); ++i)
            std::cout << (i > 1 ? "," : "") << cls->second[static_cast<std::size_t>(i - 1)];
        std::cout << ")";
    }
    std::cout << "\n";
    return 0;
}

void print_omega_report(const OmegaReport& e) {
    std::cout << "omega " << e.omega << ": " << (e.report.ok ? "verified" : "FAILED") << " ["
              << e.report.kind << "]";
    if (!e.report.prefix.empty()) {
        std::cout << " prefix=(";
        for (std::size_t i = 0; i < e.report.prefix.size(); ++i)
            std::cout << (i ? "," : "") << e.report.prefix[i];
        std::cout << ")";
    }
    if (e.report.landing.size() > 0)
        std::cout << " landing=" << format_rational_list(e.report.landing.values());
    if (!e.report.ok) std::cout << " error=" << e.report.failure;
    std::cout << "\n";
}

int verify_exit_code(const FamilyReport& report) {
    for (const OmegaReport& e : report.entries) print_omega_report(e);
    std::cout << report.verified_count() << "/" << report.entries.size()
              << " certificates verified\n";
    return report.all_ok ? 0 : 3;
}

int cmd_verify(const Args& args) {
    const std::string family = args.require("family");
    const auto id = parse_inadmissible(family);
    if (!id) {
        std::cerr << "'" << family << "' is not an inadmissible-catalog family\n";
        return 1;
    }
    if (args.all) return verify_exit_code(verify_all(*id, 100));
    const long omega = args.get_long("omega", 0);
    if (omega < 1 || omega > family_size(*id)) {
        std::cerr << "need --all or --omega in 1.." << family_size(*id) << "\n";
        return 1;
    }
    const GcmGraph g = build_inadmissible(*id);
    FamilyReport single;
    single.id = *id;
    ProofReport r = verify_certificate(g, *id, static_cast<int>(omega),
                                       certificate_catalog(*id, static_cast<int>(omega)), 100);
    single.all_ok = r.ok;
    single.entries.push_back({static_cast<int>(omega), std::move(r)});
    return verify_exit_code(single);
}

int cmd_repl(const Args& args) {
    const GcmGraph g = load_graph(args.require("graph"));
    Position start(parse_rational_list(args.require("position")));
    check_compatible(g, start);
    return repl_session(g, std::move(start), std::cin, std::cout);
}

int cmd_probe(const Args& args) {
    const GcmGraph g = load_graph(args.require("graph"));
    const Position start(parse_rational_list(args.require("position")));
    const long trials = args.get_long("trials", 20);
    const long budget = args.get_long("budget", 10000);
    const long seed = args.get_long("seed", 0);
    const ProbeReport r = strong_convergence_probe(g, start, static_cast<int>(trials),
                                                   static_cast<std::uint64_t>(seed), budget);
    std::cout << "trials=" << r.trials.size() << " agree=" << (r.all_agree ? "yes" : "no") << "\n";
    if (r.all_agree) {
        const GameOutcome& o = r.first();
        if (o.kind == OutcomeKind::Converged)
            std::cout << "all converge: steps=" << o.steps
                      << " terminal=" << format_rational_list(o.terminal->values()) << "\n";
        else
            std::cout << "all exhausted at budget " << budget << "\n";
        return 0;
    }
    for (const ProbeTrial& t : r.trials)
        std::cout << t.strategy << ": " << outcome_kind_name(t.outcome.kind) << " steps="
                  << t.outcome.steps << "\n";
    return 3;
}

int usage() {
    std::cerr <<
        "usage: numbers-game <command> [flags]\n"
        "  play     --graph G --position P [--strategy greedy-min|greedy-max|random]\n"
        "           [--seed N] [--budget N] [--trace-out FILE]\n"
        "  classify --graph G\n"
        "  verify   --family ID (--all | --omega I)\n"
        "  repl     --graph G --position P\n"
        "  probe    --graph G --position P [--trials N] [--seed N] [--budget N]\n"
        "graphs: a file in the 'gcm 1' format, or @NAME for a catalog graph\n"
        "        (@B2, @E8, @Atilde:5, @Gtilde1, @Tri2:p1=1,q1=2,p2=2,q2=1, ...)\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) return usage();
    const std::string command = argv[1];
    try {
        const Args args = parse_args(argc, argv, 2);
        if (command == "play") return cmd_play(args);
        if (command == "classify") return cmd_classify(args);
        if (command == "verify") return cmd_verify(args);
        if (command == "repl") return cmd_repl(args);
        if (command == "probe") return cmd_probe(args);
        return usage();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
