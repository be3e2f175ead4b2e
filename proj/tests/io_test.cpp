#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ngame/certificate_json.hpp"
#include "ngame/graph_format.hpp"
#include "ngame/plans.hpp"
#include "ngame/repl.hpp"
#include "ngame/trace_json.hpp"

#include <sstream>

using namespace ngame;

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("1/2")) == "1/2");
    CHECK(to_string(parse_rational("-3")) == "-3");
    CHECK(to_string(parse_rational("4/2")) == "2");
    CHECK(to_string(parse_rational("-6/4")) == "-3/2");
    CHECK(parse_rational("0") == Rational(0));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);

    const auto list = parse_rational_list("1/2,0,-3");
    CHECK(list == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(-3)});
    CHECK(format_rational_list(list) == "1/2,0,-3");
    CHECK_THROWS_AS(parse_rational_list("1,,2"), ParseError);
}

TEST_CASE("graph files parse to the documented matrices") {
    const GcmGraph b2 = parse_graph_text("gcm 1\nnodes 2\nedge 1 2 1 2\n");
    CHECK(b2.entry(1, 2) == -1);
    CHECK(b2.entry(2, 1) == -2);

    const GcmGraph single = parse_graph_text("gcm 1\nnodes 1\n");
    CHECK(single.size() == 1);

    CHECK_THROWS_AS(parse_graph_text("gcm 1\nnodes 2\nedge 1 2 1 0\n"), GraphSyntaxError);
    CHECK_THROWS_AS(parse_graph_text("gcm 2\nnodes 1\n"), GraphSyntaxError);
    CHECK_THROWS_AS(parse_graph_text("nodes 1\n"), GraphSyntaxError);
    CHECK_THROWS_AS(parse_graph_text("gcm 1\nnodes 2\nedge 1 1 1 1\n"), GraphSyntaxError);
    CHECK_THROWS_AS(parse_graph_text("gcm 1\nnodes 2\nedge 1 2 1 1\nedge 2 1 1 1\n"), GraphSyntaxError);
    CHECK_THROWS_AS(parse_graph_text("gcm 1\nnodes 2\nedge 1 3 1 1\n"), GraphSyntaxError);
    try {
        parse_graph_text("gcm 1\nnodes 2\nbogus\n");
        FAIL("expected syntax error");
    } catch (const GraphSyntaxError& e) {
        CHECK(e.line() == 3);
    }

    // comments and blank lines are fine
    const GcmGraph a2 = parse_graph_text("# a path\ngcm 1\n\nnodes 2\nedge 1 2 1 1\n");
    CHECK(a2.entry(1, 2) == -1);
}

TEST_CASE("graph files round-trip over the catalog") {
    std::vector<GcmGraph> pool;
    for (const char* name : {"A5", "B4", "C3", "D6", "E7", "F4", "G2"})
        pool.push_back(build_finite(*parse_dynkin(name)));
    for (const char* name :
         {"Atilde:4", "Btilde-fork:5", "Ctilde-b:3", "Dtilde:6", "Etilde9node", "Gtilde4", "Sq3",
          "Pent1", "Tri3:p1=3,q1=1,p2=1,q2=3"})
        pool.push_back(build_inadmissible(*parse_inadmissible(name)));
    for (const GcmGraph& g : pool) {
        const GcmGraph back = parse_graph_text(print_graph_text(g));
        CHECK(back.matrix() == g.matrix());
    }
}

TEST_CASE("catalog shorthand lookup") {
    auto b2 = lookup_catalog_graph("B2");
    REQUIRE(b2.has_value());
    CHECK(b2->entry(2, 1) == -2);
    CHECK(lookup_catalog_graph("Atilde:3").has_value());
    CHECK_FALSE(lookup_catalog_graph("nope").has_value());
}

TEST_CASE("trace files replay bit-exactly") {
    const GcmGraph g = build_finite({Family::F, 4});
    const Position start(std::vector<Rational>{Rational(1, 2), 2, Rational(7, 3), 1});
    const GameTrace trace = run_game(g, start, Strategy::random_seeded(31), 1000);
    REQUIRE(trace.outcome.kind == OutcomeKind::Converged);

    const nlohmann::json j = trace_to_json(g, trace);
    const std::string text = j.dump();
    const LoadedTrace loaded = trace_from_json(nlohmann::json::parse(text));
    CHECK(loaded.graph.matrix() == g.matrix());
    CHECK(loaded.trace.initial == start);
    CHECK(loaded.trace.steps.size() == trace.steps.size());
    CHECK(replay_matches(loaded));

    // tampering with any recorded value breaks the replay
    nlohmann::json bad = j;
    bad["steps"][2]["position"][0] = "9999";
    CHECK_FALSE(replay_matches(trace_from_json(bad)));
}

TEST_CASE("partial traces serialize too") {
    const GcmGraph b2 = build_finite({Family::B, 2});
    const GameTrace t = play_sequence(b2, Position(std::vector<Rational>{1, 1}), {2});
    const LoadedTrace back = trace_from_json(trace_to_json(b2, t));
    CHECK(back.trace.outcome.kind == OutcomeKind::Partial);
    CHECK(replay_matches(back));
}

TEST_CASE("a convergent plan's run records as an ordinary trace") {
    const DynkinType t{Family::C, 4};
    const GcmGraph g = build_finite(t);
    const Position start(std::vector<Rational>{3, 1, Rational(5, 2), 2});
    const GameTrace trace = play_sequence(g, start, convergent_plan(t).sequence);
    const LoadedTrace back = trace_from_json(trace_to_json(g, trace));
    CHECK(back.trace.outcome.kind == OutcomeKind::Converged);
    CHECK(replay_matches(back));
}

TEST_CASE("certificates serialize and verify after reloading") {
    const std::vector<std::pair<InadmissibleFamilyId, int>> picks = {
        {atilde(4), 2},
        {btilde_fork(4), 1},
        {{InadmissibleShape::Etilde9}, 5},
        {{InadmissibleShape::Gtilde2}, 3},
        {{InadmissibleShape::Sq2}, 4},
        {triangle(2, 1, 2, 2, 1), 3},
    };
    for (const auto& [id, omega] : picks) {
        const DivergenceCertificate cert = certificate_catalog(id, omega);
        const nlohmann::json j = certificate_to_json(id, omega, cert);
        const LoadedCertificate back = certificate_from_json(nlohmann::json::parse(j.dump()));
        CHECK(back.id == id);
        CHECK(back.omega == omega);
        const GcmGraph g = build_inadmissible(id);
        CHECK(verify_certificate(g, back.id, back.omega, back.certificate, 16, 5).ok);
    }

    // tampering with a serialized loop certificate is caught on verification
    const InadmissibleFamilyId id = atilde(4);
    nlohmann::json j = certificate_to_json(id, 1, certificate_catalog(id, 1));
    j["slope"][0] = "3";
    const LoadedCertificate bad = certificate_from_json(j);
    CHECK_FALSE(verify_certificate(build_inadmissible(id), id, 1, bad.certificate).ok);

    CHECK_THROWS_AS(certificate_from_json(nlohmann::json{{"version", 2}}), ParseError);
}

TEST_CASE("repl transcript is deterministic") {
    const GcmGraph b2 = build_finite({Family::B, 2});
    {
        std::istringstream in("2\n1\n2\n1\n");
        std::ostringstream out;
        const int code = repl_session(b2, Position(std::vector<Rational>{1, 1}), in, out);
        CHECK(code == 0);
        const std::string text = out.str();
        CHECK(text.substr(0, 26) == "position: 1,1\nlegal: 1 2\n>");
        CHECK(text.ends_with("terminal: -1,-1 (4 firings)\n"));
    }
    {
        std::istringstream in("quit\n");
        std::ostringstream out;
        CHECK(repl_session(b2, Position(std::vector<Rational>{1, 1}), in, out) == 0);
    }
    {
        std::istringstream in("5\nquit\n");
        std::ostringstream out;
        CHECK(repl_session(b2, Position(std::vector<Rational>{1, 1}), in, out) == 0);
        CHECK(out.str().find("no such node") != std::string::npos);
    }
    {
        std::istringstream in("2\nundo\n1\nauto\n");
        std::ostringstream out;
        CHECK(repl_session(b2, Position(std::vector<Rational>{1, 1}), in, out) == 0);
        CHECK(out.str().ends_with("terminal: -1,-1 (4 firings)\n"));
    }
    {
        // auto on a divergent start exhausts
        const GcmGraph cyc = build_inadmissible(atilde(3));
        std::istringstream in("auto\n");
        std::ostringstream out;
        CHECK(repl_session(cyc, fundamental_position(cyc, 1), in, out, 100) == 2);
        CHECK(out.str().find("exhausted") != std::string::npos);
    }
}
