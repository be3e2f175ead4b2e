#pragma once

#include "ngame/core.hpp"

#include <json.hpp>

#include <string>

namespace ngame {

// Trace files, JSON schema v1.  Rationals are serialized as strings "p/q"
// (integers as "p") so that replay is bit-exact.

inline nlohmann::json graph_to_json(const GcmGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [i, j] : g.edges())
        edges.push_back({i, j, -g.entry(i, j), -g.entry(j, i)});
    return {{"nodes", g.size()}, {"edges", edges}};
}

inline GcmGraph graph_from_json(const nlohmann::json& j) {
    const int n = j.at("nodes").get<int>();
    std::vector<std::array<int, 4>> edges;
    for (const auto& e : j.at("edges"))
        edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>(), e.at(3).get<int>()});
    return GcmGraph(make_matrix(n, edges));
}

inline nlohmann::json position_to_json(const Position& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rational& v : p.values()) out.push_back(to_string(v));
    return out;
}

inline Position position_from_json(const nlohmann::json& j) {
    std::vector<Rational> values;
    for (const auto& v : j) values.push_back(parse_rational(v.get<std::string>()));
    return Position(std::move(values));
}

inline std::string outcome_kind_name(OutcomeKind kind) {
    switch (kind) {
        case OutcomeKind::Converged: return "converged";
        case OutcomeKind::BudgetExhausted: return "exhausted";
        case OutcomeKind::Partial: return "partial";
        case OutcomeKind::CertifiedDivergent: return "certified-divergent";
    }
    return "?";
}

inline OutcomeKind outcome_kind_from_name(const std::string& name) {
    if (name == "converged") return OutcomeKind::Converged;
    if (name == "exhausted") return OutcomeKind::BudgetExhausted;
    if (name == "partial") return OutcomeKind::Partial;
    if (name == "certified-divergent") return OutcomeKind::CertifiedDivergent;
    throw ParseError("unknown outcome kind '" + name + "'");
}

inline nlohmann::json trace_to_json(const GcmGraph& g, const GameTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const GameStep& s : trace.steps)
        steps.push_back({{"fired", s.fired}, {"position", position_to_json(s.position)}});
    nlohmann::json outcome{{"kind", outcome_kind_name(trace.outcome.kind)},
                           {"steps", trace.outcome.steps}};
    if (trace.outcome.terminal) outcome["terminal"] = position_to_json(*trace.outcome.terminal);
    if (!trace.outcome.certificate.empty()) outcome["certificate"] = trace.outcome.certificate;
    return {{"version", 1},
            {"graph", graph_to_json(g)},
            {"initial", position_to_json(trace.initial)},
            {"steps", steps},
            {"outcome", outcome}};
}

struct LoadedTrace {
    GcmGraph graph;
    GameTrace trace;
};

inline LoadedTrace trace_from_json(const nlohmann::json& j) {
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported trace version");
    LoadedTrace out{graph_from_json(j.at("graph")), {}};
    out.trace.initial = position_from_json(j.at("initial"));
    for (const auto& s : j.at("steps"))
        out.trace.steps.push_back({s.at("fired").get<int>(), position_from_json(s.at("position"))});
    const auto& o = j.at("outcome");
    out.trace.outcome.kind = outcome_kind_from_name(o.at("kind").get<std::string>());
    out.trace.outcome.steps = o.at("steps").get<long>();
    if (o.contains("terminal")) out.trace.outcome.terminal = position_from_json(o.at("terminal"));
    if (o.contains("certificate")) out.trace.outcome.certificate = o.at("certificate").get<std::string>();
    return out;
}

// Replays every recorded firing; true when each recorded position matches
// the engine bit for bit.
inline bool replay_matches(const LoadedTrace& loaded) {
    Position pos = loaded.trace.initial;
    for (const GameStep& s : loaded.trace.steps) {
        if (pos.at(s.fired) <= 0) return false;
        pos = fire(loaded.graph, pos, s.fired);
        if (!(pos == s.position)) return false;
    }
    if (loaded.trace.outcome.kind == OutcomeKind::Converged) {
        if (!loaded.trace.outcome.terminal || !(pos == *loaded.trace.outcome.terminal)) return false;
        if (!legal_moves(loaded.graph, pos).empty()) return false;
    }
    return true;
}

}  // namespace ngame
