#pragma once

#include "ngame/certificates.hpp"
#include "ngame/trace_json.hpp"

namespace ngame {

// Certificate files, JSON schema v1.  Rationals are strings "p/q"; Farkas
// witnesses are maps from 0-based region-constraint indices to weights, with
// zero weights omitted.

namespace detail {

inline nlohmann::json rationals_to_json(const std::vector<Rational>& values) {
    nlohmann::json out = nlohmann::json::array();
    for (const Rational& v : values) out.push_back(to_string(v));
    return out;
}

inline std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
    std::vector<Rational> out;
    for (const auto& v : j) out.push_back(parse_rational(v.get<std::string>()));
    return out;
}

inline nlohmann::json witness_to_json(const FarkasWitness& w) {
    nlohmann::json out = nlohmann::json::object();
    for (std::size_t r = 0; r < w.size(); ++r)
        if (w[r] != 0) out[std::to_string(r)] = to_string(w[r]);
    return out;
}

inline FarkasWitness witness_from_json(const nlohmann::json& j, std::size_t arity) {
    FarkasWitness w(arity, Rational(0));
    for (auto it = j.begin(); it != j.end(); ++it) {
        std::size_t r = 0;
        try {
            r = static_cast<std::size_t>(std::stoul(it.key()));
        } catch (...) {
            throw ParseError("bad witness index '" + it.key() + "'");
        }
        if (r >= arity) throw ParseError("witness index out of range");
        w[r] = parse_rational(it.value().get<std::string>());
    }
    return w;
}

}  // namespace detail

inline nlohmann::json certificate_to_json(const InadmissibleFamilyId& id, int omega,
                                          const DivergenceCertificate& cert) {
    nlohmann::json out{{"version", 1}, {"family", to_string(id)}, {"omega", omega}};
    if (const auto* loop = std::get_if<ParametricLoopCertificate>(&cert)) {
        out["kind"] = "parametric-loop";
        out["start"] = detail::rationals_to_json(loop->start.values());
        out["prefix"] = loop->prefix;
        out["intercept"] = detail::rationals_to_json(loop->family.intercept);
        out["slope"] = detail::rationals_to_json(loop->family.slope);
        out["cycle"] = loop->cycle;
        out["repeats"] = loop->repeats;
    } else if (const auto* region = std::get_if<InvariantRegionCertificate>(&cert)) {
        out["kind"] = "invariant-region";
        nlohmann::json constraints = nlohmann::json::array();
        for (const LinearConstraint& c : region->region)
            constraints.push_back({{"coeffs", detail::rationals_to_json(c.form)}, {"strict", c.strict}});
        out["region"] = constraints;
        out["start"] = detail::rationals_to_json(region->start.values());
        out["prefix"] = region->prefix;
        out["cycle"] = region->cycle;
        nlohmann::json sw = nlohmann::json::array(), cw = nlohmann::json::array();
        for (const FarkasWitness& w : region->step_witnesses) sw.push_back(detail::witness_to_json(w));
        for (const FarkasWitness& w : region->closure_witnesses) cw.push_back(detail::witness_to_json(w));
        out["step_witnesses"] = sw;
        out["closure_witnesses"] = cw;
    } else {
        const auto& tri = std::get<TrianglePotentialCertificate>(cert);
        out["kind"] = "triangle-potential";
        out["variant"] = tri.variant;
        out["p1"] = tri.p1;
        out["q1"] = tri.q1;
        out["p2"] = tri.p2;
        out["q2"] = tri.q2;
        out["potential"] = detail::rationals_to_json(tri.potential);
        out["growth"] = to_string(tri.growth);
        out["residual_a"] = to_string(tri.residual_a);
        out["residual_b"] = to_string(tri.residual_b);
    }
    return out;
}

struct LoadedCertificate {
    InadmissibleFamilyId id;
    int omega = 0;
    DivergenceCertificate certificate;
};

inline LoadedCertificate certificate_from_json(const nlohmann::json& j) {
    if (j.at("version").get<int>() != 1) throw ParseError("unsupported certificate version");
    LoadedCertificate out;
    const auto id = parse_inadmissible(j.at("family").get<std::string>());
    if (!id) throw ParseError("unknown family id in certificate");
    out.id = *id;
    out.omega = j.at("omega").get<int>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "parametric-loop") {
        ParametricLoopCertificate c;
        c.start = Position(detail::rationals_from_json(j.at("start")));
        c.prefix = j.at("prefix").get<FiringSequence>();
        c.family.intercept = detail::rationals_from_json(j.at("intercept"));
        c.family.slope = detail::rationals_from_json(j.at("slope"));
        c.cycle = j.at("cycle").get<FiringSequence>();
        c.repeats = j.at("repeats").get<int>();
        out.certificate = std::move(c);
    } else if (kind == "invariant-region") {
        InvariantRegionCertificate c;
        for (const auto& con : j.at("region"))
            c.region.push_back({detail::rationals_from_json(con.at("coeffs")),
                                con.at("strict").get<bool>()});
        c.start = Position(detail::rationals_from_json(j.at("start")));
        c.prefix = j.at("prefix").get<FiringSequence>();
        c.cycle = j.at("cycle").get<FiringSequence>();
        for (const auto& w : j.at("step_witnesses"))
            c.step_witnesses.push_back(detail::witness_from_json(w, c.region.size()));
        for (const auto& w : j.at("closure_witnesses"))
            c.closure_witnesses.push_back(detail::witness_from_json(w, c.region.size()));
        out.certificate = std::move(c);
    } else if (kind == "triangle-potential") {
        TrianglePotentialCertificate c;
        c.variant = j.at("variant").get<int>();
        c.p1 = j.at("p1").get<int>();
        c.q1 = j.at("q1").get<int>();
        c.p2 = j.at("p2").get<int>();
        c.q2 = j.at("q2").get<int>();
        c.potential = detail::rationals_from_json(j.at("potential"));
        c.growth = parse_rational(j.at("growth").get<std::string>());
        c.residual_a = parse_rational(j.at("residual_a").get<std::string>());
        c.residual_b = parse_rational(j.at("residual_b").get<std::string>());
        out.certificate = std::move(c);
    } else {
        throw ParseError("unknown certificate kind '" + kind + "'");
    }
    return out;
}

}  // namespace ngame
