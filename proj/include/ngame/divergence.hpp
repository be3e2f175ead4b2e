#pragma once

#include "ngame/catalog.hpp"
#include "ngame/core.hpp"
#include "ngame/sequence_data.hpp"

#include <functional>
#include <sstream>
#include <variant>

namespace ngame {

// ---------------------------------------------------------------------------
// Certificate types
//
// Two certificate styles mirror the two divergence arguments in use: firing
// loops verified on positions that are affine in a nonnegative integer
// parameter, and firing cycles that preserve a region cut out by linear
// inequalities (proved by explicit nonnegative combinations).  Parametric
// triangles get a third, sampled style built around a linear potential.

struct ParametricPosition {
    std::vector<Rational> intercept;  // position at parameter 0
    std::vector<Rational> slope;      // increment per parameter step

    Position at(long k) const {
        std::vector<Rational> v(intercept.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = intercept[i] + k * slope[i];
        return Position(std::move(v));
    }
};

struct ParametricLoopCertificate {
    Position start;             // a fundamental position
    FiringSequence prefix;      // legal path from start onto the family at 0
    ParametricPosition family;  // family(k) = intercept + k * slope
    FiringSequence cycle;       // advances family(k) to family(k+1) ...
    int repeats = 1;            // ... when played this many times in a row
};

using LinearForm = std::vector<Rational>;  // coefficients over the initial coordinates

struct LinearConstraint {
    LinearForm form;
    bool strict = false;  // form > 0 rather than form >= 0
};

// Nonnegative combination of the region constraints; proves a linear form
// positive (or nonnegative) everywhere on the region.
using FarkasWitness = std::vector<Rational>;

struct InvariantRegionCertificate {
    std::vector<LinearConstraint> region;
    Position start;
    FiringSequence prefix;  // legal path from start into the region
    FiringSequence cycle;
    std::vector<FarkasWitness> step_witnesses;     // one per cycle step
    std::vector<FarkasWitness> closure_witnesses;  // one per region constraint
};

// Certificate for the parametric triangles: a linear potential that stays
// positive under the two-right-nodes-then-left firing procedure.
struct TrianglePotentialCertificate {
    int variant = 1;  // 1, 2, 3: multiplicity of the edge between the right nodes
    int p1 = 1, q1 = 1, p2 = 1, q2 = 1;
    std::vector<Rational> potential;  // coefficients over (a, b, c)
    Rational growth;                  // potential multiplier per round       (> 0)
    Rational residual_a, residual_b;  // extra potential gained per unit a, b (>= 0)
};

using DivergenceCertificate =
    std::variant<ParametricLoopCertificate, InvariantRegionCertificate, TrianglePotentialCertificate>;

struct UnknownFamily : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Proof reports

struct AffineStep {
    int node = 0;
    Rational alpha, beta;  // fired value alpha*k + beta
};

struct ProofReport {
    bool ok = false;
    std::string kind;
    std::string failure;          // structured reason when !ok
    Position landing;             // position reached by the prefix
    FiringSequence prefix;        // echo of the certificate prefix
    std::vector<AffineStep> steps;  // per-firing forms (parametric loops)

    static ProofReport failed(std::string kind, std::string why) {
        ProofReport r;
        r.kind = std::move(kind);
        r.failure = std::move(why);
        return r;
    }
};

// ---------------------------------------------------------------------------
// Parametric loop verification.  The fired value at each step is an affine
// form alpha*k + beta; it is positive for every integer k >= 0 exactly when
// alpha >= 0 and beta > 0.

inline ProofReport verify_parametric(const GcmGraph& g, const ParametricLoopCertificate& cert) {
    const int n = g.size();
    ProofReport report;
    report.kind = "parametric-loop";
    report.prefix = cert.prefix;
    if (static_cast<int>(cert.family.intercept.size()) != n ||
        static_cast<int>(cert.family.slope.size()) != n || cert.start.size() != n)
        return ProofReport::failed(report.kind, "DimensionMismatch");
    if (cert.repeats < 1) return ProofReport::failed(report.kind, "BadRepeatCount");

    // (a) prefix: exact play from the start onto family(0)
    Position pos = cert.start;
    for (std::size_t t = 0; t < cert.prefix.size(); ++t) {
        const int node = cert.prefix[t];
        if (node < 1 || node > n || pos.at(node) <= 0)
            return ProofReport::failed(report.kind, "PrefixIllegal(step=" + std::to_string(t + 1) + ")");
        pos = fire(g, pos, node);
    }
    report.landing = pos;
    if (pos.values() != cert.family.intercept)
        return ProofReport::failed(report.kind, "FamilyMismatch(prefix landing)");

    // (b) symbolic legality of the repeated cycle for every k >= 0
    std::vector<Rational> alpha = cert.family.slope;
    std::vector<Rational> beta = cert.family.intercept;
    long step_index = 0;
    for (int rep = 0; rep < cert.repeats; ++rep) {
        for (int node : cert.cycle) {
            ++step_index;
            if (node < 1 || node > n)
                return ProofReport::failed(report.kind, "LoopIllegal(step=" + std::to_string(step_index) + ", bad node)");
            const Rational a = alpha[static_cast<std::size_t>(node - 1)];
            const Rational b = beta[static_cast<std::size_t>(node - 1)];
            report.steps.push_back({node, a, b});
            if (!(a >= 0 && b > 0)) {
                std::ostringstream why;
                why << "LoopIllegal(step=" << step_index << ", node=" << node << ", alpha="
                    << to_string(a) << ", beta=" << to_string(b) << ")";
                return ProofReport::failed(report.kind, why.str());
            }
            for (int j : g.neighbors(node)) {
                alpha[static_cast<std::size_t>(j - 1)] -= g.entry(node, j) * a;
                beta[static_cast<std::size_t>(j - 1)] -= g.entry(node, j) * b;
            }
            alpha[static_cast<std::size_t>(node - 1)] = -a;
            beta[static_cast<std::size_t>(node - 1)] = -b;
        }
    }

    // (c) exact landing on family(k+1)
    for (int j = 1; j <= n; ++j) {
        const std::size_t jj = static_cast<std::size_t>(j - 1);
        if (alpha[jj] != cert.family.slope[jj] ||
            beta[jj] != cert.family.intercept[jj] + cert.family.slope[jj])
            return ProofReport::failed(report.kind, "FamilyMismatch(coordinate=" + std::to_string(j) + ")");
    }
    report.ok = true;
    return report;
}

// ---------------------------------------------------------------------------
// Farkas witnesses

namespace detail {

// Evaluates a witness combination: sum of weights[r] * region[r].form.
inline LinearForm combine(const std::vector<LinearConstraint>& region, const FarkasWitness& w) {
    LinearForm out(region.empty() ? 0 : region.front().form.size(), Rational(0));
    for (std::size_t r = 0; r < region.size(); ++r)
        for (std::size_t c = 0; c < out.size(); ++c) out[c] += w[r] * region[r].form[c];
    return out;
}

inline bool witness_is_strict(const std::vector<LinearConstraint>& region, const FarkasWitness& w) {
    for (std::size_t r = 0; r < region.size(); ++r)
        if (w[r] > 0 && region[r].strict) return true;
    return false;
}

// Solves sum_{r in subset} w_r * region[r].form = target exactly, treating
// weights outside the subset as zero.  Returns the full weight vector or
// nothing when the subsystem has no unique consistent solution.
inline std::optional<FarkasWitness> solve_on_subset(const std::vector<LinearConstraint>& region,
                                                    const std::vector<int>& subset,
                                                    const LinearForm& target) {
    const std::size_t nvar = target.size();
    const std::size_t m = subset.size();
    std::vector<std::vector<Rational>> aug(nvar, std::vector<Rational>(m + 1, Rational(0)));
    for (std::size_t c = 0; c < m; ++c)
        for (std::size_t r = 0; r < nvar; ++r)
            aug[r][c] = region[static_cast<std::size_t>(subset[c])].form[r];
    for (std::size_t r = 0; r < nvar; ++r) aug[r][m] = target[r];

    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t c = 0; c < m && row < nvar; ++c) {
        std::size_t p = row;
        while (p < nvar && aug[p][c] == 0) ++p;
        if (p == nvar) continue;
        std::swap(aug[row], aug[p]);
        const Rational pv = aug[row][c];
        for (auto& x : aug[row]) x /= pv;
        for (std::size_t r = 0; r < nvar; ++r) {
            if (r == row || aug[r][c] == 0) continue;
            const Rational f = aug[r][c];
            for (std::size_t k = 0; k <= m; ++k) aug[r][k] -= f * aug[row][k];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++row;
    }
    for (std::size_t r = row; r < nvar; ++r)
        if (aug[r][m] != 0) return std::nullopt;
    FarkasWitness w(region.size(), Rational(0));
    for (std::size_t i = 0; i < pivot_col.size(); ++i) {
        for (std::size_t c = 0; c < m; ++c)
            if (static_cast<int>(c) != pivot_col[i] && aug[i][c] != 0) return std::nullopt;
        w[static_cast<std::size_t>(subset[static_cast<std::size_t>(pivot_col[i])])] = aug[i][m];
    }
    return w;
}

// Searches for a nonnegative combination of the region constraints equal to
// the target form; when `need_strict`, some strict constraint must carry
// positive weight.  Enumerates basic solutions, which suffices: when a
// nonnegative solution exists a basic one does too.
inline std::optional<FarkasWitness> find_witness(const std::vector<LinearConstraint>& region,
                                                 const LinearForm& target, bool need_strict) {
    const int m = static_cast<int>(region.size());
    const int nvar = static_cast<int>(target.size());
    const int max_size = std::min(m, nvar);
    std::vector<int> subset;
    std::optional<FarkasWitness> weak_only;
    auto search = [&](auto&& self, int from, int want) -> std::optional<FarkasWitness> {
        if (want == 0) {
            auto w = solve_on_subset(region, subset, target);
            if (!w) return std::nullopt;
            for (const Rational& x : *w)
                if (x < 0) return std::nullopt;
            if (!need_strict || witness_is_strict(region, *w)) return w;
            weak_only = weak_only ? weak_only : w;
            return std::nullopt;
        }
        for (int c = from; c <= m - want; ++c) {
            subset.push_back(c);
            if (auto w = self(self, c + 1, want - 1)) return w;
            subset.pop_back();
        }
        return std::nullopt;
    };
    for (int size = 1; size <= max_size; ++size) {
        subset.clear();
        if (auto w = search(search, 0, size)) return w;
    }
    if (!need_strict) {
        if (std::all_of(target.begin(), target.end(), [](const Rational& x) { return x == 0; }))
            return FarkasWitness(region.size(), Rational(0));
        if (weak_only) return weak_only;
    }
    return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Symbolic play: pushes generic coordinates through a firing sequence,
// ignoring legality.  Firing is linear, so every node value stays a linear
// form in the initial coordinates.

struct SymbolicCyclePlay {
    std::vector<LinearForm> fired;   // the form fired at each step
    std::vector<LinearForm> output;  // coordinate forms after the cycle
};

inline SymbolicCyclePlay play_cycle_symbolic(const GcmGraph& g, const FiringSequence& cycle) {
    const int n = g.size();
    SymbolicCyclePlay play;
    play.output.assign(static_cast<std::size_t>(n), LinearForm(static_cast<std::size_t>(n), Rational(0)));
    for (int j = 1; j <= n; ++j) play.output[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(j - 1)] = 1;
    for (int node : cycle) {
        if (node < 1 || node > n) throw IndexError("cycle node out of range");
        const LinearForm fired = play.output[static_cast<std::size_t>(node - 1)];
        play.fired.push_back(fired);
        for (int j : g.neighbors(node)) {
            LinearForm& fj = play.output[static_cast<std::size_t>(j - 1)];
            for (std::size_t c = 0; c < fj.size(); ++c) fj[c] -= g.entry(node, j) * fired[c];
        }
        for (std::size_t c = 0; c < fired.size(); ++c)
            play.output[static_cast<std::size_t>(node - 1)][c] = -fired[c];
    }
    return play;
}

// A region constraint evaluated at the cycle's output forms.
inline LinearForm constraint_after_cycle(const LinearConstraint& con,
                                         const std::vector<LinearForm>& output) {
    LinearForm target(output.empty() ? 0 : output.front().size(), Rational(0));
    for (std::size_t j = 0; j < output.size(); ++j)
        for (std::size_t c = 0; c < target.size(); ++c) target[c] += con.form[j] * output[j][c];
    return target;
}

// ---------------------------------------------------------------------------
// Invariant-region verification.  Pushes generic coordinates through the
// cycle; each fired value and each region constraint evaluated after the
// cycle must carry a stored witness that reproduces it exactly.

inline ProofReport verify_invariant_region(const GcmGraph& g, const InvariantRegionCertificate& cert) {
    const int n = g.size();
    ProofReport report;
    report.kind = "invariant-region";
    report.prefix = cert.prefix;
    if (cert.start.size() != n) return ProofReport::failed(report.kind, "DimensionMismatch");
    for (const LinearConstraint& c : cert.region)
        if (static_cast<int>(c.form.size()) != n)
            return ProofReport::failed(report.kind, "DimensionMismatch");
    if (cert.step_witnesses.size() != cert.cycle.size() ||
        cert.closure_witnesses.size() != cert.region.size())
        return ProofReport::failed(report.kind, "WitnessCountMismatch");

    // (a) prefix lands inside the region
    Position pos = cert.start;
    for (std::size_t t = 0; t < cert.prefix.size(); ++t) {
        const int node = cert.prefix[t];
        if (node < 1 || node > n || pos.at(node) <= 0)
            return ProofReport::failed(report.kind, "PrefixIllegal(step=" + std::to_string(t + 1) + ")");
        pos = fire(g, pos, node);
    }
    report.landing = pos;
    for (std::size_t r = 0; r < cert.region.size(); ++r) {
        Rational value = 0;
        for (int j = 1; j <= n; ++j) value += cert.region[r].form[static_cast<std::size_t>(j - 1)] * pos.at(j);
        const bool ok = cert.region[r].strict ? value > 0 : value >= 0;
        if (!ok)
            return ProofReport::failed(report.kind,
                                       "RegionViolated(constraint=" + std::to_string(r + 1) + ")");
    }

    auto check_witness = [&](const FarkasWitness& w, const LinearForm& target, bool need_strict,
                             const std::string& where) -> std::optional<std::string> {
        if (w.size() != cert.region.size()) return "WitnessMismatch(" + where + ": bad arity)";
        for (const Rational& x : w)
            if (x < 0) return "WitnessMismatch(" + where + ": negative weight)";
        if (detail::combine(cert.region, w) != target)
            return "WitnessMismatch(" + where + ": combination differs from target form)";
        if (need_strict && !detail::witness_is_strict(cert.region, w))
            return "NonStrictWitness(" + where + ")";
        return std::nullopt;
    };

    // (b) symbolic cycle with stored legality witnesses
    SymbolicCyclePlay play;
    try {
        play = play_cycle_symbolic(g, cert.cycle);
    } catch (const IndexError&) {
        return ProofReport::failed(report.kind, "LoopIllegal(bad node)");
    }
    for (std::size_t t = 0; t < cert.cycle.size(); ++t) {
        if (auto bad = check_witness(cert.step_witnesses[t], play.fired[t], /*need_strict=*/true,
                                     "step " + std::to_string(t + 1)))
            return ProofReport::failed(report.kind, *bad);
    }

    // (c) the region constraints hold again at the cycle's output
    for (std::size_t r = 0; r < cert.region.size(); ++r) {
        const LinearForm target = constraint_after_cycle(cert.region[r], play.output);
        if (auto bad = check_witness(cert.closure_witnesses[r], target, cert.region[r].strict,
                                     "closure " + std::to_string(r + 1)))
            return ProofReport::failed(report.kind, *bad);
    }
    report.ok = true;
    return report;
}

// Fills in the step and closure witnesses by exact search; throws when the
// cycle does not actually preserve the region.
inline InvariantRegionCertificate build_region_certificate(const GcmGraph& g,
                                                           std::vector<LinearConstraint> region,
                                                           Position start, FiringSequence prefix,
                                                           FiringSequence cycle) {
    InvariantRegionCertificate cert;
    cert.region = std::move(region);
    cert.start = std::move(start);
    cert.prefix = std::move(prefix);
    cert.cycle = std::move(cycle);

    const SymbolicCyclePlay play = play_cycle_symbolic(g, cert.cycle);
    for (const LinearForm& fired : play.fired) {
        auto w = detail::find_witness(cert.region, fired, /*need_strict=*/true);
        if (!w) throw std::logic_error("no legality witness while building a region certificate");
        cert.step_witnesses.push_back(*w);
    }
    for (const LinearConstraint& con : cert.region) {
        auto w = detail::find_witness(cert.region, constraint_after_cycle(con, play.output), con.strict);
        if (!w) throw std::logic_error("no closure witness while building a region certificate");
        cert.closure_witnesses.push_back(*w);
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Triangle potential certificates

inline TrianglePotentialCertificate build_triangle_certificate(int variant, int p1, int q1, int p2,
                                                               int q2) {
    InadmissibleFamilyId id = triangle(variant, p1, q1, p2, q2);
    validate_family(id);  // throws BadParameters
    TrianglePotentialCertificate cert;
    cert.variant = variant;
    cert.p1 = p1; cert.q1 = q1; cert.p2 = p2; cert.q2 = q2;
    const Rational P1 = p1, Q1 = q1, P2 = p2, Q2 = q2;
    Rational g1, g2, g3;  // growth = g1 + g2 + g3, split for the sign argument
    if (variant == 1) {
        cert.potential = {P1 + P2 - 1 / Q2, P1 + P2 - 1 / Q1, Rational(1)};
        g1 = Q1 * (P2 - 1 / Q2);
        g2 = Q2 * (P1 - 1 / Q1);
        g3 = P1 * Q1 + P2 * Q2 - 1;
        cert.residual_a = (Q1 * (P2 - 1 / Q2) + (P1 * Q1 - 1)) / Q2;
        cert.residual_b = (Q2 * (P1 - 1 / Q1) + (P2 * Q2 - 1)) / Q1;
    } else if (variant == 2) {
        cert.potential = {2 * P1 + 2 * P2 - 1 / Q1, P1 + 2 * P2 - 1 / Q2, Rational(1)};
        g1 = Q1 * (2 * P2 - 1 / Q1);
        g2 = Q2 * (P1 - 1 / Q2);
        g3 = 2 * P1 * Q1 + 2 * P2 * Q2 - 1;
        cert.residual_a = (Q2 * (P1 - 1 / Q2) + (2 * P2 * Q2 - 1)) / Q1;
        cert.residual_b = (Q1 * (2 * P2 - 1 / Q1) + (2 * P1 * Q1 - 1)) / Q2;
    } else {
        cert.potential = {4 * P1 + 6 * P2 - 1 / Q1, 2 * P1 + 4 * P2 - 1 / Q2, Rational(1)};
        g1 = Q1 * (6 * P2 - 1 / Q1);
        g2 = Q2 * (2 * P1 - 1 / Q2);
        g3 = 4 * P1 * Q1 + 4 * P2 * Q2 - 1;
        cert.residual_a = (Q2 * (2 * P1 - 1 / Q2) + (4 * P2 * Q2 - 1)) / Q1;
        cert.residual_b = (Q1 * (6 * P2 - 1 / Q1) + (4 * P1 * Q1 - 1)) / Q2;
    }
    // Each summand of the growth factor is nonnegative and the last one is
    // positive, so the potential can only grow.  A failure here means the
    // amplitude tables above were mistranscribed.
    if (!(g1 >= 0 && g2 >= 0 && g3 > 0))
        throw std::logic_error("nonpositive growth factor in a triangle certificate");
    cert.growth = g1 + g2 + g3;
    if (!(cert.residual_a >= 0 && cert.residual_b >= 0))
        throw std::logic_error("negative residual in a triangle certificate");
    return cert;
}

inline Rational triangle_potential(const TrianglePotentialCertificate& cert, const Position& pos) {
    Rational out = 0;
    for (int i = 1; i <= 3; ++i) out += cert.potential[static_cast<std::size_t>(i - 1)] * pos.at(i);
    return out;
}

inline bool triangle_region_member(const TrianglePotentialCertificate& cert, const Position& pos) {
    return pos.at(1) >= 0 && pos.at(2) >= 0 && pos.at(3) <= 0 && triangle_potential(cert, pos) > 0;
}

// One procedural round: fire the two right-hand nodes while possible (hard
// bound per round), then fire the left node once.
inline Position triangle_round(const GcmGraph& g, const Position& start, long round_bound = 1000) {
    Position pos = start;
    long count = 0;
    while (true) {
        int node = 0;
        if (pos.at(1) > 0) node = 1;
        else if (pos.at(2) > 0) node = 2;
        else break;
        if (++count > round_bound) throw std::runtime_error("RoundBound exceeded");
        pos = fire(g, pos, node);
    }
    return fire(g, pos, 3);  // throws IllegalFiring when the left node is not positive
}

// Sampled verification: random region points must follow the closed-form
// round outputs, land back in the region, and obey the potential recurrence.
inline ProofReport verify_triangle_certificate(const GcmGraph& g,
                                               const TrianglePotentialCertificate& cert,
                                               int samples, std::uint64_t seed) {
    ProofReport report;
    report.kind = "triangle-potential";
    if (g.size() != 3) return ProofReport::failed(report.kind, "DimensionMismatch");
    const Rational Q1 = cert.q1, Q2 = cert.q2;

    auto closed_form = [&](const Position& p) -> Position {
        const Rational a = p.at(1), b = p.at(2);
        const Rational k = triangle_potential(cert, p);
        std::vector<Rational> out(3);
        if (cert.variant == 1) {
            out[0] = Q1 * (k + a / Q2);
            out[1] = Q2 * (k + b / Q1);
            out[2] = -k - a / Q2 - b / Q1;
        } else {
            out[0] = Q1 * (k + b / Q2);
            out[1] = Q2 * (k + a / Q1);
            out[2] = -k - a / Q1 - b / Q2;
        }
        return Position(std::move(out));
    };

    auto check_point = [&](const Position& p) -> std::optional<std::string> {
        Position next;
        try {
            next = triangle_round(g, p);
        } catch (const std::runtime_error& e) {
            return std::string(e.what());
        }
        if (next != closed_form(p)) return "ClosedFormMismatch";
        if (!triangle_region_member(cert, next)) return "RegionEscape";
        if (!(next.at(1) > 0 && next.at(2) > 0 && next.at(3) < 0)) return "RegionEscape";
        const Rational k = triangle_potential(cert, p);
        const Rational k1 = triangle_potential(cert, next);
        if (k1 != cert.growth * k + cert.residual_a * p.at(1) + cert.residual_b * p.at(2))
            return "PotentialRecurrenceMismatch";
        return std::nullopt;
    };

    std::mt19937_64 rng(seed);
    auto small = [&](bool nonneg) {
        const long num = static_cast<long>(rng() % 60);
        const long den = static_cast<long>(rng() % 6) + 1;
        Rational r(num, den);
        return nonneg ? r : -r;
    };
    int done = 0;
    long attempts = 0;
    while (done < samples) {
        if (++attempts > 200L * samples + 1000)
            return ProofReport::failed(report.kind, "SamplingStalled");
        Position p(std::vector<Rational>{small(true), small(true), small(false)});
        if (!triangle_region_member(cert, p)) continue;
        if (auto bad = check_point(p)) return ProofReport::failed(report.kind, *bad);
        ++done;
    }
    report.ok = true;
    return report;
}

}  // namespace ngame
