#pragma once

#include "ngame/catalog.hpp"
#include "ngame/core.hpp"
#include "ngame/sequence_data.hpp"

#include <numeric>
#include <string>

namespace ngame {

// ---------------------------------------------------------------------------
// Convergent plans: complete game sequences for strongly dominant starts on
// the finite-type diagrams, with a closed-form terminal.

enum class TerminalRule {
    ReverseNegate,          // (a_1..a_n) -> (-a_n..-a_1)
    Negate,                 // (a_1..a_n) -> (-a_1..-a_n)
    NegateSwapTipsOddRank,  // negate; the two fork tips swap when the rank is odd
    NegatePermutedE6,       // the E6 diagram flip composed with negation
};

struct ConvergentPlan {
    DynkinType type;
    FiringSequence sequence;
    long expected_length = 0;
    TerminalRule terminal_rule = TerminalRule::Negate;
};

inline long expected_length(DynkinType t) {
    if (!valid_rank(t)) throw RankError("rank out of range for " + to_string(t));
    const long n = t.rank;
    switch (t.family) {
        case Family::A: return n * (n + 1) / 2;
        case Family::B:
        case Family::C: return n * n;
        case Family::D: return n * (n - 1);
        case Family::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
        case Family::F: return 24;
        case Family::G: return 6;
    }
    return 0;
}

namespace detail {

// One block of the classical sweeps: visits nodes from `i` rightwards and,
// except in type A, walks back.  Type D detours through both fork tips.
inline void append_block(FiringSequence& out, Family f, int i, int n) {
    switch (f) {
        case Family::A:
            for (int v = i; v <= n; ++v) out.push_back(v);
            break;
        case Family::B:
        case Family::C:
            if (i == n) {
                out.push_back(n);
            } else {
                for (int v = i; v <= n; ++v) out.push_back(v);
                for (int v = n - 1; v >= i; --v) out.push_back(v);
            }
            break;
        case Family::D:
            if (i == n - 1) {
                out.push_back(n - 1);
                out.push_back(n);
            } else {
                for (int v = i; v <= n - 2; ++v) out.push_back(v);
                out.push_back(n - 1);
                out.push_back(n);
                for (int v = n - 2; v >= i; --v) out.push_back(v);
            }
            break;
        default: throw RankError("block sweep is defined for types A-D only");
    }
}

inline FiringSequence block_sweep(Family f, int n, int down_to) {
    FiringSequence out;
    const int top = (f == Family::D) ? n - 1 : n;
    for (int i = top; i >= down_to; --i) append_block(out, f, i, n);
    return out;
}

template <std::size_t N>
FiringSequence to_sequence(const int (&data)[N]) {
    return FiringSequence(data, data + N);
}

}  // namespace detail

// Sweep that plays a complete game of the subdiagram on nodes 2..n while
// collecting everything at node 1; legal from any strongly dominant start.
inline FiringSequence tail_subgame_sequence(DynkinType t) {
    if (!valid_rank(t)) throw RankError("rank out of range for " + to_string(t));
    switch (t.family) {
        case Family::A:
            if (t.rank < 2) throw RankError("tail sweep needs rank >= 2 in type A");
            [[fallthrough]];
        case Family::B:
        case Family::C:
        case Family::D: return detail::block_sweep(t.family, t.rank, 2);
        default: throw RankError("tail sweep is defined for the classical families only");
    }
}

// Complete game plan for the classical families.
inline ConvergentPlan classical_plan(DynkinType t) {
    if (!valid_rank(t)) throw RankError("rank out of range for " + to_string(t));
    ConvergentPlan plan;
    plan.type = t;
    plan.expected_length = expected_length(t);
    switch (t.family) {
        case Family::A:
            plan.sequence = detail::block_sweep(Family::A, t.rank, 1);
            plan.terminal_rule = TerminalRule::ReverseNegate;
            break;
        case Family::B:
        case Family::C:
            plan.sequence = detail::block_sweep(t.family, t.rank, 1);
            plan.terminal_rule = TerminalRule::Negate;
            break;
        case Family::D:
            plan.sequence = detail::block_sweep(Family::D, t.rank, 1);
            plan.terminal_rule = TerminalRule::NegateSwapTipsOddRank;
            break;
        default: throw RankError("classical plan is defined for types A-D only");
    }
    return plan;
}

// Complete game plan for E6/E7/E8/F4/G2, stored as literal firing data.
inline ConvergentPlan exceptional_plan(DynkinType t) {
    if (!valid_rank(t)) throw RankError("rank out of range for " + to_string(t));
    ConvergentPlan plan;
    plan.type = t;
    plan.expected_length = expected_length(t);
    plan.terminal_rule = TerminalRule::Negate;
    switch (t.family) {
        case Family::G: plan.sequence = {1, 2, 1, 2, 1, 2}; break;
        case Family::F: plan.sequence = detail::to_sequence(detail::kF4Sequence); break;
        case Family::E:
            if (t.rank == 6) {
                plan.sequence = detail::to_sequence(detail::kE6Sequence);
                plan.terminal_rule = TerminalRule::NegatePermutedE6;
            } else if (t.rank == 7) {
                plan.sequence = detail::to_sequence(detail::kE7Sequence);
            } else {
                plan.sequence = detail::to_sequence(detail::kE8Sequence);
            }
            break;
        default: throw RankError("exceptional plan is defined for types E/F/G only");
    }
    return plan;
}

inline ConvergentPlan convergent_plan(DynkinType t) {
    switch (t.family) {
        case Family::A:
        case Family::B:
        case Family::C:
        case Family::D: return classical_plan(t);
        default: return exceptional_plan(t);
    }
}

// The terminal the plan promises for a strongly dominant start.
inline Position plan_terminal(const ConvergentPlan& plan, const Position& start) {
    const int n = start.size();
    Position out = Position::zeros(n);
    switch (plan.terminal_rule) {
        case TerminalRule::ReverseNegate:
            for (int i = 1; i <= n; ++i) out.at(i) = -start.at(n + 1 - i);
            break;
        case TerminalRule::Negate:
            for (int i = 1; i <= n; ++i) out.at(i) = -start.at(i);
            break;
        case TerminalRule::NegateSwapTipsOddRank:
            for (int i = 1; i <= n; ++i) out.at(i) = -start.at(i);
            if (n % 2 == 1) std::swap(out.at(n - 1), out.at(n));
            break;
        case TerminalRule::NegatePermutedE6: {
            static constexpr int flip[] = {6, 2, 5, 4, 3, 1};
            for (int i = 1; i <= 6; ++i) out.at(i) = -start.at(flip[i - 1]);
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Strong-convergence probe: runs several strategies from the same start and
// reports whether every outcome agrees in kind, terminal, and step count.
// The probe observes agreement; it never asserts it.

struct ProbeTrial {
    std::string strategy;
    GameOutcome outcome;
};

struct ProbeReport {
    bool all_agree = false;
    bool all_converged = false;
    std::vector<ProbeTrial> trials;

    const GameOutcome& first() const { return trials.front().outcome; }
};

inline ProbeReport strong_convergence_probe(const GcmGraph& g, const Position& start, int trials,
                                            std::uint64_t seed, long budget) {
    std::vector<Strategy> strategies{Strategy::greedy_min(), Strategy::greedy_max()};
    for (int i = 0; i < trials; ++i) strategies.push_back(Strategy::random_seeded(seed + static_cast<std::uint64_t>(i)));
    ProbeReport report;
    for (const Strategy& s : strategies) {
        GameTrace t = run_game(g, start, s, budget, /*record_steps=*/false);
        report.trials.push_back({s.name(), std::move(t.outcome)});
    }
    report.all_agree = true;
    report.all_converged = true;
    const GameOutcome& ref = report.trials.front().outcome;
    for (const ProbeTrial& trial : report.trials) {
        const GameOutcome& o = trial.outcome;
        if (o.kind != OutcomeKind::Converged) report.all_converged = false;
        if (o.kind != ref.kind || o.steps != ref.steps || o.terminal != ref.terminal)
            report.all_agree = false;
    }
    return report;
}

}  // namespace ngame
