#pragma once

#include "ngame/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

namespace ngame {

// ---------------------------------------------------------------------------
// Errors

class GcmValidationError : public std::runtime_error {
  public:
    enum class Kind { BadDiagonal, PositiveOffDiagonal, AsymmetricZero };

    GcmValidationError(Kind kind, int i, int j, const std::string& what)
        : std::runtime_error(what), kind_(kind), i_(i), j_(j) {}

    Kind kind() const { return kind_; }
    int row() const { return i_; }
    int col() const { return j_; }

  private:
    Kind kind_;
    int i_, j_;
};

class IllegalFiring : public std::runtime_error {
  public:
    IllegalFiring(int node, Rational value)
        : std::runtime_error("node " + std::to_string(node) + " has nonpositive value " +
                             to_string(value)),
          node_(node),
          value_(std::move(value)) {}

    int node() const { return node_; }
    const Rational& value() const { return value_; }

  private:
    int node_;
    Rational value_;
};

struct IndexError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// ---------------------------------------------------------------------------
// Amplitude matrix (generalized Cartan matrix)
//
// Convention: firing node i sends lam_j -> lam_j - M_ij * lam_i, so the
// off-diagonal entry M_ij controls how much node j gains when i fires.

class AmplitudeMatrix {
  public:
    static AmplitudeMatrix validated(const std::vector<std::vector<int>>& entries) {
        const int n = static_cast<int>(entries.size());
        if (n < 1) throw GcmValidationError(GcmValidationError::Kind::BadDiagonal, 0, 0, "empty matrix");
        for (const auto& row : entries)
            if (static_cast<int>(row.size()) != n)
                throw GcmValidationError(GcmValidationError::Kind::BadDiagonal, 0, 0, "matrix not square");
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                const int e = entries[i - 1][j - 1];
                if (i == j) {
                    if (e != 2)
                        throw GcmValidationError(GcmValidationError::Kind::BadDiagonal, i, i,
                                                 "diagonal entry at node " + std::to_string(i) +
                                                     " is " + std::to_string(e) + ", expected 2");
                    continue;
                }
                if (e > 0)
                    throw GcmValidationError(GcmValidationError::Kind::PositiveOffDiagonal, i, j,
                                             "positive off-diagonal entry at (" + std::to_string(i) +
                                                 "," + std::to_string(j) + ")");
                const int t = entries[j - 1][i - 1];
                if ((e == 0) != (t == 0))
                    throw GcmValidationError(GcmValidationError::Kind::AsymmetricZero, i, j,
                                             "zero pattern not symmetric at (" + std::to_string(i) +
                                                 "," + std::to_string(j) + ")");
            }
        }
        AmplitudeMatrix m;
        m.n_ = n;
        m.entries_.reserve(static_cast<std::size_t>(n) * n);
        for (const auto& row : entries) m.entries_.insert(m.entries_.end(), row.begin(), row.end());
        return m;
    }

    int size() const { return n_; }

    // M_ij, 1-based.
    int entry(int i, int j) const { return entries_[index(i, j)]; }

    bool operator==(const AmplitudeMatrix&) const = default;

  private:
    std::size_t index(int i, int j) const {
        if (i < 1 || i > n_ || j < 1 || j > n_) throw IndexError("matrix index out of range");
        return static_cast<std::size_t>(i - 1) * n_ + (j - 1);
    }

    int n_ = 0;
    std::vector<int> entries_;
};

// Convenience builder: n nodes, edges given as (i, j, p, q) with M_ij = -p, M_ji = -q.
inline AmplitudeMatrix make_matrix(int n, const std::vector<std::array<int, 4>>& edges) {
    std::vector<std::vector<int>> e(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) e[i][i] = 2;
    for (const auto& [i, j, p, q] : edges) {
        e[i - 1][j - 1] = -p;
        e[j - 1][i - 1] = -q;
    }
    return AmplitudeMatrix::validated(e);
}

// ---------------------------------------------------------------------------
// GCM graph: amplitude matrix plus derived edge set and connectivity.

class GcmGraph {
  public:
    explicit GcmGraph(AmplitudeMatrix matrix) : matrix_(std::move(matrix)) {
        const int n = matrix_.size();
        neighbors_.assign(n + 1, {});
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                if (matrix_.entry(i, j) != 0) {
                    edges_.emplace_back(i, j);
                    neighbors_[i].push_back(j);
                    neighbors_[j].push_back(i);
                }
        connected_ = compute_connected();
    }

    int size() const { return matrix_.size(); }
    const AmplitudeMatrix& matrix() const { return matrix_; }
    int entry(int i, int j) const { return matrix_.entry(i, j); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int i) const { return neighbors_.at(static_cast<std::size_t>(i)); }
    bool connected() const { return connected_; }

    bool operator==(const GcmGraph& other) const { return matrix_ == other.matrix_; }

  private:
    bool compute_connected() const {
        const int n = matrix_.size();
        std::vector<char> seen(n + 1, 0);
        std::vector<int> stack{1};
        seen[1] = 1;
        int count = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int w : neighbors_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return count == n;
    }

    AmplitudeMatrix matrix_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> neighbors_;
    bool connected_ = false;
};

// ---------------------------------------------------------------------------
// Positions

class Position {
  public:
    Position() = default;
    explicit Position(std::vector<Rational> values) : values_(std::move(values)) {}

    static Position zeros(int n) { return Position(std::vector<Rational>(static_cast<std::size_t>(n))); }

    int size() const { return static_cast<int>(values_.size()); }

    const Rational& at(int i) const { return values_.at(check(i)); }
    Rational& at(int i) { return values_.at(check(i)); }

    const std::vector<Rational>& values() const { return values_; }

    bool dominant() const {
        return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v >= 0; });
    }
    bool strongly_dominant() const {
        return std::all_of(values_.begin(), values_.end(), [](const Rational& v) { return v > 0; });
    }
    bool nonzero() const {
        return std::any_of(values_.begin(), values_.end(), [](const Rational& v) { return v != 0; });
    }

    bool operator==(const Position&) const = default;

  private:
    std::size_t check(int i) const {
        if (i < 1 || i > size()) throw IndexError("position index " + std::to_string(i) + " out of range");
        return static_cast<std::size_t>(i - 1);
    }

    std::vector<Rational> values_;
};

inline Position fundamental_position(const GcmGraph& g, int i) {
    Position p = Position::zeros(g.size());
    p.at(i) = 1;
    return p;
}

// ---------------------------------------------------------------------------
// Firing

using FiringSequence = std::vector<int>;

inline void check_compatible(const GcmGraph& g, const Position& p) {
    if (p.size() != g.size()) throw IndexError("position length does not match graph");
}

inline Position fire(const GcmGraph& g, const Position& position, int i) {
    check_compatible(g, position);
    const Rational v = position.at(i);
    if (v <= 0) throw IllegalFiring(i, v);
    Position out = position;
    for (int j : g.neighbors(i)) out.at(j) -= g.entry(i, j) * v;
    out.at(i) = -v;
    return out;
}

// The linear map of firing node i, rows indexed by target node.  Applying it
// needs no legality check.
inline std::vector<std::vector<Rational>> firing_map(const GcmGraph& g, int i) {
    const int n = g.size();
    if (i < 1 || i > n) throw IndexError("node index out of range");
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int j = 1; j <= n; ++j) {
        m[j - 1][j - 1] = 1;
        m[j - 1][i - 1] -= g.entry(i, j);
    }
    return m;
}

inline std::vector<int> legal_moves(const GcmGraph& g, const Position& position) {
    check_compatible(g, position);
    std::vector<int> out;
    for (int i = 1; i <= g.size(); ++i)
        if (position.at(i) > 0) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// Game traces

enum class OutcomeKind { Converged, BudgetExhausted, Partial, CertifiedDivergent };

struct GameOutcome {
    OutcomeKind kind = OutcomeKind::Partial;
    long steps = 0;
    std::optional<Position> terminal;   // set when converged
    std::string certificate;            // set when certified divergent

    static GameOutcome converged(long steps, Position terminal) {
        return {OutcomeKind::Converged, steps, std::move(terminal), {}};
    }
    static GameOutcome exhausted(long steps) { return {OutcomeKind::BudgetExhausted, steps, {}, {}}; }
    static GameOutcome partial(long steps) { return {OutcomeKind::Partial, steps, {}, {}}; }
};

struct GameStep {
    int fired = 0;
    Position position;
    bool operator==(const GameStep&) const = default;
};

struct GameTrace {
    Position initial;
    std::vector<GameStep> steps;
    GameOutcome outcome;
};

class IllegalFiringAt : public std::runtime_error {
  public:
    IllegalFiringAt(int step, int node, GameTrace partial)
        : std::runtime_error("illegal firing at step " + std::to_string(step) + " (node " +
                             std::to_string(node) + ")"),
          step_(step),
          node_(node),
          partial_(std::make_shared<GameTrace>(std::move(partial))) {}

    int step() const { return step_; }          // 1-based step index
    int node() const { return node_; }
    const GameTrace& partial() const { return *partial_; }

  private:
    int step_;
    int node_;
    std::shared_ptr<GameTrace> partial_;
};

// Plays the given firings in order.  Outcome is Converged when no node is
// positive afterwards, otherwise Partial.  Throws IllegalFiringAt (carrying
// the partial trace) on the first illegal firing.
inline GameTrace play_sequence(const GcmGraph& g, const Position& start, const FiringSequence& seq) {
    check_compatible(g, start);
    GameTrace trace;
    trace.initial = start;
    Position pos = start;
    for (std::size_t t = 0; t < seq.size(); ++t) {
        const int node = seq[t];
        if (node < 1 || node > g.size() || pos.at(node) <= 0) {
            trace.outcome = GameOutcome::partial(static_cast<long>(t));
            throw IllegalFiringAt(static_cast<int>(t) + 1, node, std::move(trace));
        }
        pos = fire(g, pos, node);
        trace.steps.push_back({node, pos});
    }
    const long n = static_cast<long>(seq.size());
    if (legal_moves(g, pos).empty())
        trace.outcome = GameOutcome::converged(n, pos);
    else
        trace.outcome = GameOutcome::partial(n);
    return trace;
}

// ---------------------------------------------------------------------------
// Strategies

class Strategy {
  public:
    static Strategy greedy_min() { return Strategy(Min{}); }
    static Strategy greedy_max() { return Strategy(Max{}); }
    static Strategy random_seeded(std::uint64_t seed) { return Strategy(Random{seed}); }
    // Plays the given firings first, then continues greedy-min.
    static Strategy prescribed(FiringSequence seq) { return Strategy(Prescribed{std::move(seq)}); }

    std::string name() const {
        switch (which_.index()) {
            case 0: return "greedy-min";
            case 1: return "greedy-max";
            case 2: return "random(" + std::to_string(std::get<Random>(which_).seed) + ")";
            default: return "prescribed";
        }
    }

    const FiringSequence* prescribed_sequence() const {
        auto* p = std::get_if<Prescribed>(&which_);
        return p ? &p->seq : nullptr;
    }

  private:
    struct Min {};
    struct Max {};
    struct Random { std::uint64_t seed; };
    struct Prescribed { FiringSequence seq; };

    explicit Strategy(std::variant<Min, Max, Random, Prescribed> w) : which_(std::move(w)) {}

    std::variant<Min, Max, Random, Prescribed> which_;
    friend class GameRunner;
};

class GameRunner {
  public:
    GameRunner(const Strategy& strategy) : which_(strategy.which_) {
        if (auto* r = std::get_if<Strategy::Random>(&which_)) rng_.seed(r->seed);
    }

    // Picks the next node to fire, or 0 when no legal move exists.
    int choose(const GcmGraph& g, const Position& pos) {
        if (auto* p = std::get_if<Strategy::Prescribed>(&which_)) {
            if (cursor_ < p->seq.size()) return p->seq[cursor_++];
        }
        return pick(legal_moves(g, pos));
    }

    // Same choice rule, over a precomputed legal-move list.
    int pick(const std::vector<int>& legal) {
        if (legal.empty()) return 0;
        switch (which_.index()) {
            case 1: return legal.back();
            case 2: return legal[static_cast<std::size_t>(rng_() % legal.size())];
            default: return legal.front();
        }
    }

  private:
    std::variant<Strategy::Min, Strategy::Max, Strategy::Random, Strategy::Prescribed> which_;
    std::mt19937_64 rng_;
    std::size_t cursor_ = 0;
};

// Runs the game until no legal move remains (Converged) or `budget` firings
// have been made (BudgetExhausted).  Deterministic for fixed inputs.
// `record_steps = false` keeps only the outcome, for long budget runs.
inline GameTrace run_game(const GcmGraph& g, const Position& start, const Strategy& strategy,
                          long budget, bool record_steps = true) {
    check_compatible(g, start);
    if (budget < 1) throw std::invalid_argument("budget must be positive");
    GameTrace trace;
    trace.initial = start;
    Position pos = start;
    long done = 0;
    if (const FiringSequence* seq = strategy.prescribed_sequence(); seq && !seq->empty()) {
        FiringSequence head(*seq);
        if (static_cast<long>(head.size()) > budget) head.resize(static_cast<std::size_t>(budget));
        GameTrace played = play_sequence(g, pos, head);   // throws IllegalFiringAt
        done = static_cast<long>(played.steps.size());
        if (done > 0) pos = played.steps.back().position;
        if (record_steps) trace.steps = std::move(played.steps);
        if (played.outcome.kind == OutcomeKind::Converged) {
            trace.outcome = GameOutcome::converged(done, pos);
            return trace;
        }
    }
    GameRunner runner(Strategy::greedy_min());
    if (!strategy.prescribed_sequence()) runner = GameRunner(strategy);

    const bool integral = std::all_of(pos.values().begin(), pos.values().end(), [](const Rational& v) {
        return boost::multiprecision::denominator(v) == 1;
    });
    if (!record_steps && integral) {
        // Integer positions stay integer under firing; plain big-integer
        // arithmetic avoids the per-operation normalization of rationals,
        // which dominates on long budget runs.
        const int n = g.size();
        std::vector<Integer> ival(static_cast<std::size_t>(n));
        for (int j = 1; j <= n; ++j) ival[static_cast<std::size_t>(j - 1)] = boost::multiprecision::numerator(pos.at(j));
        std::vector<int> legal;
        Integer fired;
        for (long t = done; t < budget; ++t) {
            legal.clear();
            for (int j = 1; j <= n; ++j)
                if (ival[static_cast<std::size_t>(j - 1)] > 0) legal.push_back(j);
            const int node = runner.pick(legal);
            if (node == 0) {
                for (int j = 1; j <= n; ++j) pos.at(j) = ival[static_cast<std::size_t>(j - 1)];
                trace.outcome = GameOutcome::converged(t, pos);
                return trace;
            }
            fired = ival[static_cast<std::size_t>(node - 1)];
            for (int j : g.neighbors(node))
                ival[static_cast<std::size_t>(j - 1)] -= g.entry(node, j) * fired;
            ival[static_cast<std::size_t>(node - 1)] = -fired;
        }
        for (int j = 1; j <= n; ++j) pos.at(j) = ival[static_cast<std::size_t>(j - 1)];
        if (legal_moves(g, pos).empty())
            trace.outcome = GameOutcome::converged(budget, pos);
        else
            trace.outcome = GameOutcome::exhausted(budget);
        return trace;
    }

    for (long t = done; t < budget; ++t) {
        const int node = runner.choose(g, pos);
        if (node == 0) {
            trace.outcome = GameOutcome::converged(t, pos);
            return trace;
        }
        pos = fire(g, pos, node);
        if (record_steps) trace.steps.push_back({node, pos});
    }
    if (legal_moves(g, pos).empty())
        trace.outcome = GameOutcome::converged(budget, pos);
    else
        trace.outcome = GameOutcome::exhausted(budget);
    return trace;
}

}  // namespace ngame
