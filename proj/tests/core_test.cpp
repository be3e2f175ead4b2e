#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ngame/catalog.hpp"
#include "ngame/core.hpp"

#include <future>
#include <random>

using namespace ngame;

namespace {

Position pos_of(std::vector<Rational> v) { return Position(std::move(v)); }

GcmGraph two_node(int p, int q) { return GcmGraph(make_matrix(2, {{1, 2, p, q}})); }

std::mt19937_64 rng(20240517);

Rational small_positive() {
    return Rational(static_cast<long>(rng() % 100) + 1, static_cast<long>(rng() % 10) + 1);
}

Position random_strongly_dominant(int n) {
    std::vector<Rational> v;
    for (int i = 0; i < n; ++i) v.push_back(small_positive());
    return Position(std::move(v));
}

}  // namespace

TEST_CASE("matrix validation accepts GCMs and names the first violation") {
    CHECK(AmplitudeMatrix::validated({{2, -1}, {-2, 2}}).entry(2, 1) == -2);
    CHECK(AmplitudeMatrix::validated({{2}}).size() == 1);

    try {
        AmplitudeMatrix::validated({{2, -1}, {0, 2}});
        FAIL("expected AsymmetricZero");
    } catch (const GcmValidationError& e) {
        CHECK(e.kind() == GcmValidationError::Kind::AsymmetricZero);
        CHECK(e.row() == 1);
        CHECK(e.col() == 2);
    }
    try {
        AmplitudeMatrix::validated({{1}});
        FAIL("expected BadDiagonal");
    } catch (const GcmValidationError& e) {
        CHECK(e.kind() == GcmValidationError::Kind::BadDiagonal);
        CHECK(e.row() == 1);
    }
    try {
        AmplitudeMatrix::validated({{2, 1}, {1, 2}});
        FAIL("expected PositiveOffDiagonal");
    } catch (const GcmValidationError& e) {
        CHECK(e.kind() == GcmValidationError::Kind::PositiveOffDiagonal);
        CHECK(e.row() == 1);
        CHECK(e.col() == 2);
    }
    // first violation in row-major order wins
    try {
        AmplitudeMatrix::validated({{2, 0, -1}, {-1, 2, 0}, {0, -1, 2}});
        FAIL("expected AsymmetricZero at (1,2)");
    } catch (const GcmValidationError& e) {
        CHECK(e.kind() == GcmValidationError::Kind::AsymmetricZero);
        CHECK(e.row() == 1);
        CHECK(e.col() == 2);
    }
}

TEST_CASE("firing transforms positions exactly") {
    const GcmGraph b2 = two_node(1, 2);
    CHECK(fire(b2, pos_of({1, 2}), 2) == pos_of({5, -2}));

    const GcmGraph single(AmplitudeMatrix::validated({{2}}));
    CHECK(fire(single, pos_of({7}), 1) == pos_of({-7}));

    const GcmGraph a2 = two_node(1, 1);
    CHECK(fire(a2, pos_of({1, 1}), 1) == pos_of({-1, 2}));

    const Position before = pos_of({1, 2});
    Position copy = before;
    (void)fire(b2, copy, 2);
    CHECK(copy == before);  // input unchanged

    CHECK_THROWS_AS(fire(a2, pos_of({0, 1}), 1), IllegalFiring);
    try {
        fire(a2, pos_of({-3, 1}), 1);
    } catch (const IllegalFiring& e) {
        CHECK(e.node() == 1);
        CHECK(e.value() == -3);
    }
}

TEST_CASE("firing maps match direct firing and square to the identity") {
    const GcmGraph a2 = two_node(1, 1);
    const auto f1 = firing_map(a2, 1);
    CHECK(f1[0] == std::vector<Rational>{-1, 0});
    CHECK(f1[1] == std::vector<Rational>{1, 1});

    const GcmGraph b2 = two_node(1, 2);
    const auto f2 = firing_map(b2, 2);
    // sends (a, b) to (a + 2b, -b)
    CHECK(f2[0] == std::vector<Rational>{1, 2});
    CHECK(f2[1] == std::vector<Rational>{0, -1});

    auto apply = [](const std::vector<std::vector<Rational>>& m, const Position& p) {
        std::vector<Rational> out(m.size());
        for (std::size_t r = 0; r < m.size(); ++r)
            for (std::size_t c = 0; c < m.size(); ++c) out[r] += m[r][c] * p.values()[c];
        return Position(std::move(out));
    };

    for (const GcmGraph& g : {two_node(1, 3), build_finite({Family::D, 5}), build_finite({Family::F, 4})}) {
        for (int i = 1; i <= g.size(); ++i) {
            const auto f = firing_map(g, i);
            const Position probe = random_strongly_dominant(g.size());
            // involution: applying twice restores the input
            CHECK(apply(f, apply(f, probe)) == probe);
            // consistency with fire() on a legal position
            CHECK(apply(f, probe) == fire(g, probe, i));
        }
    }
}

TEST_CASE("legal moves are the positive nodes in increasing order") {
    const GcmGraph a3 = build_finite({Family::A, 3});
    CHECK(legal_moves(a3, pos_of({-1, 0, 3})) == std::vector<int>{3});
    const GcmGraph b2 = two_node(1, 2);
    CHECK(legal_moves(b2, pos_of({-2, -3})).empty());
    const GcmGraph a4 = build_finite({Family::A, 4});
    CHECK(legal_moves(a4, pos_of({1, 1, 1, 1})) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("play_sequence records every intermediate position") {
    const GcmGraph b2 = two_node(1, 2);
    const GameTrace t = play_sequence(b2, pos_of({1, 1}), {2, 1, 2, 1});
    REQUIRE(t.steps.size() == 4);
    CHECK(t.steps[0].position == pos_of({3, -1}));
    CHECK(t.steps[1].position == pos_of({-3, 2}));
    CHECK(t.steps[2].position == pos_of({1, -2}));
    CHECK(t.steps[3].position == pos_of({-1, -1}));
    CHECK(t.outcome.kind == OutcomeKind::Converged);
    CHECK(*t.outcome.terminal == pos_of({-1, -1}));

    const GcmGraph g2 = build_finite({Family::G, 2});
    const GameTrace tg = play_sequence(g2, pos_of({1, 1}), {1, 2, 1, 2, 1, 2});
    CHECK(tg.outcome.kind == OutcomeKind::Converged);
    CHECK(*tg.outcome.terminal == pos_of({-1, -1}));

    const GcmGraph a2 = two_node(1, 1);
    try {
        play_sequence(a2, pos_of({1, 0}), {2});
        FAIL("expected IllegalFiringAt");
    } catch (const IllegalFiringAt& e) {
        CHECK(e.step() == 1);
        CHECK(e.node() == 2);
        CHECK(e.partial().steps.empty());
    }

    // a legal but unfinished sequence is Partial
    const GameTrace partial = play_sequence(b2, pos_of({1, 1}), {2});
    CHECK(partial.outcome.kind == OutcomeKind::Partial);

    // the empty game sequence converges from a position with no positive node
    const GameTrace empty = play_sequence(b2, pos_of({-2, -3}), {});
    CHECK(empty.outcome.kind == OutcomeKind::Converged);
    CHECK(empty.outcome.steps == 0);
    CHECK(*empty.outcome.terminal == pos_of({-2, -3}));
}

TEST_CASE("run_game converges, exhausts, and honors strategies") {
    const GcmGraph b2 = two_node(1, 2);
    const GameTrace t = run_game(b2, pos_of({2, 3}), Strategy::greedy_min(), 100);
    CHECK(t.outcome.kind == OutcomeKind::Converged);
    CHECK(t.outcome.steps == 4);
    CHECK(*t.outcome.terminal == pos_of({-2, -3}));

    const GcmGraph single(AmplitudeMatrix::validated({{2}}));
    for (const Strategy& s : {Strategy::greedy_min(), Strategy::greedy_max(), Strategy::random_seeded(7)}) {
        const GameTrace z = run_game(single, pos_of({0}), s, 10);
        CHECK(z.outcome.kind == OutcomeKind::Converged);
        CHECK(z.outcome.steps == 0);
        CHECK(*z.outcome.terminal == pos_of({0}));
    }

    const GcmGraph cycle3 = build_inadmissible(atilde(3));
    const GameTrace d = run_game(cycle3, fundamental_position(cycle3, 1), Strategy::greedy_min(), 100);
    CHECK(d.outcome.kind == OutcomeKind::BudgetExhausted);
    CHECK(d.outcome.steps == 100);

    // seeded randomness is reproducible
    const GcmGraph a5 = build_finite({Family::A, 5});
    const Position start = random_strongly_dominant(5);
    const GameTrace r1 = run_game(a5, start, Strategy::random_seeded(99), 1000);
    const GameTrace r2 = run_game(a5, start, Strategy::random_seeded(99), 1000);
    REQUIRE(r1.steps.size() == r2.steps.size());
    for (std::size_t i = 0; i < r1.steps.size(); ++i) CHECK(r1.steps[i] == r2.steps[i]);

    // prescribed play continues greedy-min and reports prescribed errors
    const GameTrace p = run_game(b2, pos_of({2, 3}), Strategy::prescribed({2}), 100);
    CHECK(p.outcome.kind == OutcomeKind::Converged);
    CHECK(p.outcome.steps == 4);
    CHECK(*p.outcome.terminal == pos_of({-2, -3}));
    CHECK_THROWS_AS(run_game(b2, pos_of({2, 3}), Strategy::prescribed({1, 1}), 100), IllegalFiringAt);
}

TEST_CASE("fundamental positions") {
    const GcmGraph a3 = build_finite({Family::A, 3});
    CHECK(fundamental_position(a3, 1) == pos_of({1, 0, 0}));
    const GcmGraph single(AmplitudeMatrix::validated({{2}}));
    CHECK(fundamental_position(single, 1) == pos_of({1}));
    const GcmGraph a4 = build_finite({Family::A, 4});
    CHECK(fundamental_position(a4, 3) == pos_of({0, 0, 1, 0}));
}

TEST_CASE("scaling: a legal sequence from lam is legal from r*lam with scaled result") {
    for (DynkinType t : {DynkinType{Family::A, 4}, {Family::B, 3}, {Family::D, 4}}) {
        const GcmGraph g = build_finite(t);
        for (int trial = 0; trial < 20; ++trial) {
            const Position start = random_strongly_dominant(g.size());
            const GameTrace base = run_game(g, start, Strategy::random_seeded(trial), 10000);
            REQUIRE(base.outcome.kind == OutcomeKind::Converged);
            FiringSequence seq;
            for (const GameStep& s : base.steps) seq.push_back(s.fired);

            const Rational r = small_positive();
            std::vector<Rational> scaled;
            for (const Rational& v : start.values()) scaled.push_back(r * v);
            const GameTrace again = play_sequence(g, Position(scaled), seq);
            CHECK(again.outcome.kind == OutcomeKind::Converged);
            for (std::size_t i = 0; i < seq.size(); ++i) {
                const Position& unscaled = base.steps[i].position;
                for (int j = 1; j <= g.size(); ++j)
                    CHECK(again.steps[i].position.at(j) == r * unscaled.at(j));
            }
        }
    }
}

TEST_CASE("locality: firing changes only the fired node and its neighbors") {
    for (const GcmGraph& g : {build_finite({Family::D, 6}), build_inadmissible(atilde(5))}) {
        for (int i = 1; i <= g.size(); ++i) {
            const Position before = random_strongly_dominant(g.size());
            const Position after = fire(g, before, i);
            for (int j = 1; j <= g.size(); ++j) {
                const bool touched = j == i ||
                    std::find(g.neighbors(i).begin(), g.neighbors(i).end(), j) != g.neighbors(i).end();
                if (!touched) CHECK(after.at(j) == before.at(j));
            }
        }
    }
}

TEST_CASE("exactness: replaying a recorded trace reproduces it bit for bit") {
    const GcmGraph f4 = build_finite({Family::F, 4});
    const Position start = random_strongly_dominant(4);
    const GameTrace t = run_game(f4, start, Strategy::random_seeded(5), 1000);
    REQUIRE(t.outcome.kind == OutcomeKind::Converged);
    Position pos = start;
    for (const GameStep& s : t.steps) {
        pos = fire(f4, pos, s.fired);
        CHECK(pos == s.position);
    }
}

TEST_CASE("strong convergence observed: strategies agree on convergent games") {
    for (DynkinType t : {DynkinType{Family::A, 5}, {Family::C, 4}, {Family::G, 2}}) {
        const GcmGraph g = build_finite(t);
        const Position start = random_strongly_dominant(g.size());
        const GameTrace ref = run_game(g, start, Strategy::greedy_min(), 10000);
        REQUIRE(ref.outcome.kind == OutcomeKind::Converged);
        std::vector<Strategy> others{Strategy::greedy_max()};
        for (int i = 0; i < 20; ++i) others.push_back(Strategy::random_seeded(100 + i));
        for (const Strategy& s : others) {
            const GameTrace o = run_game(g, start, s, 10000);
            CHECK(o.outcome.kind == OutcomeKind::Converged);
            CHECK(o.outcome.steps == ref.outcome.steps);
            CHECK(*o.outcome.terminal == *ref.outcome.terminal);
        }
    }
}

TEST_CASE("comparison observed: lowering a convergent start keeps it convergent") {
    for (int trial = 0; trial < 40; ++trial) {
        const DynkinType t{Family::A, 2 + static_cast<int>(rng() % 5)};
        const GcmGraph g = build_finite(t);
        const Position lam = random_strongly_dominant(g.size());
        REQUIRE(run_game(g, lam, Strategy::greedy_min(), 100000).outcome.kind == OutcomeKind::Converged);
        std::vector<Rational> lower;
        for (const Rational& v : lam.values()) lower.push_back(v - small_positive());
        const GameTrace o = run_game(g, Position(lower), Strategy::greedy_min(), 100000);
        CHECK(o.outcome.kind == OutcomeKind::Converged);
    }
}

TEST_CASE("certified-divergent starts exhaust every strategy") {
    for (const InadmissibleFamilyId& id : {atilde(3), btilde_path(3)}) {
        const GcmGraph g = build_inadmissible(id);
        for (int omega = 1; omega <= g.size(); ++omega) {
            for (const Strategy& s :
                 {Strategy::greedy_min(), Strategy::greedy_max(), Strategy::random_seeded(3)}) {
                const GameTrace t =
                    run_game(g, fundamental_position(g, omega), s, 10000, /*record_steps=*/false);
                CHECK(t.outcome.kind == OutcomeKind::BudgetExhausted);
            }
        }
    }
}

TEST_CASE("game values are safely shareable across threads") {
    const GcmGraph g = build_finite({Family::E, 7});
    const Position start = random_strongly_dominant(7);
    const GameTrace serial = run_game(g, start, Strategy::greedy_min(), 10000, false);
    std::vector<std::future<GameTrace>> jobs;
    for (int i = 0; i < 8; ++i)
        jobs.push_back(std::async(std::launch::async, [&g, &start, i] {
            const Strategy s = i % 2 ? Strategy::random_seeded(static_cast<std::uint64_t>(i))
                                     : Strategy::greedy_min();
            return run_game(g, start, s, 10000, false);
        }));
    for (auto& job : jobs) {
        const GameTrace t = job.get();
        CHECK(t.outcome.kind == OutcomeKind::Converged);
        CHECK(t.outcome.steps == serial.outcome.steps);
        CHECK(*t.outcome.terminal == *serial.outcome.terminal);
    }
}

TEST_CASE("position predicates") {
    CHECK(pos_of({0, 1}).dominant());
    CHECK_FALSE(pos_of({0, 1}).strongly_dominant());
    CHECK(pos_of({1, 1}).strongly_dominant());
    CHECK(pos_of({0, -1}).nonzero());
    CHECK_FALSE(pos_of({0, 0}).nonzero());
    CHECK_FALSE(pos_of({0, -1}).dominant());
}
