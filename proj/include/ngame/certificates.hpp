#pragma once

#include "ngame/divergence.hpp"

#include <map>

namespace ngame {

// ---------------------------------------------------------------------------
// The divergence certificate catalog: one entry per (family, fundamental
// position).  Certificates quoted with a node relabeling are expanded through
// the witnessing graph automorphism.

namespace detail {

inline FiringSequence up(int a, int b) {
    FiringSequence out;
    for (int i = a; i <= b; ++i) out.push_back(i);
    return out;
}
inline FiringSequence down(int a, int b) {
    FiringSequence out;
    for (int i = a; i >= b; --i) out.push_back(i);
    return out;
}
inline FiringSequence cat(std::initializer_list<FiringSequence> parts) {
    FiringSequence out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}
inline FiringSequence times(FiringSequence s, int m) {
    FiringSequence out;
    for (int i = 0; i < m; ++i) out.insert(out.end(), s.begin(), s.end());
    return out;
}

inline std::vector<Rational> sparse(int n, std::initializer_list<std::pair<int, int>> at) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    for (auto [i, val] : at) v[static_cast<std::size_t>(i - 1)] = val;
    return v;
}

inline std::vector<Rational> dense(std::initializer_list<int> vals) {
    std::vector<Rational> v;
    for (int x : vals) v.emplace_back(x);
    return v;
}

template <std::size_t N>
FiringSequence seq_of(const int (&data)[N]) {
    return FiringSequence(data, data + N);
}

inline Position fundamental_position_n(int n, int i) {
    Position p = Position::zeros(n);
    p.at(i) = 1;
    return p;
}

inline ParametricLoopCertificate loop_cert(int n, int omega, FiringSequence prefix,
                                           std::vector<Rational> intercept, std::vector<Rational> slope,
                                           FiringSequence cycle, int repeats = 1) {
    ParametricLoopCertificate c;
    c.start = fundamental_position_n(n, omega);
    c.prefix = std::move(prefix);
    c.family.intercept = std::move(intercept);
    c.family.slope = std::move(slope);
    c.cycle = std::move(cycle);
    c.repeats = repeats;
    return c;
}

// sigma[i-1] = image of node i; must be an automorphism of the family graph.
inline ParametricLoopCertificate relabel(const ParametricLoopCertificate& c, const NodeRelabeling& sigma) {
    const int n = static_cast<int>(sigma.size());
    ParametricLoopCertificate out;
    out.repeats = c.repeats;
    out.start = Position::zeros(n);
    out.family.intercept.assign(static_cast<std::size_t>(n), Rational(0));
    out.family.slope.assign(static_cast<std::size_t>(n), Rational(0));
    for (int i = 1; i <= n; ++i) {
        const std::size_t from = static_cast<std::size_t>(i - 1);
        const std::size_t to = static_cast<std::size_t>(sigma[from] - 1);
        out.start.at(sigma[from]) = c.start.at(i);
        out.family.intercept[to] = c.family.intercept[from];
        out.family.slope[to] = c.family.slope[from];
    }
    auto map_seq = [&](const FiringSequence& s) {
        FiringSequence r;
        r.reserve(s.size());
        for (int i : s) r.push_back(sigma[static_cast<std::size_t>(i - 1)]);
        return r;
    };
    out.prefix = map_seq(c.prefix);
    out.cycle = map_seq(c.cycle);
    return out;
}

inline NodeRelabeling identity_perm(int n) {
    NodeRelabeling s(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) s[static_cast<std::size_t>(i - 1)] = i;
    return s;
}

inline NodeRelabeling swap_perm(int n, int a, int b) {
    NodeRelabeling s = identity_perm(n);
    std::swap(s[static_cast<std::size_t>(a - 1)], s[static_cast<std::size_t>(b - 1)]);
    return s;
}

inline NodeRelabeling compose(const NodeRelabeling& second, const NodeRelabeling& first) {
    NodeRelabeling out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i)
        out[i] = second[static_cast<std::size_t>(first[i] - 1)];
    return out;
}

}  // namespace detail

namespace detail {

// All parametric-loop certificates of one family, indexed by fundamental
// position.  The relabelings used for the symmetric entries are asserted to
// be graph automorphisms by the self-validation tests.
inline std::vector<ParametricLoopCertificate> loop_family(const InadmissibleFamilyId& id) {
    using S = InadmissibleShape;
    const int n = family_size(id);
    std::vector<ParametricLoopCertificate> certs(static_cast<std::size_t>(n));
    auto set = [&](int omega, ParametricLoopCertificate c) {
        certs[static_cast<std::size_t>(omega - 1)] = std::move(c);
    };
    auto set_relabeled = [&](int omega, const ParametricLoopCertificate& base, const NodeRelabeling& sigma) {
        set(omega, relabel(base, sigma));
    };

    switch (id.shape) {
        case S::Atilde: {
            ParametricLoopCertificate base =
                loop_cert(n, 1, {}, sparse(n, {{1, 1}}), sparse(n, {{1, 2}, {2, -1}, {n, -1}}),
                          cat({up(1, n), down(n - 1, 2)}));
            set(1, base);
            for (int j = 2; j <= n; ++j) {
                NodeRelabeling rot(static_cast<std::size_t>(n));
                for (int i = 1; i <= n; ++i)
                    rot[static_cast<std::size_t>(i - 1)] = (i - 1 + j - 1) % n + 1;
                set_relabeled(j, base, rot);
            }
            break;
        }
        case S::BtildeFork: {
            if (n == 4) {
                ParametricLoopCertificate w1 =
                    loop_cert(4, 1, {1, 3, 2, 4, 3}, dense({2, 1, -2, 2}), dense({1, 1, -2, 2}),
                              {1, 2, 4, 3, 1, 2, 4, 3});
                set(1, w1);
                set_relabeled(2, w1, swap_perm(4, 1, 2));
                set(3, loop_cert(4, 3, {}, sparse(4, {{3, 1}}), dense({-2, -2, 2, 0}), {3, 4, 3, 2, 1}));
                set(4, loop_cert(4, 4, {}, sparse(4, {{4, 1}}), dense({0, 0, -1, 2}), {4, 3, 2, 1, 3}));
                break;
            }
            const FiringSequence trav = cat({{1}, up(3, n), down(n - 1, 3), {2}});
            ParametricLoopCertificate w1 = loop_cert(n, 1, {}, sparse(n, {{1, 1}}),
                                                     sparse(n, {{1, 2}, {2, -2}}), times(trav, 2));
            set(1, w1);
            set_relabeled(2, w1, swap_perm(n, 1, 2));
            set(3, loop_cert(n, 3, {}, sparse(n, {{3, 1}}), sparse(n, {{1, -2}, {2, -2}, {3, 2}}),
                             cat({up(3, n), down(n - 1, 3), {2, 1}})));
            for (int i = 4; i <= n - 1; ++i)
                set(i, loop_cert(n, i, {}, sparse(n, {{i, 1}}), sparse(n, {{i - 1, -2}, {i, 2}}),
                                 cat({up(i, n), down(n - 1, i), down(i - 1, 3), {2, 1}, up(3, i - 1)})));
            set(n, loop_cert(n, n, {}, sparse(n, {{n, 1}}), sparse(n, {{n - 1, -1}, {n, 2}}),
                             cat({down(n, 3), {2, 1}, up(3, n - 1)})));
            break;
        }
        case S::BtildePath: {
            const NodeRelabeling mirror = [&] {
                NodeRelabeling s(static_cast<std::size_t>(n));
                for (int i = 1; i <= n; ++i) s[static_cast<std::size_t>(i - 1)] = n + 1 - i;
                return s;
            }();
            ParametricLoopCertificate w1 = loop_cert(n, 1, {}, sparse(n, {{1, 1}}),
                                                     sparse(n, {{1, 2}, {2, -1}}),
                                                     cat({up(1, n), down(n - 1, 2)}));
            set(1, w1);
            set_relabeled(n, w1, mirror);
            if (n == 3) {
                set(2, loop_cert(3, 2, {}, sparse(3, {{2, 1}}), dense({-4, 2, 0}), {2, 3, 2, 1}));
            } else {
                ParametricLoopCertificate w2;
                for (int i = 2; i <= n - 2; ++i) {
                    ParametricLoopCertificate c =
                        loop_cert(n, i, {}, sparse(n, {{i, 1}}), sparse(n, {{i, 2}, {i + 1, -2}}),
                                  cat({down(i, 1), up(2, n), down(n - 1, i + 1)}));
                    if (i == 2) w2 = c;
                    set(i, std::move(c));
                }
                set_relabeled(n - 1, w2, mirror);
            }
            break;
        }
        case S::CtildeA:
        case S::CtildeB: {
            const bool symmetric = id.shape == S::CtildeA;
            ParametricLoopCertificate w1 = loop_cert(
                n, 1, {}, sparse(n, {{1, 1}}),
                symmetric ? sparse(n, {{1, 2}, {2, -2}}) : sparse(n, {{1, 2}, {2, -1}}),
                cat({up(1, n), down(n - 1, 2)}));
            set(1, w1);
            for (int i = 2; i <= n - 1; ++i)
                set(i, loop_cert(n, i, {}, sparse(n, {{i, 1}}), sparse(n, {{i, 2}, {i + 1, -2}}),
                                 cat({down(i, 1), up(2, n), down(n - 1, i + 1)})));
            if (symmetric) {
                NodeRelabeling mirror(static_cast<std::size_t>(n));
                for (int i = 1; i <= n; ++i) mirror[static_cast<std::size_t>(i - 1)] = n + 1 - i;
                set_relabeled(n, w1, mirror);
            } else {
                set(n, loop_cert(n, n, {}, sparse(n, {{n, 1}}), sparse(n, {{n - 1, -2}, {n, 2}}),
                                 cat({down(n, 1), up(2, n - 1)})));
            }
            break;
        }
        case S::CtildeFork: {
            const FiringSequence trav = cat({{1}, up(3, n), down(n - 1, 3), {2}});
            ParametricLoopCertificate w1 = loop_cert(n, 1, {}, sparse(n, {{1, 1}}),
                                                     sparse(n, {{1, 2}, {2, -2}}), times(trav, 2));
            set(1, w1);
            set_relabeled(2, w1, swap_perm(n, 1, 2));
            set(3, loop_cert(n, 3, {}, sparse(n, {{3, 1}}), sparse(n, {{1, -2}, {2, -2}, {3, 2}}),
                             cat({up(3, n), down(n - 1, 3), {2, 1}})));
            for (int i = 4; i <= n - 1; ++i)
                set(i, loop_cert(n, i, {}, sparse(n, {{i, 1}}), sparse(n, {{i - 1, -2}, {i, 2}}),
                                 cat({up(i, n), down(n - 1, i), down(i - 1, 3), {2, 1}, up(3, i - 1)})));
            set(n, loop_cert(n, n, {}, sparse(n, {{n, 1}}), sparse(n, {{n - 1, -2}, {n, 2}}),
                             cat({down(n, 3), {2, 1}, up(3, n - 1)})));
            break;
        }
        case S::DtildeStar: {
            ParametricLoopCertificate w1 =
                loop_cert(5, 1, {1, 3, 2, 4, 5, 3}, dense({2, 1, -2, 1, 1}), dense({1, 1, -2, 1, 1}),
                          {1, 2, 4, 5, 3, 1, 2, 4, 5, 3});
            set(1, w1);
            for (int tip : {2, 4, 5}) set_relabeled(tip, w1, swap_perm(5, 1, tip));
            set(3, loop_cert(5, 3, {}, sparse(5, {{3, 1}}), dense({-1, -1, 2, -1, -1}), {3, 1, 2, 4, 5}));
            break;
        }
        case S::Dtilde: {
            NodeRelabeling mirror(static_cast<std::size_t>(n));
            mirror[0] = n - 1;
            mirror[1] = n;
            mirror[static_cast<std::size_t>(n - 2)] = 1;
            mirror[static_cast<std::size_t>(n - 1)] = 2;
            for (int j = 3; j <= n - 2; ++j) mirror[static_cast<std::size_t>(j - 1)] = n + 1 - j;
            const FiringSequence trav = cat({{1}, up(3, n - 2), {n - 1, n}, down(n - 2, 3), {2}});
            ParametricLoopCertificate w1 = loop_cert(n, 1, {}, sparse(n, {{1, 1}}),
                                                     sparse(n, {{1, 2}, {2, -2}}), times(trav, 2));
            set(1, w1);
            set_relabeled(2, w1, swap_perm(n, 1, 2));
            set_relabeled(n - 1, w1, mirror);
            set_relabeled(n, w1, compose(swap_perm(n, n - 1, n), mirror));
            ParametricLoopCertificate w3 =
                loop_cert(n, 3, {}, sparse(n, {{3, 1}}), sparse(n, {{1, -2}, {2, -2}, {3, 2}}),
                          cat({up(3, n - 2), {n - 1, n}, down(n - 2, 3), {2, 1}}));
            set(3, w3);
            set_relabeled(n - 2, w3, mirror);
            for (int i = 4; i <= n - 3; ++i)
                set(i, loop_cert(n, i, {}, sparse(n, {{i, 1}}),
                                 sparse(n, {{i - 1, -1}, {i, 2}, {i + 1, -1}}),
                                 cat({up(i, n - 2), {n - 1, n}, down(n - 2, i + 1), down(i - 1, 3),
                                      {2, 1}, up(3, i - 1)})));
            break;
        }
        case S::Etilde7: {
            const NodeRelabeling legs12 = compose(swap_perm(7, 1, 2), swap_perm(7, 3, 4));
            const NodeRelabeling legs13 = compose(swap_perm(7, 1, 7), swap_perm(7, 4, 6));
            ParametricLoopCertificate w1 =
                loop_cert(7, 1, {}, sparse(7, {{1, 1}}), sparse(7, {{1, 2}, {4, -1}}), seq_of(kEt7W1Cycle));
            set(1, w1);
            set_relabeled(2, w1, legs12);
            set_relabeled(7, w1, legs13);
            ParametricLoopCertificate w4 =
                loop_cert(7, 4, {}, sparse(7, {{4, 1}}), sparse(7, {{1, -4}, {4, 2}}), seq_of(kEt7W4Cycle));
            set(4, w4);
            set_relabeled(3, w4, legs12);
            set_relabeled(6, w4, legs13);
            set(5, loop_cert(7, 5, seq_of(kEt7W5Prefix), dense({0, 0, 0, 0, -1, 0, 6}),
                             dense({0, 0, 0, 0, 0, -3, 6}), seq_of(kEt7W5Cycle)));
            break;
        }
        case S::Etilde8: {
            const NodeRelabeling mirror =
                compose(swap_perm(8, 1, 8), compose(swap_perm(8, 3, 7), swap_perm(8, 4, 6)));
            ParametricLoopCertificate w1 =
                loop_cert(8, 1, {}, sparse(8, {{1, 1}}), sparse(8, {{1, 2}, {3, -1}}), seq_of(kEt8W1Cycle));
            set(1, w1);
            set_relabeled(8, w1, mirror);
            set(2, loop_cert(8, 2, seq_of(kEt8W2Prefix), dense({0, 3, 0, 0, -4, 4, 0, 0}),
                             dense({-2, 2, 0, 0, -2, 2, 0, 0}), seq_of(kEt8W2Cycle)));
            ParametricLoopCertificate w3 =
                loop_cert(8, 3, {}, sparse(8, {{3, 1}}), sparse(8, {{1, -4}, {3, 2}}), seq_of(kEt8W3Cycle));
            set(3, w3);
            set_relabeled(7, w3, mirror);
            ParametricLoopCertificate w4 =
                loop_cert(8, 4, seq_of(kEt8W4Prefix), dense({0, 0, -6, 5, 0, 0, 0, 0}),
                          dense({-3, 0, -3, 3, 0, 0, 0, 0}), seq_of(kEt8W4Cycle));
            set(4, w4);
            set_relabeled(6, w4, mirror);
            set(5, loop_cert(8, 5, seq_of(kEt8W5Prefix), dense({0, 0, 0, -8, 7, 0, 0, 0}),
                             dense({-4, 0, 0, -4, 4, 0, 0, 0}), seq_of(kEt8W5Cycle)));
            break;
        }
        case S::Etilde9: {
            const FiringSequence s = seq_of(kEt9S);
            set(1, loop_cert(9, 1, {}, sparse(9, {{1, 1}}), sparse(9, {{1, 2}, {3, -1}}),
                             seq_of(kEt9W1Cycle)));
            set(2, loop_cert(9, 2, {}, sparse(9, {{2, 1}}), dense({0, 3, 0, -1, 0, 0, -1, 0, 0}), s, 2));
            set(3, loop_cert(9, 3, seq_of(kEt9W3Prefix), dense({0, 2, 0, 0, 0, 0, 0, -1, 0}),
                             dense({0, 6, 0, -2, 0, 0, -2, 0, 0}), s, 3));
            set(4, loop_cert(9, 4, {}, sparse(9, {{4, 1}}), dense({0, -3, 0, 2, 0, 0, -1, 0, 0}),
                             seq_of(kEt9W4Cycle)));
            set(5, loop_cert(9, 5, seq_of(kEt9W5Prefix), dense({0, 3, 0, 0, 0, -1, 0, 0, 0}),
                             dense({0, 15, 0, -5, 0, 0, -5, 0, 0}), s, 6));
            set(6, loop_cert(9, 6, seq_of(kEt9W6Prefix), dense({0, 3, 0, 0, -1, 0, 0, 0, 0}),
                             dense({0, 12, 0, -4, 0, 0, -4, 0, 0}), s, 6));
            set(7, loop_cert(9, 7, seq_of(kEt9W7Prefix), dense({0, 3, 0, -1, 0, 0, 0, 0, 0}),
                             dense({0, 3, 0, -1, 0, 0, -1, 0, 0}), s, 2));
            set(8, loop_cert(9, 8, seq_of(kEt9W8Prefix), dense({0, 4, 0, -1, 0, -1, 0, 0, 0}),
                             dense({0, 6, 0, -2, 0, 0, -2, 0, 0}), s, 6));
            set(9, loop_cert(9, 9, {}, sparse(9, {{9, 1}}), sparse(9, {{8, -1}, {9, 2}}),
                             seq_of(kEt9W9Cycle)));
            break;
        }
        case S::FtildeA: {
            set(1, loop_cert(5, 1, {}, sparse(5, {{1, 1}}), dense({2, -1, 0, 0, 0}),
                             {1, 2, 3, 2, 4, 3, 2, 5, 4, 3, 2}));
            set(2, loop_cert(5, 2, {}, sparse(5, {{2, 1}}), dense({-2, 4, -2, -2, -2}),
                             times({2, 3, 4, 5, 1}, 3)));
            set(3, loop_cert(5, 3, {}, sparse(5, {{3, 1}}), dense({-1, -1, 3, -1, -1}),
                             times({3, 4, 5, 2, 1}, 2)));
            set(4, loop_cert(5, 4, {4, 3, 5, 2, 1, 4, 3, 2, 1, 4, 5, 3, 2, 1},
                             dense({-1, -1, 1, 3, -1}), dense({-1, -1, 1, 2, -1}),
                             times({4, 5, 3, 2, 1}, 3)));
            set(5, loop_cert(5, 5, {}, sparse(5, {{5, 1}}), dense({0, 0, 0, -1, 2}),
                             {5, 4, 3, 2, 3, 4, 1, 2, 3, 4, 2, 3, 1, 2, 3, 4}));
            break;
        }
        case S::FtildeB: {
            set(1, loop_cert(5, 1, {}, sparse(5, {{1, 1}}), dense({2, -1, 0, 0, 0}),
                             {1, 2, 3, 2, 4, 3, 2, 5, 4, 3, 2}));
            set(2, loop_cert(5, 2, {}, sparse(5, {{2, 1}}), dense({-2, 4, -1, -1, -1}),
                             times({2, 3, 4, 5, 1}, 3)));
            set(3, loop_cert(5, 3, {}, sparse(5, {{3, 1}}), dense({-2, -2, 3, -1, -1}),
                             times({3, 4, 5, 2, 1}, 2)));
            set(4, loop_cert(5, 4, {}, sparse(5, {{4, 1}}), dense({0, 0, 0, 2, -4}),
                             {4, 3, 2, 3, 4, 1, 2, 3, 4, 2, 3, 1, 2, 3, 4, 5}));
            set(5, loop_cert(5, 5, {}, sparse(5, {{5, 1}}), dense({0, 0, 0, -1, 2}),
                             {5, 4, 3, 2, 3, 4, 1, 2, 3, 4, 2, 3, 1, 2, 3, 4}));
            break;
        }
        default: throw UnknownFamily("family has no parametric loop certificates");
    }
    return certs;
}

struct RegionFamilyData {
    std::vector<LinearConstraint> region;
    FiringSequence cycle;
    std::vector<FiringSequence> prefixes;  // indexed by fundamental position
};

inline RegionFamilyData region_family(InadmissibleShape shape) {
    using S = InadmissibleShape;
    auto ge = [](std::initializer_list<int> c) {
        LinearConstraint out;
        for (int x : c) out.form.emplace_back(x);
        out.strict = false;
        return out;
    };
    auto gt = [](std::initializer_list<int> c) {
        LinearConstraint out;
        for (int x : c) out.form.emplace_back(x);
        out.strict = true;
        return out;
    };
    switch (shape) {
        case S::Gtilde1:
            return {{ge({-1, 0, 0}), ge({0, -1, 0}), gt({1, 2, 1})},
                    {3, 2, 1, 2, 1, 2},
                    {{1, 2, 1, 2, 1}, {2, 1, 2, 1, 2}, {}}};
        case S::Gtilde2:
            return {{ge({0, -1, 0}), ge({0, 0, -1}), gt({1, 3, 0}), gt({1, 1, 1})},
                    {1, 2, 1, 2, 1, 3, 2, 3},
                    {{}, {2, 3, 2}, {3, 2, 3}}};
        case S::Gtilde3:
            return {{ge({0, -1, 0}), ge({0, 0, -1}), gt({1, 3, 0}), gt({1, 1, 1})},
                    {1, 2, 1, 2, 1, 3, 2, 3, 2, 3},
                    {{}, {2, 3, 2, 3, 2}, {3, 2, 3, 2, 3}}};
        case S::Gtilde4:
            return {{ge({0, -1, 0}), ge({0, 0, -1}), gt({1, 3, 0}), gt({3, 6, 1})},
                    {1, 2, 1, 2, 1, 3, 2, 3, 2, 3},
                    {{}, {2, 3, 2, 3, 2}, {3, 2, 3, 2, 3}}};
        case S::Gtilde5:
            return {{ge({0, -1, 0}), ge({0, 0, -1}), gt({1, 3, 0}), gt({2, 4, 1})},
                    {1, 2, 1, 2, 1, 3, 2, 3},
                    {{}, {2, 3, 2}, {3, 2, 3}}};
        case S::Gtilde6:
            return {{ge({-1, 0, 0}), ge({0, -1, 0}), gt({3, 2, 1})},
                    {3, 2, 1, 2, 1, 2},
                    {{1, 2, 1, 2, 1}, {2, 1, 2, 1, 2}, {}}};
        case S::Sq1:
            return {{ge({0, 1, 0, 0}), ge({0, 0, 1, 0}), ge({0, 0, 0, -1}), gt({1, 0, 0, 1})},
                    {1, 2, 3, 4},
                    {{}, {2, 3, 4}, {3, 4, 1, 2, 3, 4}, {4, 1, 2, 3, 4}}};
        case S::Sq2:
            return {{gt({1, 0, 0, 0}), ge({0, 1, 0, 0}), ge({0, 0, 1, 0}), ge({0, 0, 0, -1}),
                     gt({3, 1, 1, 2})},
                    {1, 2, 3, 4},
                    {{}, {2, 3, 4}, {3, 4}, {4}}};
        case S::Sq3:
            return {{gt({1, 0, 0, 0}), ge({0, 1, 0, 0}), ge({0, 0, 1, 0}), ge({0, 0, 0, -1}),
                     gt({3, 1, 1, 1})},
                    {1, 2, 3, 4},
                    {{}, {2, 3, 4}, {3, 4}, {4}}};
        case S::Pent1:
            return {{ge({0, 1, 0, 0, 0}), ge({0, 0, 1, 0, 0}), ge({0, 0, 0, 1, 0}),
                     ge({0, 0, 0, 0, -1}), gt({1, 0, 0, 0, 1})},
                    {1, 2, 3, 4, 5},
                    {{}, {2, 3, 4, 5}, {3, 4, 5, 1, 2, 3, 4, 5}, {4, 5, 1, 2, 3, 4, 5}, {5, 1, 2, 3, 4, 5}}};
        default: throw UnknownFamily("family has no invariant-region certificates");
    }
}

}  // namespace detail

inline bool has_region_certificates(InadmissibleShape shape) {
    using S = InadmissibleShape;
    switch (shape) {
        case S::Gtilde1: case S::Gtilde2: case S::Gtilde3: case S::Gtilde4:
        case S::Gtilde5: case S::Gtilde6: case S::Sq1: case S::Sq2: case S::Sq3:
        case S::Pent1: return true;
        default: return false;
    }
}

inline bool has_triangle_certificates(InadmissibleShape shape) {
    using S = InadmissibleShape;
    return shape == S::Tri1 || shape == S::Tri2 || shape == S::Tri3;
}

// The catalog entry for one fundamental position of one inadmissible family.
inline DivergenceCertificate certificate_catalog(const InadmissibleFamilyId& id, int omega) {
    validate_family(id);
    const int n = family_size(id);
    if (omega < 1 || omega > n) throw IndexError("fundamental index out of range");
    if (has_triangle_certificates(id.shape)) {
        const int v = id.shape == InadmissibleShape::Tri1 ? 1
                      : id.shape == InadmissibleShape::Tri2 ? 2 : 3;
        return build_triangle_certificate(v, id.p1, id.q1, id.p2, id.q2);
    }
    if (has_region_certificates(id.shape)) {
        const GcmGraph g = build_inadmissible(id);
        detail::RegionFamilyData data = detail::region_family(id.shape);
        return build_region_certificate(g, std::move(data.region),
                                        fundamental_position(g, omega),
                                        std::move(data.prefixes[static_cast<std::size_t>(omega - 1)]),
                                        std::move(data.cycle));
    }
    return detail::loop_family(id)[static_cast<std::size_t>(omega - 1)];
}

// ---------------------------------------------------------------------------
// Whole-family verification: a family instance passes only when every
// fundamental position carries a verified certificate.

struct OmegaReport {
    int omega = 0;
    ProofReport report;
};

struct FamilyReport {
    InadmissibleFamilyId id;
    std::vector<OmegaReport> entries;
    bool all_ok = false;

    int verified_count() const {
        int c = 0;
        for (const auto& e : entries) c += e.report.ok ? 1 : 0;
        return c;
    }
};

inline ProofReport verify_certificate(const GcmGraph& g, const InadmissibleFamilyId& id, int omega,
                                      const DivergenceCertificate& cert, int samples = 32,
                                      std::uint64_t seed = 2024) {
    if (const auto* loop = std::get_if<ParametricLoopCertificate>(&cert))
        return verify_parametric(g, *loop);
    if (const auto* region = std::get_if<InvariantRegionCertificate>(&cert))
        return verify_invariant_region(g, *region);
    const auto& tri = std::get<TrianglePotentialCertificate>(cert);
    // Region entry for the requested fundamental position, then the sampled
    // closure check.
    Position start = fundamental_position(g, omega);
    FiringSequence prefix;
    if (omega == 3) prefix = {3};
    Position landing = start;
    for (int node : prefix) {
        if (landing.at(node) <= 0)
            return ProofReport::failed("triangle-potential", "PrefixIllegal");
        landing = fire(g, landing, node);
    }
    if (!triangle_region_member(tri, landing))
        return ProofReport::failed("triangle-potential", "RegionEntryFailed(omega=" + std::to_string(omega) + ")");
    if (omega == 3 && triangle_potential(tri, landing) != tri.growth)
        return ProofReport::failed("triangle-potential", "PotentialMismatchAtEntry");
    ProofReport report = verify_triangle_certificate(g, tri, samples, seed);
    report.prefix = prefix;
    report.landing = landing;
    return report;
}

inline FamilyReport verify_all(const InadmissibleFamilyId& id, int samples = 32,
                               std::uint64_t seed = 2024) {
    validate_family(id);
    const GcmGraph g = build_inadmissible(id);
    FamilyReport out;
    out.id = id;
    out.all_ok = true;
    for (int omega = 1; omega <= g.size(); ++omega) {
        DivergenceCertificate cert = certificate_catalog(id, omega);
        ProofReport r = verify_certificate(g, id, omega, cert, samples, seed);
        out.all_ok = out.all_ok && r.ok;
        out.entries.push_back({omega, std::move(r)});
    }
    return out;
}

}  // namespace ngame
