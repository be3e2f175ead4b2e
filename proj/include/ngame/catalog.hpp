#pragma once

#include "ngame/core.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

namespace ngame {

struct RankError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadParameters : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotConnected : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// Finite-type Dynkin diagrams

enum class Family { A, B, C, D, E, F, G };

struct DynkinType {
    Family family;
    int rank;

    bool operator==(const DynkinType&) const = default;
    auto operator<=>(const DynkinType&) const = default;
};

inline bool valid_rank(DynkinType t) {
    switch (t.family) {
        case Family::A: return t.rank >= 1;
        case Family::B: return t.rank >= 2;
        case Family::C: return t.rank >= 3;
        case Family::D: return t.rank >= 4;
        case Family::E: return t.rank >= 6 && t.rank <= 8;
        case Family::F: return t.rank == 4;
        case Family::G: return t.rank == 2;
    }
    return false;
}

inline std::string to_string(DynkinType t) {
    static constexpr char names[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    return std::string(1, names[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

inline std::optional<DynkinType> parse_dynkin(std::string_view text) {
    if (text.size() < 2) return std::nullopt;
    Family f;
    switch (text[0]) {
        case 'A': f = Family::A; break;
        case 'B': f = Family::B; break;
        case 'C': f = Family::C; break;
        case 'D': f = Family::D; break;
        case 'E': f = Family::E; break;
        case 'F': f = Family::F; break;
        case 'G': f = Family::G; break;
        default: return std::nullopt;
    }
    int rank = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9') return std::nullopt;
        rank = rank * 10 + (text[i] - '0');
        if (rank > 1000) return std::nullopt;
    }
    DynkinType t{f, rank};
    if (!valid_rank(t)) return std::nullopt;
    return t;
}

// Node numbering: paths are numbered left to right; the branch node of the
// E family is node 2, attached to node 4 on the chain 1-3-4-5-...; the
// double edges of B/C/F/G sit so that the catalog's convergent plans are
// legal (see the plan generators).
inline GcmGraph build_finite(DynkinType t) {
    if (!valid_rank(t)) throw RankError("rank out of range for " + to_string(t));
    const int n = t.rank;
    std::vector<std::array<int, 4>> edges;
    auto path = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) edges.push_back({i, i + 1, 1, 1});
    };
    switch (t.family) {
        case Family::A:
            path(1, n);
            break;
        case Family::B:
            path(1, n - 1);
            if (n == 2)
                edges.push_back({1, 2, 1, 2});
            else
                edges.push_back({n - 1, n, 2, 1});
            break;
        case Family::C:
            path(1, n - 1);
            edges.push_back({n - 1, n, 1, 2});
            break;
        case Family::D:
            path(1, n - 2);
            edges.push_back({n - 2, n - 1, 1, 1});
            edges.push_back({n - 2, n, 1, 1});
            break;
        case Family::E: {
            const int chain[] = {1, 3, 4, 5, 6, 7, 8};
            for (int i = 0; i + 1 < n - 1; ++i) edges.push_back({chain[i], chain[i + 1], 1, 1});
            edges.push_back({2, 4, 1, 1});
            break;
        }
        case Family::F:
            edges = {{1, 2, 1, 1}, {2, 3, 2, 1}, {3, 4, 1, 1}};
            break;
        case Family::G:
            edges = {{1, 2, 1, 3}};
            break;
    }
    return GcmGraph(make_matrix(n, edges));
}

// ---------------------------------------------------------------------------
// Inadmissible families

enum class InadmissibleShape {
    Atilde,       // n-cycle, all amplitudes -1           (n >= 3)
    BtildeFork,   // two tips into a path, double far end (n >= 4)
    BtildePath,   // path, interior fires doubly into both ends (n >= 3)
    CtildeA,      // path, both end nodes fire doubly inward    (n >= 3)
    CtildeB,      // path, mixed ends                            (n >= 3)
    CtildeFork,   // two tips into a path, far end fires doubly inward (n >= 4)
    DtildeStar,   // four tips around a center (5 nodes)
    Dtilde,       // forks at both ends (n >= 6)
    Etilde7,      // star with three legs of length 2 (7 nodes)
    Etilde8,      // branched line, 8 nodes
    Etilde9,      // branched line, 9 nodes
    FtildeA,      // 5-path, node 2 fires doubly into node 3
    FtildeB,      // 5-path, node 3 fires doubly into node 2
    Gtilde1, Gtilde2, Gtilde3, Gtilde4, Gtilde5, Gtilde6,  // 3 nodes, one triple edge
    Sq1, Sq2, Sq3,  // 4-cycles with one or two double edges
    Pent1,          // 5-cycle with one double edge
    Tri1, Tri2, Tri3,  // parametric triangles
};

struct InadmissibleFamilyId {
    InadmissibleShape shape;
    int rank = 0;                       // node count for the parametrized path/fork families
    int p1 = 0, q1 = 0, p2 = 0, q2 = 0; // triangle amplitudes
};

inline bool is_ranked_shape(InadmissibleShape s) {
    switch (s) {
        case InadmissibleShape::Atilde:
        case InadmissibleShape::BtildeFork:
        case InadmissibleShape::BtildePath:
        case InadmissibleShape::CtildeA:
        case InadmissibleShape::CtildeB:
        case InadmissibleShape::CtildeFork:
        case InadmissibleShape::Dtilde: return true;
        default: return false;
    }
}

inline bool is_triangle_shape(InadmissibleShape s) {
    return s == InadmissibleShape::Tri1 || s == InadmissibleShape::Tri2 ||
           s == InadmissibleShape::Tri3;
}

inline bool operator==(const InadmissibleFamilyId& a, const InadmissibleFamilyId& b) {
    if (a.shape != b.shape) return false;
    if (is_ranked_shape(a.shape) && a.rank != b.rank) return false;
    if (is_triangle_shape(a.shape))
        return a.p1 == b.p1 && a.q1 == b.q1 && a.p2 == b.p2 && a.q2 == b.q2;
    return true;
}

inline InadmissibleFamilyId atilde(int n) { return {InadmissibleShape::Atilde, n}; }
inline InadmissibleFamilyId btilde_fork(int n) { return {InadmissibleShape::BtildeFork, n}; }
inline InadmissibleFamilyId btilde_path(int n) { return {InadmissibleShape::BtildePath, n}; }
inline InadmissibleFamilyId ctilde_a(int n) { return {InadmissibleShape::CtildeA, n}; }
inline InadmissibleFamilyId ctilde_b(int n) { return {InadmissibleShape::CtildeB, n}; }
inline InadmissibleFamilyId ctilde_fork(int n) { return {InadmissibleShape::CtildeFork, n}; }
inline InadmissibleFamilyId triangle(int variant, int p1, int q1, int p2, int q2) {
    InadmissibleShape s = variant == 1   ? InadmissibleShape::Tri1
                          : variant == 2 ? InadmissibleShape::Tri2
                                         : InadmissibleShape::Tri3;
    return {s, 3, p1, q1, p2, q2};
}

inline int family_size(const InadmissibleFamilyId& id) {
    using S = InadmissibleShape;
    switch (id.shape) {
        case S::Atilde:
        case S::BtildeFork:
        case S::BtildePath:
        case S::CtildeA:
        case S::CtildeB:
        case S::CtildeFork:
        case S::Dtilde: return id.rank;
        case S::DtildeStar: return 5;
        case S::Etilde7: return 7;
        case S::Etilde8: return 8;
        case S::Etilde9: return 9;
        case S::FtildeA:
        case S::FtildeB: return 5;
        case S::Gtilde1: case S::Gtilde2: case S::Gtilde3:
        case S::Gtilde4: case S::Gtilde5: case S::Gtilde6: return 3;
        case S::Sq1: case S::Sq2: case S::Sq3: return 4;
        case S::Pent1: return 5;
        case S::Tri1: case S::Tri2: case S::Tri3: return 3;
    }
    return 0;
}

inline void validate_family(const InadmissibleFamilyId& id) {
    using S = InadmissibleShape;
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw BadParameters(what);
    };
    switch (id.shape) {
        case S::Atilde: need(id.rank >= 3, "Atilde needs n >= 3"); break;
        case S::BtildeFork: need(id.rank >= 4, "Btilde-fork needs n >= 4"); break;
        case S::BtildePath: need(id.rank >= 3, "Btilde-path needs n >= 3"); break;
        case S::CtildeA: need(id.rank >= 3, "Ctilde-a needs n >= 3"); break;
        case S::CtildeB: need(id.rank >= 3, "Ctilde-b needs n >= 3"); break;
        case S::CtildeFork: need(id.rank >= 4, "Ctilde-fork needs n >= 4"); break;
        case S::Dtilde: need(id.rank >= 6, "Dtilde needs n >= 6"); break;
        case S::Tri1:
            need(id.p1 >= 1 && id.q1 >= 1 && id.p2 >= 1 && id.q2 >= 1, "triangle amplitudes must be positive");
            break;
        case S::Tri2:
            need(id.p1 >= 1 && id.q1 >= 1 && id.p2 >= 1 && id.q2 >= 1, "triangle amplitudes must be positive");
            need(id.p1 * id.q1 >= 2 && id.p2 * id.q2 >= 2, "Tri2 needs amplitude products >= 2");
            break;
        case S::Tri3:
            need(id.p1 >= 1 && id.q1 >= 1 && id.p2 >= 1 && id.q2 >= 1, "triangle amplitudes must be positive");
            need(id.p1 * id.q1 >= 3 && id.p2 * id.q2 >= 3, "Tri3 needs amplitude products >= 3");
            break;
        default: break;
    }
}

inline GcmGraph build_inadmissible(const InadmissibleFamilyId& id) {
    validate_family(id);
    using S = InadmissibleShape;
    const int n = family_size(id);
    std::vector<std::array<int, 4>> edges;
    auto path = [&](int lo, int hi) {
        for (int i = lo; i < hi; ++i) edges.push_back({i, i + 1, 1, 1});
    };
    auto three_node = [&](int a12, int a21, int a23, int a32) {
        edges = {{1, 2, a12, a21}, {2, 3, a23, a32}};
    };
    switch (id.shape) {
        case S::Atilde:
            path(1, n);
            edges.push_back({n, 1, 1, 1});
            break;
        case S::BtildeFork:
            edges = {{1, 3, 1, 1}, {2, 3, 1, 1}};
            path(3, n - 1);
            edges.push_back({n - 1, n, 2, 1});
            break;
        case S::BtildePath:
            path(2, n - 1);
            edges.push_back({1, 2, 1, 2});
            edges.push_back({n - 1, n, 2, 1});
            break;
        case S::CtildeA:
            path(2, n - 1);
            edges.push_back({1, 2, 2, 1});
            edges.push_back({n - 1, n, 1, 2});
            break;
        case S::CtildeB:
            path(2, n - 1);
            edges.push_back({1, 2, 1, 2});
            edges.push_back({n - 1, n, 1, 2});
            break;
        case S::CtildeFork:
            edges = {{1, 3, 1, 1}, {2, 3, 1, 1}};
            path(3, n - 1);
            edges.push_back({n - 1, n, 1, 2});
            break;
        case S::DtildeStar:
            edges = {{1, 3, 1, 1}, {2, 3, 1, 1}, {3, 4, 1, 1}, {3, 5, 1, 1}};
            break;
        case S::Dtilde:
            edges = {{1, 3, 1, 1}, {2, 3, 1, 1}};
            path(3, n - 2);
            edges.push_back({n - 2, n - 1, 1, 1});
            edges.push_back({n - 2, n, 1, 1});
            break;
        case S::Etilde7:
            edges = {{1, 4, 1, 1}, {4, 5, 1, 1}, {2, 3, 1, 1}, {3, 5, 1, 1}, {5, 6, 1, 1}, {6, 7, 1, 1}};
            break;
        case S::Etilde8:
            edges = {{1, 3, 1, 1}, {3, 4, 1, 1}, {4, 5, 1, 1}, {5, 6, 1, 1},
                     {6, 7, 1, 1}, {7, 8, 1, 1}, {2, 5, 1, 1}};
            break;
        case S::Etilde9:
            edges = {{1, 3, 1, 1}, {3, 4, 1, 1}, {4, 5, 1, 1}, {5, 6, 1, 1},
                     {6, 7, 1, 1}, {7, 8, 1, 1}, {8, 9, 1, 1}, {2, 4, 1, 1}};
            break;
        case S::FtildeA:
            path(1, 5);
            edges[1] = {2, 3, 2, 1};
            break;
        case S::FtildeB:
            path(1, 5);
            edges[1] = {2, 3, 1, 2};
            break;
        case S::Gtilde1: three_node(1, 3, 1, 1); break;
        case S::Gtilde2: three_node(1, 3, 1, 2); break;
        case S::Gtilde3: three_node(1, 3, 1, 3); break;
        case S::Gtilde4: three_node(1, 3, 3, 1); break;
        case S::Gtilde5: three_node(1, 3, 2, 1); break;
        case S::Gtilde6: three_node(3, 1, 1, 1); break;
        case S::Sq1:
            edges = {{1, 2, 2, 1}, {2, 3, 1, 1}, {3, 4, 1, 1}, {4, 1, 1, 1}};
            break;
        case S::Sq2:
            edges = {{1, 2, 2, 1}, {2, 3, 1, 1}, {3, 4, 1, 2}, {4, 1, 1, 1}};
            break;
        case S::Sq3:
            edges = {{1, 2, 2, 1}, {2, 3, 1, 1}, {3, 4, 2, 1}, {4, 1, 1, 1}};
            break;
        case S::Pent1:
            edges = {{1, 2, 2, 1}, {2, 3, 1, 1}, {3, 4, 1, 1}, {4, 5, 1, 1}, {5, 1, 1, 1}};
            break;
        case S::Tri1:
        case S::Tri2:
        case S::Tri3: {
            const int d = id.shape == S::Tri1 ? 1 : id.shape == S::Tri2 ? 2 : 3;
            // node 1 and node 2 are the cycle ends reached from node 3 with
            // gains q1 and q2; node 1 fires into node 2 with gain d.
            edges = {{3, 1, id.q1, id.p1}, {3, 2, id.q2, id.p2}, {1, 2, d, 1}};
            break;
        }
    }
    return GcmGraph(make_matrix(n, edges));
}

// ---------------------------------------------------------------------------
// Stable identifier strings

inline std::string to_string(const InadmissibleFamilyId& id) {
    using S = InadmissibleShape;
    auto ranked = [&](const char* stem) { return std::string(stem) + ":" + std::to_string(id.rank); };
    switch (id.shape) {
        case S::Atilde: return ranked("Atilde");
        case S::BtildeFork: return ranked("Btilde-fork");
        case S::BtildePath: return ranked("Btilde-path");
        case S::CtildeA: return ranked("Ctilde-a");
        case S::CtildeB: return ranked("Ctilde-b");
        case S::CtildeFork: return ranked("Ctilde-fork");
        case S::DtildeStar: return "Dtilde-star:5";
        case S::Dtilde: return ranked("Dtilde");
        case S::Etilde7: return "Etilde7node";
        case S::Etilde8: return "Etilde8node";
        case S::Etilde9: return "Etilde9node";
        case S::FtildeA: return "Ftilde-a:5";
        case S::FtildeB: return "Ftilde-b:5";
        case S::Gtilde1: return "Gtilde1";
        case S::Gtilde2: return "Gtilde2";
        case S::Gtilde3: return "Gtilde3";
        case S::Gtilde4: return "Gtilde4";
        case S::Gtilde5: return "Gtilde5";
        case S::Gtilde6: return "Gtilde6";
        case S::Sq1: return "Sq1";
        case S::Sq2: return "Sq2";
        case S::Sq3: return "Sq3";
        case S::Pent1: return "Pent1";
        case S::Tri1:
        case S::Tri2:
        case S::Tri3: {
            const int v = id.shape == S::Tri1 ? 1 : id.shape == S::Tri2 ? 2 : 3;
            std::ostringstream out;
            out << "Tri" << v << ":p1=" << id.p1 << ",q1=" << id.q1
                << ",p2=" << id.p2 << ",q2=" << id.q2;
            return out.str();
        }
    }
    return "?";
}

inline std::optional<InadmissibleFamilyId> parse_inadmissible(std::string_view text) {
    using S = InadmissibleShape;
    auto ranked = [&](std::string_view stem, S shape, int min_rank) -> std::optional<InadmissibleFamilyId> {
        if (text.substr(0, stem.size()) != stem) return std::nullopt;
        std::string_view rest = text.substr(stem.size());
        if (rest.empty() || rest[0] != ':') return std::nullopt;
        rest.remove_prefix(1);
        int rank = 0;
        if (rest.empty()) return std::nullopt;
        for (char c : rest) {
            if (c < '0' || c > '9') return std::nullopt;
            rank = rank * 10 + (c - '0');
            if (rank > 1000) return std::nullopt;
        }
        if (rank < min_rank) return std::nullopt;
        return InadmissibleFamilyId{shape, rank};
    };
    static const std::map<std::string, S, std::less<>> plain = {
        {"Etilde7node", S::Etilde7}, {"Etilde8node", S::Etilde8}, {"Etilde9node", S::Etilde9},
        {"Gtilde1", S::Gtilde1}, {"Gtilde2", S::Gtilde2}, {"Gtilde3", S::Gtilde3},
        {"Gtilde4", S::Gtilde4}, {"Gtilde5", S::Gtilde5}, {"Gtilde6", S::Gtilde6},
        {"Sq1", S::Sq1}, {"Sq2", S::Sq2}, {"Sq3", S::Sq3}, {"Pent1", S::Pent1},
    };
    if (auto it = plain.find(text); it != plain.end())
        return InadmissibleFamilyId{it->second, family_size({it->second})};
    if (auto id = ranked("Atilde", S::Atilde, 3)) return id;
    if (auto id = ranked("Btilde-fork", S::BtildeFork, 4)) return id;
    if (auto id = ranked("Btilde-path", S::BtildePath, 3)) return id;
    if (auto id = ranked("Ctilde-a", S::CtildeA, 3)) return id;
    if (auto id = ranked("Ctilde-b", S::CtildeB, 3)) return id;
    if (auto id = ranked("Ctilde-fork", S::CtildeFork, 4)) return id;
    if (auto id = ranked("Dtilde-star", S::DtildeStar, 5)) {
        if (id->rank != 5) return std::nullopt;
        return id;
    }
    if (auto id = ranked("Dtilde", S::Dtilde, 6)) return id;
    if (auto id = ranked("Ftilde-a", S::FtildeA, 5)) return id->rank == 5 ? id : std::nullopt;
    if (auto id = ranked("Ftilde-b", S::FtildeB, 5)) return id->rank == 5 ? id : std::nullopt;
    if (text.substr(0, 3) == "Tri" && text.size() > 4 && text[4] == ':') {
        const int v = text[3] - '0';
        if (v < 1 || v > 3) return std::nullopt;
        std::string rest(text.substr(5));
        int vals[4] = {0, 0, 0, 0};
        const char* keys[4] = {"p1=", "q1=", "p2=", "q2="};
        std::istringstream in(rest);
        std::string part;
        int got = 0;
        while (std::getline(in, part, ',')) {
            if (got >= 4 || part.substr(0, 3) != keys[got]) return std::nullopt;
            try {
                vals[got] = std::stoi(part.substr(3));
            } catch (...) {
                return std::nullopt;
            }
            ++got;
        }
        if (got != 4) return std::nullopt;
        InadmissibleFamilyId id = triangle(v, vals[0], vals[1], vals[2], vals[3]);
        try {
            validate_family(id);
        } catch (const BadParameters&) {
            return std::nullopt;
        }
        return id;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Labeled graph isomorphism (exhaustive with degree/amplitude pruning; the
// catalog graphs are tiny).

using NodeRelabeling = std::vector<int>;  // sigma[i-1] = image of node i

inline bool relabeling_respects(const GcmGraph& g1, const GcmGraph& g2, const NodeRelabeling& sigma) {
    if (static_cast<int>(sigma.size()) != g1.size() || g1.size() != g2.size()) return false;
    const int n = g1.size();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (g1.entry(i, j) != g2.entry(sigma[static_cast<std::size_t>(i - 1)],
                                           sigma[static_cast<std::size_t>(j - 1)]))
                return false;
    return true;
}

namespace detail {

inline std::vector<std::multiset<std::pair<int, int>>> amplitude_profiles(const GcmGraph& g) {
    std::vector<std::multiset<std::pair<int, int>>> out(static_cast<std::size_t>(g.size()) + 1);
    for (int i = 1; i <= g.size(); ++i)
        for (int j : g.neighbors(i)) out[static_cast<std::size_t>(i)].insert({g.entry(i, j), g.entry(j, i)});
    return out;
}

}  // namespace detail

// Lexicographically least sigma with M1(i,j) == M2(sigma(i),sigma(j)), if any.
inline std::optional<NodeRelabeling> graphs_isomorphic(const GcmGraph& g1, const GcmGraph& g2) {
    if (g1.size() != g2.size()) return std::nullopt;
    const int n = g1.size();
    const auto prof1 = detail::amplitude_profiles(g1);
    const auto prof2 = detail::amplitude_profiles(g2);
    NodeRelabeling sigma(static_cast<std::size_t>(n), 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);

    auto consistent = [&](int i, int image) {
        if (prof1[static_cast<std::size_t>(i)] != prof2[static_cast<std::size_t>(image)]) return false;
        for (int j = 1; j < i; ++j) {
            const int jm = sigma[static_cast<std::size_t>(j - 1)];
            if (g1.entry(i, j) != g2.entry(image, jm)) return false;
            if (g1.entry(j, i) != g2.entry(jm, image)) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, int i) -> bool {
        if (i > n) return true;
        for (int image = 1; image <= n; ++image) {
            if (used[static_cast<std::size_t>(image)] || !consistent(i, image)) continue;
            sigma[static_cast<std::size_t>(i - 1)] = image;
            used[static_cast<std::size_t>(image)] = 1;
            if (self(self, i + 1)) return true;
            used[static_cast<std::size_t>(image)] = 0;
        }
        return false;
    };
    if (!search(search, 1)) return std::nullopt;
    return sigma;
}

// Finds the unique finite-type diagram isomorphic to the given connected
// graph, together with the relabeling onto the catalog numbering.
inline std::optional<std::pair<DynkinType, NodeRelabeling>> classify_finite(const GcmGraph& g) {
    if (!g.connected()) throw NotConnected("classification needs a connected graph");
    const int n = g.size();
    std::vector<DynkinType> candidates;
    candidates.push_back({Family::A, n});
    if (n >= 2) candidates.push_back({Family::B, n});
    if (n >= 3) candidates.push_back({Family::C, n});
    if (n >= 4) candidates.push_back({Family::D, n});
    if (n >= 6 && n <= 8) candidates.push_back({Family::E, n});
    if (n == 4) candidates.push_back({Family::F, 4});
    if (n == 2) candidates.push_back({Family::G, 2});
    for (DynkinType t : candidates) {
        if (auto sigma = graphs_isomorphic(g, build_finite(t))) return std::make_pair(t, *sigma);
    }
    return std::nullopt;
}

}  // namespace ngame
