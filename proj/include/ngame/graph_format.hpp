#pragma once

#include "ngame/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <string>

namespace ngame {

// Text format for GCM graphs:
//
//   gcm 1
//   nodes <n>
//   edge <i> <j> <p> <q>     # M_ij = -p, M_ji = -q; p, q positive
//
// Blank lines and lines starting with '#' are ignored.

class GraphSyntaxError : public std::runtime_error {
  public:
    GraphSyntaxError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

inline GcmGraph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    int n = -1;
    std::vector<std::array<int, 4>> edges;
    std::vector<std::vector<bool>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') continue;
        if (!saw_header) {
            int version = 0;
            if (word != "gcm" || !(ls >> version) || version != 1)
                throw GraphSyntaxError(lineno, "expected header 'gcm 1'");
            saw_header = true;
            continue;
        }
        if (word == "nodes") {
            if (n != -1) throw GraphSyntaxError(lineno, "duplicate 'nodes' line");
            if (!(ls >> n) || n < 1) throw GraphSyntaxError(lineno, "node count must be positive");
            seen.assign(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
            continue;
        }
        if (word == "edge") {
            if (n == -1) throw GraphSyntaxError(lineno, "'edge' before 'nodes'");
            int i, j, p, q;
            if (!(ls >> i >> j >> p >> q)) throw GraphSyntaxError(lineno, "expected 'edge i j p q'");
            if (i < 1 || i > n || j < 1 || j > n) throw GraphSyntaxError(lineno, "node index out of range");
            if (i == j) throw GraphSyntaxError(lineno, "self loops are not allowed");
            if (p < 1 || q < 1) throw GraphSyntaxError(lineno, "amplitudes must be positive");
            if (seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                throw GraphSyntaxError(lineno, "duplicate edge");
            seen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
            seen[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
            edges.push_back({i, j, p, q});
            continue;
        }
        std::string extra;
        if (ls >> extra) { /* fallthrough to error below */ }
        throw GraphSyntaxError(lineno, "unknown directive '" + word + "'");
    }
    if (!saw_header) throw GraphSyntaxError(lineno ? lineno : 1, "missing 'gcm 1' header");
    if (n == -1) throw GraphSyntaxError(lineno ? lineno : 1, "missing 'nodes' line");
    return GcmGraph(make_matrix(n, edges));  // GcmValidationError wraps invalid matrices
}

inline std::string print_graph_text(const GcmGraph& g) {
    std::ostringstream out;
    out << "gcm 1\n";
    out << "nodes " << g.size() << "\n";
    for (auto [i, j] : g.edges())
        out << "edge " << i << " " << j << " " << -g.entry(i, j) << " " << -g.entry(j, i) << "\n";
    return out.str();
}

// Catalog shorthand: "@A3", "@Atilde:5", ... in place of a file.
inline std::optional<GcmGraph> lookup_catalog_graph(std::string_view name) {
    if (auto t = parse_dynkin(name)) return build_finite(*t);
    if (auto id = parse_inadmissible(name)) return build_inadmissible(*id);
    return std::nullopt;
}

}  // namespace ngame
