#pragma once

#include "ngame/core.hpp"

#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace ngame {

// Line-oriented interactive play.  Commands: a node index, "undo", "auto"
// (finish with greedy-min), "quit".  The transcript is deterministic for a
// scripted input stream.  Returns the process exit code.
inline int repl_session(const GcmGraph& g, Position pos, std::istream& in, std::ostream& out,
                        long auto_budget = 10000) {
    std::vector<Position> undo_stack;
    long fired = 0;

    auto show = [&] {
        out << "position: " << format_rational_list(pos.values()) << "\n";
        const std::vector<int> legal = legal_moves(g, pos);
        out << "legal:";
        for (int i : legal) out << " " << i;
        out << "\n";
    };
    auto finished = [&] {
        out << "terminal: " << format_rational_list(pos.values()) << " (" << fired << " firings)\n";
    };

    if (legal_moves(g, pos).empty()) {
        finished();
        return 0;
    }
    show();
    std::string word;
    while (out << "> ", in >> word) {
        if (word == "quit") return 0;
        if (word == "undo") {
            if (undo_stack.empty()) {
                out << "nothing to undo\n";
            } else {
                pos = undo_stack.back();
                undo_stack.pop_back();
                --fired;
                show();
            }
            continue;
        }
        if (word == "auto") {
            const GameTrace t = run_game(g, pos, Strategy::greedy_min(), auto_budget, false);
            fired += t.outcome.steps;
            if (t.outcome.kind == OutcomeKind::Converged) {
                pos = *t.outcome.terminal;
                finished();
                return 0;
            }
            out << "exhausted after " << fired << " firings\n";
            return 2;
        }
        int node = 0;
        try {
            std::size_t used = 0;
            node = std::stoi(word, &used);
            if (used != word.size()) node = 0;
        } catch (...) {
            node = 0;
        }
        if (node == 0) {
            out << "unknown command\n";
            continue;
        }
        if (node < 1 || node > g.size()) {
            out << "no such node\n";
            continue;
        }
        if (pos.at(node) <= 0) {
            out << "node " << node << " is not positive\n";
            continue;
        }
        undo_stack.push_back(pos);
        pos = fire(g, pos, node);
        ++fired;
        out << "fired " << node << "\n";
        if (legal_moves(g, pos).empty()) {
            finished();
            return 0;
        }
        show();
    }
    return 0;
}

}  // namespace ngame
