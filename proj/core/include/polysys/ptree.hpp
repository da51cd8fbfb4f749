#pragma once
// Depth-truncated behavior trees: node labels are interface positions and
// branching matches the direction set of the label.

#include <string>
#include <vector>

#include "polysys/finpoly.hpp"

namespace polysys {

struct PTree {
    int position = 0;
    int depth = 0; // remaining depth; leaves of a truncation carry 0
    std::vector<PTree> children;

    friend bool operator==(const PTree& a, const PTree& b) {
        return a.position == b.position && a.depth == b.depth && a.children == b.children;
    }
};

// The depth-d prefix (depth markers are reset to the clamped depth).
PTree truncateTree(const PTree& tree, int depth);

// Validates the branching invariant against an interface: every node at
// depth > 0 has exactly dirCount(position) children, each one level shallower.
bool wellFormedTree(const PTree& tree, const FinPoly& interface);

// Plain-text rendering, one node per line, indented by depth; uses position
// labels when the interface carries them.
std::string renderTreeText(const PTree& tree, const FinPoly& interface);

// Graphviz DOT rendering.
std::string renderTreeDot(const PTree& tree, const FinPoly& interface);

} // namespace polysys
