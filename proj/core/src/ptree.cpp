#include "polysys/ptree.hpp"

#include <sstream>

namespace polysys {

PTree truncateTree(const PTree& tree, int depth) {
    PTree out;
    out.position = tree.position;
    out.depth = depth;
    if (depth > 0) {
        out.children.reserve(tree.children.size());
        for (const PTree& child : tree.children)
            out.children.push_back(truncateTree(child, depth - 1));
    }
    return out;
}

bool wellFormedTree(const PTree& tree, const FinPoly& interface) {
    if (tree.position < 0 || tree.position >= interface.numPositions()) return false;
    if (tree.depth == 0) return tree.children.empty();
    if (static_cast<int>(tree.children.size()) != interface.dirCount(tree.position)) return false;
    for (const PTree& child : tree.children) {
        if (child.depth != tree.depth - 1) return false;
        if (!wellFormedTree(child, interface)) return false;
    }
    return true;
}

namespace {

std::string nodeName(const PTree& tree, const FinPoly& interface) {
    const std::string& label = interface.positionLabel(tree.position);
    return label.empty() ? std::to_string(tree.position) : label;
}

void renderText(const PTree& tree, const FinPoly& interface, int indent, std::ostringstream& out) {
    for (int k = 0; k < indent; ++k) out << "  ";
    out << nodeName(tree, interface) << "\n";
    for (const PTree& child : tree.children) renderText(child, interface, indent + 1, out);
}

int renderDot(const PTree& tree, const FinPoly& interface, int& next, std::ostringstream& out) {
    const int id = next++;
    out << "  n" << id << " [label=\"" << nodeName(tree, interface) << "\"];\n";
    for (std::size_t d = 0; d < tree.children.size(); ++d) {
        const int child = renderDot(tree.children[d], interface, next, out);
        out << "  n" << id << " -> n" << child << " [label=\"" << d << "\"];\n";
    }
    return id;
}

} // namespace

std::string renderTreeText(const PTree& tree, const FinPoly& interface) {
    std::ostringstream out;
    renderText(tree, interface, 0, out);
    return out.str();
}

std::string renderTreeDot(const PTree& tree, const FinPoly& interface) {
    std::ostringstream out;
    out << "digraph ptree {\n";
    int next = 0;
    renderDot(tree, interface, next, out);
    out << "}\n";
    return out.str();
}

} // namespace polysys
