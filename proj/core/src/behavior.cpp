#include "polysys/behavior.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace polysys {

PTree unfold(const Coalgebra& c, int state, int depth) {
    PTree node;
    node.position = c.readout(state);
    node.depth = depth;
    if (depth > 0) {
        const int dirs = c.interface().dirCount(node.position);
        node.children.reserve(static_cast<std::size_t>(dirs));
        for (int d = 0; d < dirs; ++d)
            node.children.push_back(unfold(c, c.update(state, d), depth - 1));
    }
    return node;
}

namespace {

// Renumbers signature ids by first occurrence so class 0 holds state 0.
std::vector<int> canonicalize(const std::vector<int>& raw, int& numClasses) {
    std::map<int, int> remap;
    std::vector<int> out(raw.size());
    for (std::size_t s = 0; s < raw.size(); ++s) {
        auto [it, inserted] = remap.try_emplace(raw[s], static_cast<int>(remap.size()));
        out[s] = it->second;
    }
    numClasses = static_cast<int>(remap.size());
    return out;
}

} // namespace

BisimPartition bisimClasses(const Coalgebra& c) {
    BisimPartition result;
    result.classes = canonicalize(c.readoutTable(), result.numClasses);
    result.rounds = 0;
    for (;;) {
        // Signature: readout position plus the class of every successor.
        std::map<std::vector<int>, int> signatureIds;
        std::vector<int> raw(static_cast<std::size_t>(c.numStates()));
        for (int s = 0; s < c.numStates(); ++s) {
            std::vector<int> sig{c.readout(s)};
            for (int d = 0; d < c.interface().dirCount(c.readout(s)); ++d)
                sig.push_back(result.classes[static_cast<std::size_t>(c.update(s, d))]);
            auto [it, inserted] =
                signatureIds.try_emplace(std::move(sig), static_cast<int>(signatureIds.size()));
            raw[static_cast<std::size_t>(s)] = it->second;
        }
        int refinedCount = 0;
        std::vector<int> refined = canonicalize(raw, refinedCount);
        result.rounds += 1;
        if (refined == result.classes) break;
        result.classes = std::move(refined);
        result.numClasses = refinedCount;
    }
    return result;
}

BehaviorGraph behaviorGraph(const Coalgebra& c) {
    const BisimPartition partition = bisimClasses(c);
    BehaviorGraph g;
    g.machine = c;
    g.numNodes = partition.numClasses;
    g.pi = partition.classes;
    g.nodePosition.assign(static_cast<std::size_t>(g.numNodes), -1);
    g.arrows.assign(static_cast<std::size_t>(g.numNodes), {});
    for (int s = 0; s < c.numStates(); ++s) {
        const int cls = g.pi[static_cast<std::size_t>(s)];
        if (g.nodePosition[static_cast<std::size_t>(cls)] >= 0) continue; // representative seen
        g.nodePosition[static_cast<std::size_t>(cls)] = c.readout(s);
        auto& out = g.arrows[static_cast<std::size_t>(cls)];
        const int dirs = c.interface().dirCount(c.readout(s));
        out.resize(static_cast<std::size_t>(dirs));
        for (int d = 0; d < dirs; ++d)
            out[static_cast<std::size_t>(d)] = g.pi[static_cast<std::size_t>(c.update(s, d))];
    }
    return g;
}

bool checkOpfib(const BehaviorGraph& g) {
    const Coalgebra& c = g.machine;
    for (int node = 0; node < g.numNodes; ++node) {
        const int pos = g.nodePosition.at(static_cast<std::size_t>(node));
        if (pos < 0 || pos >= c.interface().numPositions()) return false;
        if (static_cast<int>(g.arrows.at(static_cast<std::size_t>(node)).size()) !=
            c.interface().dirCount(pos))
            return false;
    }
    if (static_cast<int>(g.pi.size()) != c.numStates()) return false;
    for (int s = 0; s < c.numStates(); ++s) {
        const int cls = g.pi[static_cast<std::size_t>(s)];
        if (cls < 0 || cls >= g.numNodes) return false;
        if (g.nodePosition[static_cast<std::size_t>(cls)] != c.readout(s)) return false;
        for (int d = 0; d < c.interface().dirCount(c.readout(s)); ++d)
            if (g.arrows[static_cast<std::size_t>(cls)][static_cast<std::size_t>(d)] !=
                g.pi[static_cast<std::size_t>(c.update(s, d))])
                return false;
    }
    return true;
}

Coalgebra quotientMachine(const Coalgebra& c, const BisimPartition& partition) {
    std::vector<int> readout(static_cast<std::size_t>(partition.numClasses), -1);
    std::vector<std::vector<int>> update(readout.size());
    for (int s = 0; s < c.numStates(); ++s) {
        const int cls = partition.classes.at(static_cast<std::size_t>(s));
        if (readout[static_cast<std::size_t>(cls)] >= 0) continue;
        readout[static_cast<std::size_t>(cls)] = c.readout(s);
        auto& row = update[static_cast<std::size_t>(cls)];
        const int dirs = c.interface().dirCount(c.readout(s));
        row.resize(static_cast<std::size_t>(dirs));
        for (int d = 0; d < dirs; ++d)
            row[static_cast<std::size_t>(d)] =
                partition.classes.at(static_cast<std::size_t>(c.update(s, d)));
    }
    return Coalgebra(c.interface(), partition.numClasses, std::move(readout), std::move(update));
}

bool Proposition::inQ(int position) const {
    return std::binary_search(q.begin(), q.end(), position);
}

bool Proposition::allows(int position, int direction, int successorPosition) const {
    const auto it = allowed.find({position, direction});
    if (it == allowed.end()) return inQ(successorPosition); // default: all of Q
    return std::binary_search(it->second.begin(), it->second.end(), successorPosition);
}

void validateProposition(const Proposition& prop, const FinPoly& interface) {
    for (std::size_t k = 0; k < prop.q.size(); ++k) {
        if (prop.q[k] < 0 || prop.q[k] >= interface.numPositions())
            throw Error("proposition: Q position out of range");
        if (k > 0 && prop.q[k] <= prop.q[k - 1])
            throw Error("proposition: Q must be sorted and duplicate-free");
    }
    for (const auto& [key, successors] : prop.allowed) {
        const auto& [pos, dir] = key;
        if (!prop.inQ(pos)) throw Error("proposition: R key position must lie in Q");
        if (dir < 0 || dir >= interface.dirCount(pos))
            throw Error("proposition: R key direction out of range");
        for (int successor : successors)
            if (!prop.inQ(successor)) throw Error("proposition: R successors must lie in Q");
    }
}

std::string PropositionResult::witnessString(const FinPoly& interface) const {
    std::ostringstream out;
    for (std::size_t k = 0; k < witnessPositions.size(); ++k) {
        if (k > 0) out << "->";
        const std::string& label = interface.positionLabel(witnessPositions[k]);
        if (label.empty())
            out << witnessPositions[k];
        else
            out << label;
    }
    return out.str();
}

namespace {

PropositionResult witnessFrom(const Coalgebra& c, const std::vector<int>& parent,
                              const std::vector<int>& parentState, int last) {
    PropositionResult result;
    result.holds = false;
    std::vector<int> path{last};
    int cursor = last;
    while (parentState[static_cast<std::size_t>(cursor)] >= 0) {
        cursor = parentState[static_cast<std::size_t>(cursor)];
        path.push_back(cursor);
    }
    (void)parent;
    std::reverse(path.begin(), path.end());
    result.witnessStates = path;
    for (int s : path) result.witnessPositions.push_back(c.readout(s));
    return result;
}

} // namespace

PropositionResult checkProposition(const Coalgebra& c, int start, const Proposition& prop) {
    validateProposition(prop, c.interface());
    if (start < 0 || start >= c.numStates())
        throw Error("checkProposition: start state out of range");

    std::vector<int> parentState(static_cast<std::size_t>(c.numStates()), -1);
    std::vector<char> visited(static_cast<std::size_t>(c.numStates()), 0);

    if (!prop.inQ(c.readout(start))) {
        PropositionResult result;
        result.holds = false;
        result.witnessStates = {start};
        result.witnessPositions = {c.readout(start)};
        return result;
    }

    std::deque<int> queue{start};
    visited[static_cast<std::size_t>(start)] = 1;
    while (!queue.empty()) {
        const int s = queue.front();
        queue.pop_front();
        const int pos = c.readout(s);
        for (int d = 0; d < c.interface().dirCount(pos); ++d) {
            const int next = c.update(s, d);
            const int nextPos = c.readout(next);
            if (!prop.allows(pos, d, nextPos)) {
                if (!visited[static_cast<std::size_t>(next)])
                    parentState[static_cast<std::size_t>(next)] = s;
                else
                    parentState[static_cast<std::size_t>(next)] = s; // report via this edge
                return witnessFrom(c, {}, parentState, next);
            }
            if (!visited[static_cast<std::size_t>(next)]) {
                visited[static_cast<std::size_t>(next)] = 1;
                parentState[static_cast<std::size_t>(next)] = s;
                queue.push_back(next);
            }
        }
    }
    return PropositionResult{};
}

bool checkClosure(const std::vector<PTree>& trees) {
    if (trees.empty()) return true;
    const int depth = trees.front().depth;
    for (const PTree& tree : trees)
        if (tree.depth != depth) throw Error("checkClosure: mixed depths");
    if (depth == 0) return true;

    std::vector<PTree> truncations;
    truncations.reserve(trees.size());
    for (const PTree& tree : trees) truncations.push_back(truncateTree(tree, depth - 1));

    for (const PTree& tree : trees)
        for (const PTree& child : tree.children) {
            const bool member =
                std::any_of(truncations.begin(), truncations.end(),
                            [&](const PTree& t) { return t == child; });
            if (!member) return false;
        }
    return true;
}

} // namespace polysys
