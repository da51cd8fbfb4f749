#pragma once
// Behavioral analysis of machines: tree unfolding, bisimulation classes by
// partition refinement, the behavior graph with its opfib check, and
// safety propositions given by allowed positions and allowed successors.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polysys/coalg.hpp"
#include "polysys/ptree.hpp"

namespace polysys {

// The depth-truncated behavior tree of one state.
PTree unfold(const Coalgebra& c, int state, int depth);

// Partition of states by bisimilarity: classes[s] is the class id of s.
// Class ids are assigned in order of first occurrence, so class 0 contains
// state 0. Two states share a class iff their unfoldings agree at every depth.
struct BisimPartition {
    std::vector<int> classes;
    int numClasses = 0;
    int rounds = 0; // refinement rounds until stable
};

BisimPartition bisimClasses(const Coalgebra& c);

// One node per bisimulation class; arrows indexed by the direction set of the
// node's position; pi maps original states onto classes. Carries the source
// machine so the opfib property can be verified against it.
struct BehaviorGraph {
    Coalgebra machine;
    int numNodes = 0;
    std::vector<int> nodePosition;        // class -> interface position
    std::vector<std::vector<int>> arrows; // class -> per-direction target class
    std::vector<int> pi;                  // state -> class
};

BehaviorGraph behaviorGraph(const Coalgebra& c);

// True iff every node's out-degree equals its position's direction count and
// pi commutes with readout and transitions (per-direction bijectivity).
bool checkOpfib(const BehaviorGraph& g);

// The quotient machine on bisimulation classes; pi is a coalgebra morphism
// onto it.
Coalgebra quotientMachine(const Coalgebra& c, const BisimPartition& partition);

// A safety proposition: allowed positions Q and, per (position, direction),
// the set of allowed successor positions. Pairs absent from `allowed`
// default to all of Q.
struct Proposition {
    std::vector<int> q; // sorted, duplicate-free
    std::map<std::pair<int, int>, std::vector<int>> allowed;

    bool inQ(int position) const;
    bool allows(int position, int direction, int successorPosition) const;
};

// Validates Q and R against an interface (positions in range, directions in
// range, successors inside Q).
void validateProposition(const Proposition& prop, const FinPoly& interface);

struct PropositionResult {
    bool holds = true;
    // On failure: the BFS-shortest state path from the start to the first
    // violation (lowest direction index first), and the same path as
    // interface positions.
    std::vector<int> witnessStates;
    std::vector<int> witnessPositions;

    std::string witnessString(const FinPoly& interface) const;
};

PropositionResult checkProposition(const Coalgebra& c, int start, const Proposition& prop);

// Depth-bounded closure surrogate: every child of every member must be the
// truncation of some member. All trees must share one depth (else an error).
bool checkClosure(const std::vector<PTree>& trees);

} // namespace polysys
