#pragma once
// Finite-state dynamical systems on a polynomial interface: generalized
// Moore machines given by a readout into positions and an update along
// directions. Machines are immutable after construction and every operation
// here is a pure function.

#include <functional>
#include <vector>

#include "polysys/finpoly.hpp"
#include "polysys/ptree.hpp"

namespace polysys {

class Coalgebra {
public:
    Coalgebra() = default;

    // update[s] lists the successor per direction of the readout position.
    Coalgebra(FinPoly interface, int numStates, std::vector<int> readout,
              std::vector<std::vector<int>> update);

    const FinPoly& interface() const { return interface_; }
    int numStates() const { return numStates_; }
    int readout(int state) const { return readout_.at(state); }
    int update(int state, int direction) const { return update_.at(state).at(direction); }
    const std::vector<int>& readoutTable() const { return readout_; }
    const std::vector<std::vector<int>>& updateTable() const { return update_; }

    friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
        return sameShape(a.interface_, b.interface_) && a.numStates_ == b.numStates_ &&
               a.readout_ == b.readout_ && a.update_ == b.update_;
    }

private:
    FinPoly interface_;
    int numStates_ = 0;
    std::vector<int> readout_;
    std::vector<std::vector<int>> update_;
};

// A Moore machine with readout S -> B and update S×A -> S, as a coalgebra on
// the monomial interface By^A.
Coalgebra mkMoore(const FinSet& states, const FinSet& inputs, const FinSet& outputs,
                  const std::function<int(int)>& readout,
                  const std::function<int(int, int)>& update);

struct InitializedMachine {
    Coalgebra machine; // monomial interface By^A
    int start = 0;

    InitializedMachine(Coalgebra m, int s);
};

// The identification of a machine with a lens Sy^S -> p (forward = readout,
// backward = update) and its inverse.
PolyMap toLensForm(const Coalgebra& c);
Coalgebra fromLensForm(const PolyMap& lens);

// Readout and update squares for a state map f between machines on the same
// interface.
bool checkCoalgMorphism(const Coalgebra& c, const Coalgebra& cPrime,
                        const std::function<int(int)>& f);

// Parallel product of machines: product states (row-major, left factor
// major), paired readouts, componentwise updates.
Coalgebra tensorCoalg(const Coalgebra& c, const Coalgebra& d);

// Interface change along phi: p -> p'.
Coalgebra restrict(const Coalgebra& c, const PolyMap& phi);

// Depth-n behavior records, one per state; depth 0 is the readout alone.
std::vector<PTree> iterate(const Coalgebra& c, int depth);

// Streams: b_n = r(s_n) is emitted before a_n is consumed; s_{n+1} = u(s_n, a_n).
// Requires a monomial interface; empty input gives empty output.
std::vector<int> runStream(const InitializedMachine& m, const std::vector<int>& inputs);

} // namespace polysys
