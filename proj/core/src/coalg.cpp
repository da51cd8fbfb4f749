#include "polysys/coalg.hpp"

namespace polysys {

Coalgebra::Coalgebra(FinPoly interface, int numStates, std::vector<int> readout,
                     std::vector<std::vector<int>> update)
    : interface_(std::move(interface)),
      numStates_(numStates),
      readout_(std::move(readout)),
      update_(std::move(update)) {
    if (static_cast<int>(readout_.size()) != numStates_ ||
        static_cast<int>(update_.size()) != numStates_)
        throw Error("Coalgebra: readout/update must cover every state");
    for (int s = 0; s < numStates_; ++s) {
        const int pos = readout_[static_cast<std::size_t>(s)];
        if (pos < 0 || pos >= interface_.numPositions())
            throw Error("Coalgebra: readout out of range");
        const auto& row = update_[static_cast<std::size_t>(s)];
        if (static_cast<int>(row.size()) != interface_.dirCount(pos))
            throw Error("Coalgebra: update row must cover the readout position's directions");
        for (int next : row)
            if (next < 0 || next >= numStates_) throw Error("Coalgebra: update out of range");
    }
}

Coalgebra mkMoore(const FinSet& states, const FinSet& inputs, const FinSet& outputs,
                  const std::function<int(int)>& readout,
                  const std::function<int(int, int)>& update) {
    std::vector<int> r(static_cast<std::size_t>(states.size()));
    std::vector<std::vector<int>> u(r.size());
    for (int s = 0; s < states.size(); ++s) {
        r[static_cast<std::size_t>(s)] = readout(s);
        auto& row = u[static_cast<std::size_t>(s)];
        row.resize(static_cast<std::size_t>(inputs.size()));
        for (int a = 0; a < inputs.size(); ++a) row[static_cast<std::size_t>(a)] = update(s, a);
    }
    return Coalgebra(mkMonomial(outputs, inputs), states.size(), std::move(r), std::move(u));
}

InitializedMachine::InitializedMachine(Coalgebra m, int s) : machine(std::move(m)), start(s) {
    if (start < 0 || start >= machine.numStates())
        throw Error("InitializedMachine: start state out of range");
    if (!machine.interface().isMonomial())
        throw InterfaceMismatch("InitializedMachine: interface must be a monomial By^A");
}

PolyMap toLensForm(const Coalgebra& c) {
    const FinPoly source = mkMonomial(FinSet(c.numStates()), FinSet(c.numStates()));
    return PolyMap(source, c.interface(), c.readoutTable(), c.updateTable());
}

Coalgebra fromLensForm(const PolyMap& lens) {
    const FinPoly& source = lens.source();
    const int states = source.numPositions();
    for (int i = 0; i < states; ++i)
        if (source.dirCount(i) != states)
            throw InterfaceMismatch("fromLensForm: source must have the shape Sy^S");
    return Coalgebra(lens.target(), states, lens.fwdTable(), lens.bwdTable());
}

bool checkCoalgMorphism(const Coalgebra& c, const Coalgebra& cPrime,
                        const std::function<int(int)>& f) {
    if (!sameShape(c.interface(), cPrime.interface()))
        throw InterfaceMismatch("checkCoalgMorphism: machines must share an interface");
    for (int s = 0; s < c.numStates(); ++s) {
        const int fs = f(s);
        if (fs < 0 || fs >= cPrime.numStates()) return false;
        if (cPrime.readout(fs) != c.readout(s)) return false;
        for (int d = 0; d < c.interface().dirCount(c.readout(s)); ++d)
            if (f(c.update(s, d)) != cPrime.update(fs, d)) return false;
    }
    return true;
}

Coalgebra tensorCoalg(const Coalgebra& c, const Coalgebra& d) {
    const FinPoly iface = tensor(c.interface(), d.interface());
    const int tStates = d.numStates();
    const int states = c.numStates() * tStates;
    std::vector<int> readout(static_cast<std::size_t>(states));
    std::vector<std::vector<int>> update(readout.size());
    for (int s = 0; s < c.numStates(); ++s) {
        const int i = c.readout(s);
        const int iDirs = c.interface().dirCount(i);
        for (int t = 0; t < tStates; ++t) {
            const int j = d.readout(t);
            const int jDirs = d.interface().dirCount(j);
            const int st = s * tStates + t;
            readout[static_cast<std::size_t>(st)] = i * d.interface().numPositions() + j;
            auto& row = update[static_cast<std::size_t>(st)];
            row.resize(static_cast<std::size_t>(iDirs * jDirs));
            for (int e1 = 0; e1 < iDirs; ++e1)
                for (int e2 = 0; e2 < jDirs; ++e2)
                    row[static_cast<std::size_t>(e1 * jDirs + e2)] =
                        c.update(s, e1) * tStates + d.update(t, e2);
        }
    }
    return Coalgebra(iface, states, std::move(readout), std::move(update));
}

Coalgebra restrict(const Coalgebra& c, const PolyMap& phi) {
    if (!sameShape(phi.source(), c.interface()))
        throw InterfaceMismatch("restrict: map source must equal the machine interface");
    std::vector<int> readout(static_cast<std::size_t>(c.numStates()));
    std::vector<std::vector<int>> update(readout.size());
    for (int s = 0; s < c.numStates(); ++s) {
        const int i = c.readout(s);
        const int j = phi.fwd(i);
        readout[static_cast<std::size_t>(s)] = j;
        auto& row = update[static_cast<std::size_t>(s)];
        row.resize(static_cast<std::size_t>(phi.target().dirCount(j)));
        for (int e = 0; e < phi.target().dirCount(j); ++e)
            row[static_cast<std::size_t>(e)] = c.update(s, phi.bwd(i, e));
    }
    return Coalgebra(phi.target(), c.numStates(), std::move(readout), std::move(update));
}

namespace {

PTree unfoldState(const Coalgebra& c, int state, int depth) {
    PTree node;
    node.position = c.readout(state);
    node.depth = depth;
    if (depth > 0) {
        const int dirs = c.interface().dirCount(node.position);
        node.children.reserve(static_cast<std::size_t>(dirs));
        for (int d = 0; d < dirs; ++d)
            node.children.push_back(unfoldState(c, c.update(state, d), depth - 1));
    }
    return node;
}

} // namespace

std::vector<PTree> iterate(const Coalgebra& c, int depth) {
    std::vector<PTree> records;
    records.reserve(static_cast<std::size_t>(c.numStates()));
    for (int s = 0; s < c.numStates(); ++s) records.push_back(unfoldState(c, s, depth));
    return records;
}

std::vector<int> runStream(const InitializedMachine& m, const std::vector<int>& inputs) {
    const Coalgebra& c = m.machine;
    std::vector<int> outputs;
    outputs.reserve(inputs.size());
    int state = m.start;
    for (int a : inputs) {
        const int pos = c.readout(state);
        if (a < 0 || a >= c.interface().dirCount(pos))
            throw Error("runStream: input symbol out of range");
        outputs.push_back(pos);
        state = c.update(state, a);
    }
    return outputs;
}

} // namespace polysys
