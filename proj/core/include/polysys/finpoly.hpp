#pragma once
// Finite polynomial functors in one variable, their morphisms, and the
// monoidal closed structure: composition product, parallel product,
// internal hom, evaluation and currying.
//
// A polynomial is stored in canonical form as a finite set of positions,
// each carrying a finite set of directions. A morphism is a forward map on
// positions plus, per source position, a backward map on directions.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "polysys/finset.hpp"
#include "polysys/indexing.hpp"

namespace polysys {

class FinPoly {
public:
    FinPoly() = default;

    FinPoly(FinSet positions, std::vector<FinSet> directions)
        : positions_(std::move(positions)), directions_(std::move(directions)) {
        if (static_cast<int>(directions_.size()) != positions_.size())
            throw Error("FinPoly: directions list length must equal position count");
    }

    // Convenience: positions given as direction counts only.
    static FinPoly fromCounts(const std::vector<int>& directionCounts,
                              std::vector<std::string> positionLabels = {});

    static FinPoly constant(int n) { return fromCounts(std::vector<int>(n, 0)); }
    static FinPoly zero() { return constant(0); }
    static FinPoly one() { return constant(1); }
    static FinPoly variable() { return fromCounts({1}); } // y

    int numPositions() const { return positions_.size(); }
    int dirCount(int position) const { return directions_.at(position).size(); }
    const FinSet& positions() const { return positions_; }
    const FinSet& directionsAt(int position) const { return directions_.at(position); }
    const std::string& positionLabel(int position) const { return positions_.label(position); }

    bool isMonomial() const; // all positions share one direction count
    std::uint64_t totalDirections() const;

    // Human-readable sum of terms, e.g. "y^2 + 2y + 1".
    std::string toString() const;

private:
    FinSet positions_;
    std::vector<FinSet> directions_;
};

// One position per element of A, each with direction set B: the monomial Ay^B.
FinPoly mkMonomial(const FinSet& a, const FinSet& b);

// Strict shape equality: same position count and direction counts in order.
bool sameShape(const FinPoly& p, const FinPoly& q);

// Isomorphism of canonical forms: positions sorted by direction count
// (labels are metadata and do not affect equality).
FinPoly canonicalForm(const FinPoly& p);
bool canonicallyEqual(const FinPoly& p, const FinPoly& q);

// Composition product p ◁ q. Positions are pairs (i, j) with j a function
// p[i] -> q(1), enumerated i-major and j lexicographic; the direction set at
// (i, j) is the disjoint union over d in p[i] of q[j(d)], flattened in
// summand order.
FinPoly composePoly(const FinPoly& p, const FinPoly& q);

// Parallel (Dirichlet) product p ⊗ q: positions p(1)×q(1) and directions
// p[i]×q[j], both flattened row-major.
FinPoly tensor(const FinPoly& p, const FinPoly& q);

// n-ary tensor with unit y; a single factor is returned unchanged.
FinPoly tensorAll(const std::vector<FinPoly>& factors);

class PolyMap {
public:
    PolyMap() = default;
    PolyMap(FinPoly source, FinPoly target, std::vector<int> fwd,
            std::vector<std::vector<int>> bwd);

    const FinPoly& source() const { return *source_; }
    const FinPoly& target() const { return *target_; }

    int fwd(int position) const { return fwd_.at(position); }
    // Source direction assigned to target direction e at source position i.
    int bwd(int position, int targetDirection) const {
        return bwd_.at(position).at(targetDirection);
    }

    const std::vector<int>& fwdTable() const { return fwd_; }
    const std::vector<std::vector<int>>& bwdTable() const { return bwd_; }

    friend bool operator==(const PolyMap& a, const PolyMap& b) {
        return sameShape(a.source(), b.source()) && sameShape(a.target(), b.target()) &&
               a.fwd_ == b.fwd_ && a.bwd_ == b.bwd_;
    }

private:
    std::shared_ptr<const FinPoly> source_;
    std::shared_ptr<const FinPoly> target_;
    std::vector<int> fwd_;
    std::vector<std::vector<int>> bwd_;
};

PolyMap identityMap(const FinPoly& p);

// Diagrammatic composition: first phi, then psi. Forward maps compose
// covariantly, backward maps contravariantly.
PolyMap composeMaps(const PolyMap& phi, const PolyMap& psi);

// phi ⊗ psi on the tensor products of sources and targets.
PolyMap tensorMap(const PolyMap& phi, const PolyMap& psi);
PolyMap tensorMapAll(const std::vector<PolyMap>& maps);

inline constexpr std::uint64_t kDefaultHomBound = 1'000'000;

// Number of maps p -> q, or nullopt when it exceeds `cap`.
std::optional<std::uint64_t> homCount(const FinPoly& p, const FinPoly& q,
                                      std::uint64_t cap = kDefaultHomBound);

// Exhaustive, duplicate-free enumeration in canonical order: lexicographic in
// (fwd as a tuple over source positions, then each bwd_i as a tuple over
// target directions). Throws HomTooLarge beyond `bound`.
std::vector<PolyMap> enumerateMaps(const FinPoly& p, const FinPoly& q,
                                   std::uint64_t bound = kDefaultHomBound);

// A canonical index into the enumeration of poly(p, q), plus the map itself.
struct HomWitness {
    std::uint64_t index = 0;
    PolyMap map;
};

// The enumerated hom-set poly(p, q) with index lookups in both directions.
class HomSet {
public:
    static HomSet enumerate(const FinPoly& p, const FinPoly& q,
                            std::uint64_t bound = kDefaultHomBound);

    const FinPoly& sourcePoly() const { return source_; }
    const FinPoly& targetPoly() const { return target_; }
    std::uint64_t size() const { return maps_.size(); }
    const std::vector<PolyMap>& maps() const { return maps_; }
    const PolyMap& at(std::uint64_t index) const { return maps_.at(index); }
    HomWitness witnessAt(std::uint64_t index) const { return {index, maps_.at(index)}; }

    // Canonical index of phi, computed arithmetically from its tables.
    std::uint64_t indexOf(const PolyMap& phi) const;

    // The internal hom [p, q]: one position per enumerated map, whose
    // direction set is the disjoint union over i in p(1) of q[phi_1(i)].
    FinPoly asPolynomial() const;

    // Flattened [p,q]-direction index of the pair (source position i,
    // target direction e) at hom position `index`.
    int flattenDirection(std::uint64_t index, int i, int e) const;
    std::pair<int, int> unflattenDirection(std::uint64_t index, int direction) const;

private:
    FinPoly source_;
    FinPoly target_;
    std::vector<PolyMap> maps_;
};

FinPoly internalHom(const FinPoly& p, const FinPoly& q,
                    std::uint64_t bound = kDefaultHomBound);

// poly(r ⊗ p, q) ≅ poly(r, [p, q]): transpose across the adjunction.
PolyMap curry(const PolyMap& f, const FinPoly& r, const FinPoly& p, const FinPoly& q,
              std::uint64_t bound = kDefaultHomBound);
PolyMap uncurry(const PolyMap& g, const FinPoly& r, const FinPoly& p, const FinPoly& q,
                std::uint64_t bound = kDefaultHomBound);

// Evaluation p ⊗ [p, q] -> q; at position (i, phi) it outputs phi_1(i).
PolyMap evalMap(const FinPoly& p, const FinPoly& q,
                std::uint64_t bound = kDefaultHomBound);

// [p1,q1] ⊗ [p2,q2] -> [p1⊗p2, q1⊗q2]; forward sends (phi, psi) to phi⊗psi.
PolyMap ihomTensor(const FinPoly& p1, const FinPoly& q1, const FinPoly& p2,
                   const FinPoly& q2, std::uint64_t bound = kDefaultHomBound);

// [p,q] ⊗ [q,r] -> [p,r]; forward sends (phi, psi) to phi;psi.
PolyMap ihomCompose(const FinPoly& p, const FinPoly& q, const FinPoly& r,
                    std::uint64_t bound = kDefaultHomBound);

} // namespace polysys
