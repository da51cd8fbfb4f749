#include "polysys/finpoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace polysys {

FinPoly FinPoly::fromCounts(const std::vector<int>& directionCounts,
                            std::vector<std::string> positionLabels) {
    std::vector<FinSet> dirs;
    dirs.reserve(directionCounts.size());
    for (int c : directionCounts) dirs.emplace_back(c);
    FinSet positions(static_cast<int>(directionCounts.size()), std::move(positionLabels));
    return FinPoly(std::move(positions), std::move(dirs));
}

bool FinPoly::isMonomial() const {
    for (int i = 1; i < numPositions(); ++i)
        if (dirCount(i) != dirCount(0)) return false;
    return true;
}

std::uint64_t FinPoly::totalDirections() const {
    std::uint64_t total = 0;
    for (int i = 0; i < numPositions(); ++i) total += static_cast<std::uint64_t>(dirCount(i));
    return total;
}

std::string FinPoly::toString() const {
    if (numPositions() == 0) return "0";
    std::map<int, int, std::greater<>> byCount; // direction count -> multiplicity
    for (int i = 0; i < numPositions(); ++i) byCount[dirCount(i)]++;
    std::ostringstream out;
    bool first = true;
    for (const auto& [power, coeff] : byCount) {
        if (!first) out << " + ";
        first = false;
        if (power == 0) {
            out << coeff;
        } else {
            if (coeff != 1) out << coeff;
            out << "y";
            if (power != 1) out << "^" << power;
        }
    }
    return out.str();
}

FinPoly mkMonomial(const FinSet& a, const FinSet& b) {
    return FinPoly(a, std::vector<FinSet>(static_cast<std::size_t>(a.size()), b));
}

bool sameShape(const FinPoly& p, const FinPoly& q) {
    if (p.numPositions() != q.numPositions()) return false;
    for (int i = 0; i < p.numPositions(); ++i)
        if (p.dirCount(i) != q.dirCount(i)) return false;
    return true;
}

FinPoly canonicalForm(const FinPoly& p) {
    std::vector<int> order(static_cast<std::size_t>(p.numPositions()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (p.dirCount(a) != p.dirCount(b)) return p.dirCount(a) > p.dirCount(b);
        return p.positionLabel(a) < p.positionLabel(b);
    });
    std::vector<int> counts;
    std::vector<std::string> labels;
    bool hasLabels = p.positions().hasLabels();
    for (int i : order) {
        counts.push_back(p.dirCount(i));
        if (hasLabels) labels.push_back(p.positionLabel(i));
    }
    return FinPoly::fromCounts(counts, std::move(labels));
}

bool canonicallyEqual(const FinPoly& p, const FinPoly& q) {
    if (p.numPositions() != q.numPositions()) return false;
    std::vector<int> pc, qc;
    for (int i = 0; i < p.numPositions(); ++i) pc.push_back(p.dirCount(i));
    for (int i = 0; i < q.numPositions(); ++i) qc.push_back(q.dirCount(i));
    std::sort(pc.begin(), pc.end());
    std::sort(qc.begin(), qc.end());
    return pc == qc;
}

FinPoly composePoly(const FinPoly& p, const FinPoly& q) {
    std::vector<int> counts;
    for (int i = 0; i < p.numPositions(); ++i) {
        const int arity = p.dirCount(i);
        if (arity == 0) {
            counts.push_back(0); // the unique empty function into q(1)
            continue;
        }
        if (q.numPositions() == 0) continue; // no functions p[i] -> 0
        std::vector<int> radices(static_cast<std::size_t>(arity), q.numPositions());
        std::vector<int> j(static_cast<std::size_t>(arity), 0);
        do {
            int total = 0;
            for (int d = 0; d < arity; ++d) total += q.dirCount(j[static_cast<std::size_t>(d)]);
            counts.push_back(total);
        } while (nextTuple(radices, j));
    }
    return FinPoly::fromCounts(counts);
}

FinPoly tensor(const FinPoly& p, const FinPoly& q) {
    std::vector<int> counts;
    std::vector<std::string> labels;
    const bool labeled = p.positions().hasLabels() && q.positions().hasLabels();
    counts.reserve(static_cast<std::size_t>(p.numPositions()) *
                   static_cast<std::size_t>(q.numPositions()));
    for (int i = 0; i < p.numPositions(); ++i)
        for (int j = 0; j < q.numPositions(); ++j) {
            counts.push_back(p.dirCount(i) * q.dirCount(j));
            if (labeled) labels.push_back(p.positionLabel(i) + "," + q.positionLabel(j));
        }
    return FinPoly::fromCounts(counts, std::move(labels));
}

FinPoly tensorAll(const std::vector<FinPoly>& factors) {
    if (factors.empty()) return FinPoly::variable();
    FinPoly acc = factors.front();
    for (std::size_t k = 1; k < factors.size(); ++k) acc = tensor(acc, factors[k]);
    return acc;
}

PolyMap::PolyMap(FinPoly source, FinPoly target, std::vector<int> fwd,
                 std::vector<std::vector<int>> bwd)
    : source_(std::make_shared<const FinPoly>(std::move(source))),
      target_(std::make_shared<const FinPoly>(std::move(target))),
      fwd_(std::move(fwd)),
      bwd_(std::move(bwd)) {
    const FinPoly& p = *source_;
    const FinPoly& q = *target_;
    if (static_cast<int>(fwd_.size()) != p.numPositions() ||
        static_cast<int>(bwd_.size()) != p.numPositions())
        throw Error("PolyMap: fwd/bwd must cover every source position");
    for (int i = 0; i < p.numPositions(); ++i) {
        if (fwd_[static_cast<std::size_t>(i)] < 0 ||
            fwd_[static_cast<std::size_t>(i)] >= q.numPositions())
            throw Error("PolyMap: fwd out of range");
        const int j = fwd_[static_cast<std::size_t>(i)];
        const auto& row = bwd_[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != q.dirCount(j))
            throw Error("PolyMap: bwd row must cover the target's direction set");
        for (int e : row)
            if (e < 0 || e >= p.dirCount(i)) throw Error("PolyMap: bwd out of range");
    }
}

PolyMap identityMap(const FinPoly& p) {
    std::vector<int> fwd(static_cast<std::size_t>(p.numPositions()));
    std::iota(fwd.begin(), fwd.end(), 0);
    std::vector<std::vector<int>> bwd;
    bwd.reserve(fwd.size());
    for (int i = 0; i < p.numPositions(); ++i) {
        std::vector<int> row(static_cast<std::size_t>(p.dirCount(i)));
        std::iota(row.begin(), row.end(), 0);
        bwd.push_back(std::move(row));
    }
    return PolyMap(p, p, std::move(fwd), std::move(bwd));
}

PolyMap composeMaps(const PolyMap& phi, const PolyMap& psi) {
    if (!sameShape(phi.target(), psi.source()))
        throw InterfaceMismatch("composeMaps: target of first must equal source of second");
    const FinPoly& p = phi.source();
    const FinPoly& r = psi.target();
    std::vector<int> fwd(static_cast<std::size_t>(p.numPositions()));
    std::vector<std::vector<int>> bwd(fwd.size());
    for (int i = 0; i < p.numPositions(); ++i) {
        const int j = phi.fwd(i);
        const int k = psi.fwd(j);
        fwd[static_cast<std::size_t>(i)] = k;
        std::vector<int> row(static_cast<std::size_t>(r.dirCount(k)));
        for (int e = 0; e < r.dirCount(k); ++e)
            row[static_cast<std::size_t>(e)] = phi.bwd(i, psi.bwd(j, e));
        bwd[static_cast<std::size_t>(i)] = std::move(row);
    }
    return PolyMap(p, r, std::move(fwd), std::move(bwd));
}

PolyMap tensorMap(const PolyMap& phi, const PolyMap& psi) {
    const FinPoly source = tensor(phi.source(), psi.source());
    const FinPoly target = tensor(phi.target(), psi.target());
    const int n2 = psi.source().numPositions();
    const int m2 = psi.target().numPositions();
    std::vector<int> fwd(static_cast<std::size_t>(source.numPositions()));
    std::vector<std::vector<int>> bwd(fwd.size());
    for (int i1 = 0; i1 < phi.source().numPositions(); ++i1) {
        for (int i2 = 0; i2 < n2; ++i2) {
            const int pos = i1 * n2 + i2;
            const int j1 = phi.fwd(i1);
            const int j2 = psi.fwd(i2);
            fwd[static_cast<std::size_t>(pos)] = j1 * m2 + j2;
            const int e2count = psi.target().dirCount(j2);
            const int d2count = psi.source().dirCount(i2);
            std::vector<int> row(static_cast<std::size_t>(phi.target().dirCount(j1) * e2count));
            for (int e1 = 0; e1 < phi.target().dirCount(j1); ++e1)
                for (int e2 = 0; e2 < e2count; ++e2)
                    row[static_cast<std::size_t>(e1 * e2count + e2)] =
                        phi.bwd(i1, e1) * d2count + psi.bwd(i2, e2);
            bwd[static_cast<std::size_t>(pos)] = std::move(row);
        }
    }
    return PolyMap(source, target, std::move(fwd), std::move(bwd));
}

PolyMap tensorMapAll(const std::vector<PolyMap>& maps) {
    if (maps.empty()) return identityMap(FinPoly::variable());
    PolyMap acc = maps.front();
    for (std::size_t k = 1; k < maps.size(); ++k) acc = tensorMap(acc, maps[k]);
    return acc;
}

namespace {

// Number of backward components at source position i given fwd(i) = j:
// |p[i]|^|q[j]| with 0^0 = 1.
std::uint64_t bwdChoices(const FinPoly& p, const FinPoly& q, int i, int j) {
    return satPow(static_cast<std::uint64_t>(p.dirCount(i)),
                  static_cast<std::uint64_t>(q.dirCount(j)));
}

std::uint64_t perPositionChoices(const FinPoly& p, const FinPoly& q, int i) {
    std::uint64_t total = 0;
    for (int j = 0; j < q.numPositions(); ++j) {
        total += bwdChoices(p, q, i, j);
        if (total >= kSaturated) return kSaturated;
    }
    return total;
}

} // namespace

std::optional<std::uint64_t> homCount(const FinPoly& p, const FinPoly& q, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < p.numPositions(); ++i) {
        total = satMul(total, perPositionChoices(p, q, i));
        if (total > cap) return std::nullopt;
    }
    return total;
}

std::vector<PolyMap> enumerateMaps(const FinPoly& p, const FinPoly& q, std::uint64_t bound) {
    const auto count = homCount(p, q, bound);
    if (!count)
        throw HomTooLarge("hom-set too large: |poly(" + p.toString() + ", " + q.toString() +
                          ")| exceeds " + std::to_string(bound));

    std::vector<PolyMap> result;
    result.reserve(static_cast<std::size_t>(*count));

    const int n = p.numPositions();
    if (n == 0) {
        result.emplace_back(p, q, std::vector<int>{}, std::vector<std::vector<int>>{});
        return result;
    }
    if (q.numPositions() == 0) return result; // no forward maps

    std::vector<int> fwdRadices(static_cast<std::size_t>(n), q.numPositions());
    std::vector<int> fwd(static_cast<std::size_t>(n), 0);
    do {
        bool feasible = true;
        std::vector<int> digitRadices; // one radix per backward table entry
        for (int i = 0; i < n && feasible; ++i) {
            const int j = fwd[static_cast<std::size_t>(i)];
            if (p.dirCount(i) == 0 && q.dirCount(j) > 0) feasible = false;
            for (int e = 0; e < q.dirCount(j); ++e) digitRadices.push_back(p.dirCount(i));
        }
        if (!feasible) continue;

        std::vector<int> digits(digitRadices.size(), 0);
        do {
            std::vector<std::vector<int>> bwd(static_cast<std::size_t>(n));
            std::size_t cursor = 0;
            for (int i = 0; i < n; ++i) {
                const int j = fwd[static_cast<std::size_t>(i)];
                auto& row = bwd[static_cast<std::size_t>(i)];
                row.resize(static_cast<std::size_t>(q.dirCount(j)));
                for (int e = 0; e < q.dirCount(j); ++e) row[static_cast<std::size_t>(e)] = digits[cursor++];
            }
            result.emplace_back(p, q, fwd, std::move(bwd));
        } while (nextTuple(digitRadices, digits));
    } while (nextTuple(fwdRadices, fwd));

    return result;
}

HomSet HomSet::enumerate(const FinPoly& p, const FinPoly& q, std::uint64_t bound) {
    HomSet hs;
    hs.source_ = p;
    hs.target_ = q;
    hs.maps_ = enumerateMaps(p, q, bound);
    return hs;
}

std::uint64_t HomSet::indexOf(const PolyMap& phi) const {
    if (!sameShape(phi.source(), source_) || !sameShape(phi.target(), target_))
        throw InterfaceMismatch("HomSet::indexOf: map has a different source or target shape");
    const int n = source_.numPositions();

    // Completions with every position after t unconstrained.
    std::vector<std::uint64_t> suffix(static_cast<std::size_t>(n) + 1, 1);
    for (int t = n - 1; t >= 0; --t)
        suffix[static_cast<std::size_t>(t)] =
            suffix[static_cast<std::size_t>(t) + 1] * perPositionChoices(source_, target_, t);

    std::uint64_t index = 0;
    std::uint64_t prefix = 1; // backward choices for positions < t at their chosen targets
    for (int t = 0; t < n; ++t) {
        std::uint64_t smaller = 0;
        for (int w = 0; w < phi.fwd(t); ++w) smaller += bwdChoices(source_, target_, t, w);
        index += prefix * smaller * suffix[static_cast<std::size_t>(t) + 1];
        prefix *= bwdChoices(source_, target_, t, phi.fwd(t));
    }

    // Rank of the backward tables within the block sharing phi's forward map.
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        const int j = phi.fwd(i);
        for (int e = 0; e < target_.dirCount(j); ++e)
            rank = rank * static_cast<std::uint64_t>(source_.dirCount(i)) +
                   static_cast<std::uint64_t>(phi.bwd(i, e));
    }
    return index + rank;
}

FinPoly HomSet::asPolynomial() const {
    std::vector<int> counts;
    counts.reserve(maps_.size());
    for (const PolyMap& phi : maps_) {
        int total = 0;
        for (int i = 0; i < source_.numPositions(); ++i) total += target_.dirCount(phi.fwd(i));
        counts.push_back(total);
    }
    return FinPoly::fromCounts(counts);
}

int HomSet::flattenDirection(std::uint64_t index, int i, int e) const {
    const PolyMap& phi = maps_.at(index);
    int offset = 0;
    for (int k = 0; k < i; ++k) offset += target_.dirCount(phi.fwd(k));
    return offset + e;
}

std::pair<int, int> HomSet::unflattenDirection(std::uint64_t index, int direction) const {
    const PolyMap& phi = maps_.at(index);
    for (int i = 0; i < source_.numPositions(); ++i) {
        const int block = target_.dirCount(phi.fwd(i));
        if (direction < block) return {i, direction};
        direction -= block;
    }
    throw Error("HomSet::unflattenDirection: direction out of range");
}

FinPoly internalHom(const FinPoly& p, const FinPoly& q, std::uint64_t bound) {
    return HomSet::enumerate(p, q, bound).asPolynomial();
}

PolyMap curry(const PolyMap& f, const FinPoly& r, const FinPoly& p, const FinPoly& q,
              std::uint64_t bound) {
    if (!sameShape(f.source(), tensor(r, p)) || !sameShape(f.target(), q))
        throw InterfaceMismatch("curry: map must go from r⊗p to q");
    const HomSet hom = HomSet::enumerate(p, q, bound);
    const FinPoly ihom = hom.asPolynomial();
    const int np = p.numPositions();

    std::vector<int> gFwd(static_cast<std::size_t>(r.numPositions()));
    std::vector<std::vector<int>> gBwd(gFwd.size());
    for (int k = 0; k < r.numPositions(); ++k) {
        std::vector<int> fwd(static_cast<std::size_t>(np));
        std::vector<std::vector<int>> bwd(fwd.size());
        std::vector<int> rParts; // r[k]-component per flattened [p,q]-direction
        for (int i = 0; i < np; ++i) {
            const int j = f.fwd(k * np + i);
            fwd[static_cast<std::size_t>(i)] = j;
            std::vector<int> row(static_cast<std::size_t>(q.dirCount(j)));
            for (int e = 0; e < q.dirCount(j); ++e) {
                const int pair = f.bwd(k * np + i, e); // in r[k] × p[i], row-major
                row[static_cast<std::size_t>(e)] = pair % p.dirCount(i);
                rParts.push_back(pair / p.dirCount(i));
            }
            bwd[static_cast<std::size_t>(i)] = std::move(row);
        }
        const PolyMap component(p, q, std::move(fwd), std::move(bwd));
        gFwd[static_cast<std::size_t>(k)] = static_cast<int>(hom.indexOf(component));
        gBwd[static_cast<std::size_t>(k)] = std::move(rParts);
    }
    return PolyMap(r, ihom, std::move(gFwd), std::move(gBwd));
}

PolyMap uncurry(const PolyMap& g, const FinPoly& r, const FinPoly& p, const FinPoly& q,
                std::uint64_t bound) {
    const HomSet hom = HomSet::enumerate(p, q, bound);
    if (!sameShape(g.source(), r) || !sameShape(g.target(), hom.asPolynomial()))
        throw InterfaceMismatch("uncurry: map must go from r to [p,q]");
    const int np = p.numPositions();
    const FinPoly source = tensor(r, p);

    std::vector<int> fFwd(static_cast<std::size_t>(source.numPositions()));
    std::vector<std::vector<int>> fBwd(fFwd.size());
    for (int k = 0; k < r.numPositions(); ++k) {
        const auto w = static_cast<std::uint64_t>(g.fwd(k));
        const PolyMap& phi = hom.at(w);
        for (int i = 0; i < np; ++i) {
            const int pos = k * np + i;
            const int j = phi.fwd(i);
            fFwd[static_cast<std::size_t>(pos)] = j;
            std::vector<int> row(static_cast<std::size_t>(q.dirCount(j)));
            for (int e = 0; e < q.dirCount(j); ++e) {
                const int rIdx = g.bwd(k, hom.flattenDirection(w, i, e));
                row[static_cast<std::size_t>(e)] = rIdx * p.dirCount(i) + phi.bwd(i, e);
            }
            fBwd[static_cast<std::size_t>(pos)] = std::move(row);
        }
    }
    return PolyMap(source, q, std::move(fFwd), std::move(fBwd));
}

PolyMap evalMap(const FinPoly& p, const FinPoly& q, std::uint64_t bound) {
    const HomSet hom = HomSet::enumerate(p, q, bound);
    const FinPoly ihom = hom.asPolynomial();
    const FinPoly source = tensor(p, ihom);
    const auto homSize = static_cast<int>(hom.size());

    std::vector<int> fwd(static_cast<std::size_t>(source.numPositions()));
    std::vector<std::vector<int>> bwd(fwd.size());
    for (int i = 0; i < p.numPositions(); ++i) {
        for (int w = 0; w < homSize; ++w) {
            const int pos = i * homSize + w;
            const PolyMap& phi = hom.at(static_cast<std::uint64_t>(w));
            const int j = phi.fwd(i);
            fwd[static_cast<std::size_t>(pos)] = j;
            const int ihomDirs = ihom.dirCount(w);
            std::vector<int> row(static_cast<std::size_t>(q.dirCount(j)));
            for (int e = 0; e < q.dirCount(j); ++e)
                row[static_cast<std::size_t>(e)] =
                    phi.bwd(i, e) * ihomDirs +
                    hom.flattenDirection(static_cast<std::uint64_t>(w), i, e);
            bwd[static_cast<std::size_t>(pos)] = std::move(row);
        }
    }
    return PolyMap(source, q, std::move(fwd), std::move(bwd));
}

PolyMap ihomTensor(const FinPoly& p1, const FinPoly& q1, const FinPoly& p2, const FinPoly& q2,
                   std::uint64_t bound) {
    const HomSet hom1 = HomSet::enumerate(p1, q1, bound);
    const HomSet hom2 = HomSet::enumerate(p2, q2, bound);
    const HomSet homT = HomSet::enumerate(tensor(p1, p2), tensor(q1, q2), bound);
    const FinPoly ihom2 = hom2.asPolynomial();
    const FinPoly source = tensor(hom1.asPolynomial(), ihom2);
    const FinPoly target = homT.asPolynomial();
    const auto n2 = static_cast<int>(hom2.size());

    std::vector<int> fwd(static_cast<std::size_t>(source.numPositions()));
    std::vector<std::vector<int>> bwd(fwd.size());
    for (std::uint64_t w1 = 0; w1 < hom1.size(); ++w1) {
        const PolyMap& phi = hom1.at(w1);
        for (std::uint64_t w2 = 0; w2 < hom2.size(); ++w2) {
            const PolyMap& psi = hom2.at(w2);
            const int pos = static_cast<int>(w1) * n2 + static_cast<int>(w2);
            const std::uint64_t wt = homT.indexOf(tensorMap(phi, psi));
            fwd[static_cast<std::size_t>(pos)] = static_cast<int>(wt);
            const int dirs2 = ihom2.dirCount(static_cast<int>(w2));
            std::vector<int> row(static_cast<std::size_t>(target.dirCount(static_cast<int>(wt))));
            for (int d = 0; d < target.dirCount(static_cast<int>(wt)); ++d) {
                const auto [posT, e] = homT.unflattenDirection(wt, d);
                const int i2 = posT % p2.numPositions();
                const int i1 = posT / p2.numPositions();
                const int e2count = q2.dirCount(psi.fwd(i2));
                const int e1 = e / e2count;
                const int e2 = e % e2count;
                row[static_cast<std::size_t>(d)] =
                    hom1.flattenDirection(w1, i1, e1) * dirs2 +
                    hom2.flattenDirection(w2, i2, e2);
            }
            bwd[static_cast<std::size_t>(pos)] = std::move(row);
        }
    }
    return PolyMap(source, target, std::move(fwd), std::move(bwd));
}

PolyMap ihomCompose(const FinPoly& p, const FinPoly& q, const FinPoly& r, std::uint64_t bound) {
    const HomSet homPQ = HomSet::enumerate(p, q, bound);
    const HomSet homQR = HomSet::enumerate(q, r, bound);
    const HomSet homPR = HomSet::enumerate(p, r, bound);
    const FinPoly left = homPQ.asPolynomial();
    const FinPoly right = homQR.asPolynomial();
    const FinPoly source = tensor(left, right);
    const FinPoly target = homPR.asPolynomial();
    const auto n2 = static_cast<int>(homQR.size());

    std::vector<int> fwd(static_cast<std::size_t>(source.numPositions()));
    std::vector<std::vector<int>> bwd(fwd.size());
    for (std::uint64_t w1 = 0; w1 < homPQ.size(); ++w1) {
        const PolyMap& phi = homPQ.at(w1);
        for (std::uint64_t w2 = 0; w2 < homQR.size(); ++w2) {
            const PolyMap& chi = homQR.at(w2);
            const int pos = static_cast<int>(w1) * n2 + static_cast<int>(w2);
            const std::uint64_t wt = homPR.indexOf(composeMaps(phi, chi));
            fwd[static_cast<std::size_t>(pos)] = static_cast<int>(wt);
            const int dirs2 = right.dirCount(static_cast<int>(w2));
            std::vector<int> row(static_cast<std::size_t>(target.dirCount(static_cast<int>(wt))));
            for (int d = 0; d < target.dirCount(static_cast<int>(wt)); ++d) {
                const auto [i, eR] = homPR.unflattenDirection(wt, d);
                const int j = phi.fwd(i);
                const int eQ = chi.bwd(j, eR);
                row[static_cast<std::size_t>(d)] =
                    homPQ.flattenDirection(w1, i, eQ) * dirs2 +
                    homQR.flattenDirection(w2, j, eR);
            }
            bwd[static_cast<std::size_t>(pos)] = std::move(row);
        }
    }
    return PolyMap(source, target, std::move(fwd), std::move(bwd));
}

} // namespace polysys
