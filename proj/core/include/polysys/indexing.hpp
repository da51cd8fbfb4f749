#pragma once
// Mixed-radix index arithmetic: row-major flattening of tuples and
// lexicographic enumeration of tuples/functions between index ranges.
//
// Conventions used throughout the library:
//   - tuples flatten row-major (the leftmost component is most significant);
//   - disjoint unions flatten in summand order (offset of summand k is the
//     sum of the sizes of summands 0..k-1);
//   - tuple enumeration is lexicographic (last digit varies fastest).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polysys/errors.hpp"

namespace polysys {

// index = ((d0*r1 + d1)*r2 + d2)*...
inline int flattenTuple(std::span<const int> radices, std::span<const int> digits) {
    int index = 0;
    for (std::size_t k = 0; k < radices.size(); ++k) index = index * radices[k] + digits[k];
    return index;
}

inline std::vector<int> unflattenTuple(std::span<const int> radices, int index) {
    std::vector<int> digits(radices.size(), 0);
    for (std::size_t k = radices.size(); k-- > 0;) {
        digits[k] = radices[k] == 0 ? 0 : index % radices[k];
        index = radices[k] == 0 ? 0 : index / radices[k];
    }
    return digits;
}

// Lexicographically advances `digits` under per-digit radices.
// Returns false when the odometer wraps around (enumeration finished).
inline bool nextTuple(std::span<const int> radices, std::vector<int>& digits) {
    for (std::size_t k = digits.size(); k-- > 0;) {
        if (++digits[k] < radices[k]) return true;
        digits[k] = 0;
    }
    return false;
}

// Saturating arithmetic for size guards: values clamp at kSaturated.
inline constexpr std::uint64_t kSaturated = UINT64_MAX;

inline std::uint64_t satMul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

inline std::uint64_t satPow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t result = 1;
    for (std::uint64_t e = 0; e < exp; ++e) {
        result = satMul(result, base);
        if (result == kSaturated) return kSaturated;
    }
    return result;
}

} // namespace polysys
