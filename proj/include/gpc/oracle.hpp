#pragma once

#include <optional>
#include <vector>

#include "gpc/circle.hpp"

namespace gpc {

// Every rational point of the unit circle with coordinate heights at most
// `bound`, sorted by (x, y).
struct PointInventory {
    long bound = 0;
    std::vector<CirclePoint> points;
};

// Exhaustive enumeration from t = p/q over coprime 0 <= p <= q with
// p^2 + q^2 <= bound, closed under the eight sign/swap symmetries.
// The p-range is split by residue class across `threads` workers; the merged
// result does not depend on the thread count.
PointInventory enumerate(long bound, unsigned threads = 1);

// All GP chains of the given length (2, 3 or 4) through points of
// enumerate(bound), reported with nonnegative ordinates and ordered by
// abscissa chain. A ratio filter restricts to that ratio.
std::vector<GPSequence> search_gp(long bound, int length, const std::optional<Rational>& ratio = std::nullopt,
                                  unsigned threads = 1);

// True iff an exhaustive search at the sequence's own height finds its
// abscissa chain.
bool cross_check(const GPSequence& seq);

} // namespace gpc
