#pragma once

#include "knotmosaic/laurent.hpp"
#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

constexpr int kDefaultCrossingLimit = 24;

/// Kauffman bracket by state sum over all 2^c smoothings, normalized so the
/// unknot evaluates to 1.  Virtual crossing tiles are transparent to loop
/// counting.  Throws TooManyCrossings beyond `crossing_limit` and
/// NotSuitablyConnected / InvalidArgument (no component) on bad input.
LaurentPoly kauffman_bracket(const Mosaic& m,
                             int crossing_limit = kDefaultCrossingLimit);

/// Writhe-normalized bracket of a knot, reported in t via t = A^-4.
LaurentPoly jones(const Mosaic& m,
                  int crossing_limit = kDefaultCrossingLimit);

/// span_A(bracket) / 4, a lower bound on the crossing number.
int span_crossing_bound(const Mosaic& m,
                        int crossing_limit = kDefaultCrossingLimit);

/// Number of closed loops of a crossing-free (or virtual-only) tile grid.
/// Exposed for the census and move-validation machinery.
int count_loops(const std::vector<TileKind>& tiles, int n);

} // namespace knotmosaic
