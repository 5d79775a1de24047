#pragma once

#include "knotmosaic/gauss_code.hpp"
#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

/// For each label in ascending order, reverse the subsequence strictly
/// between its two occurrences (passage and sign markers travel with their
/// labels).  A bijection on codes of each length.
GaussCode invert_lists(const GaussCode& code);

/// True iff the code is realizable as a classical knot diagram in the plane,
/// decided by the interlacement-parity criterion: every chord interlaces an
/// even number of chords, and every two non-interlacing chords share an even
/// number of common interlacing neighbours.
bool is_realizable(const GaussCode& code);

/// Compile a Gauss code into a suitably connected single-component mosaic
/// with exactly one classical crossing tile per label and grid size at most
/// 4c+2.  Crossings are stacked along a central spine; connecting strands
/// run in nested side lanes.  Virtual crossing tiles appear only where a
/// non-realizable code forces strands to cross; realizable codes compile to
/// classical mosaics.  Throws NotRealizable when allow_virtual is false and
/// the code is not realizable.  The empty code yields the 2-mosaic circle.
Mosaic layout(const GaussCode& code, bool allow_virtual = false);

/// True iff gauss_code(m) matches the code up to relabeling, rotation and
/// reversal; signs are compared (up to a global mirror) only when the input
/// carried them.
bool roundtrip_check(const GaussCode& code, const Mosaic& m);

} // namespace knotmosaic
