#pragma once

#include <vector>

#include "knotmosaic/gauss_code.hpp"
#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

/// One step of a strand traversal: enter `cell` at `entry`, leave at `exit`
/// along the tile's strand pairing.
struct StrandStep {
    int row = 0;
    int col = 0;
    Side entry = Side::North;
    Side exit = Side::North;

    bool operator==(const StrandStep&) const = default;
};

/// The closed components of a suitably connected mosaic.  Components are
/// ordered by their lexicographically smallest (row, col, side) connection
/// point and traversed starting from it.
struct ComponentSet {
    std::vector<std::vector<StrandStep>> components;

    int count() const { return static_cast<int>(components.size()); }
};

struct Counts {
    int components = 0;
    int crossings = 0;
    int virtual_crossings = 0;
};

/// Partition the strands into closed components.  Throws
/// NotSuitablyConnected when the precondition fails.
ComponentSet trace(const Mosaic& m);

Counts counts(const Mosaic& m);

/// Gauss code of a knot mosaic: crossings numbered in first-visit order from
/// the deterministic trace start; virtual crossings carry no label.  Throws
/// NotAKnot when the component count is not 1.
GaussCode gauss_code(const Mosaic& m);

/// Sum of crossing signs under the traced orientation.  Right-handed (+)
/// when the over-strand direction rotated a quarter turn counterclockwise
/// aligns with the under-strand direction.
int writhe(const Mosaic& m);

} // namespace knotmosaic
