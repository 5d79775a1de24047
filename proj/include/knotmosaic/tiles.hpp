#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace knotmosaic {

// The twelve tile kinds: one blank, four single arcs, two lines, two double
// arcs, two classical crossings and the virtual crossing.  Arc endpoints sit
// at side midpoints; a strand pairs two of the four sides.
enum class TileKind : std::uint8_t {
    T0,  // blank
    T1,  // arc W-S
    T2,  // arc S-E
    T3,  // arc E-N
    T4,  // arc N-W
    T5,  // line N-S
    T6,  // line E-W
    T7,  // double arc N-E / S-W
    T8,  // double arc N-W / S-E
    T9,  // crossing, N-S strand over
    T10, // crossing, E-W strand over
    TV,  // virtual crossing
};

constexpr int kTileKindCount = 12;

enum class Side : std::uint8_t { North = 0, East = 1, South = 2, West = 3 };

constexpr std::array<Side, 4> kSides = {Side::North, Side::East, Side::South,
                                        Side::West};

constexpr Side opposite(Side s) {
    return static_cast<Side>((static_cast<int>(s) + 2) % 4);
}

constexpr std::uint8_t side_bit(Side s) {
    return static_cast<std::uint8_t>(1u << static_cast<int>(s));
}

/// Bitmask over {N,E,S,W} of sides carrying a connection point.
std::uint8_t connections(TileKind k);

/// The side paired with `s` by the tile's strand, if `s` is connected.
std::optional<Side> strand_partner(TileKind k, Side s);

/// For crossings only: true iff the N-S strand passes over.  T9 -> true,
/// T10 -> false, everything else nullopt.
std::optional<bool> over_strand_is_vertical(TileKind k);

bool is_crossing(TileKind k);        // T9 or T10
bool is_virtual_crossing(TileKind k); // TV

/// Image of the kind under a 90-degree clockwise rotation of the tile.
TileKind rotate_kind_cw(TileKind k);

/// Image under reflection across the vertical axis (E and W swap).
TileKind reflect_kind(TileKind k);

/// Swap over/under on crossings (T9 <-> T10); identity elsewhere.
TileKind mirror_kind(TileKind k);

/// Token used in the .mosaic text format: "0".."10" and "v".
std::string kind_token(TileKind k);

/// Inverse of kind_token; nullopt for unknown tokens.
std::optional<TileKind> kind_from_token(const std::string& token);

// An element of the dihedral group D4 acting on square grids and on tile
// kinds.  Convention: apply the optional reflection (across the vertical
// axis) first, then `rot` clockwise quarter turns.
struct D4Element {
    std::uint8_t rot = 0; // 0..3 clockwise quarter turns
    bool flip = false;

    bool operator==(const D4Element&) const = default;
};

constexpr D4Element kD4Identity{0, false};

/// All eight elements in a fixed order: 4 rotations, then 4 reflections.
std::array<D4Element, 8> d4_elements();

/// Composition a∘b (apply b first).
D4Element d4_compose(D4Element a, D4Element b);

D4Element d4_inverse(D4Element g);

/// Image of grid cell (row, col) in an n x n grid.
void d4_apply_cell(D4Element g, int n, int row, int col, int& out_row,
                   int& out_col);

/// Image of a tile kind under the grid symmetry.
TileKind d4_apply_kind(D4Element g, TileKind k);

std::string d4_name(D4Element g);

} // namespace knotmosaic
