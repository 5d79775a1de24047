#pragma once

#include <string>
#include <vector>

#include "knotmosaic/tiles.hpp"

namespace knotmosaic {

enum class Alphabet { Classical, Virtual };

/// One suitable-connectivity violation: either a mismatched interior edge or
/// a connection point on the outer boundary.
struct Violation {
    int row = 0;
    int col = 0;
    Side side = Side::North;
    std::string message;
};

struct Diagnostics {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    std::string to_string() const;
};

/// An n x n grid of tiles, row 0 at the top.  Values are immutable after
/// construction; all operations on them are pure.
class Mosaic {
public:
    /// All-blank n-mosaic.
    explicit Mosaic(int n, Alphabet alphabet = Alphabet::Classical);

    /// From a row-major tile array of length n*n.  Throws InvalidArgument on
    /// size mismatch or a TV tile under the classical alphabet.
    Mosaic(int n, std::vector<TileKind> tiles,
           Alphabet alphabet = Alphabet::Classical);

    int size() const { return n_; }
    Alphabet alphabet() const { return alphabet_; }
    const std::vector<TileKind>& tiles() const { return tiles_; }

    TileKind at(int row, int col) const { return tiles_[row * n_ + col]; }

    /// Copy with one tile replaced.
    Mosaic with_tile(int row, int col, TileKind k) const;

    /// Copy with the alphabet flag changed.  Downgrading to classical with TV
    /// tiles present throws.
    Mosaic with_alphabet(Alphabet a) const;

    bool operator==(const Mosaic&) const = default;

private:
    int n_;
    Alphabet alphabet_;
    std::vector<TileKind> tiles_;
};

/// Empty diagnostics iff every interior edge has matching connection points
/// on both sides and no connection point touches the outer boundary.
Diagnostics is_suitably_connected(const Mosaic& m);

/// Throws NotSuitablyConnected when the diagnostics are non-empty.
void require_suitably_connected(const Mosaic& m);

/// Permutes cells by g and maps each tile to its g-image kind.
Mosaic transform(const Mosaic& m, D4Element g);

/// Swap T9 and T10 everywhere (diagram of the mirror knot).
Mosaic mirror(const Mosaic& m);

/// Embed into an (n+1)-mosaic, padding the new right column and bottom row
/// with blanks.
Mosaic grow(const Mosaic& m);

/// Remove the last row and column; throws NonEmptyBorder unless both are
/// entirely blank.  Requires n >= 2.
Mosaic shrink(const Mosaic& m);

/// Parse the .mosaic text format.  Reports line/column of the first bad
/// token, a wrong row count, or a ragged row.
Mosaic parse_mosaic(const std::string& text);

/// Serialize to the canonical .mosaic text (single spaces, trailing newline,
/// alphabet header only when virtual).
std::string serialize_mosaic(const Mosaic& m);

} // namespace knotmosaic
