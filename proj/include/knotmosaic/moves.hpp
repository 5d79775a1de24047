#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "knotmosaic/laurent.hpp"
#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

/// A k x k tile pattern; nullopt cells are wildcards that match anything and
/// are copied through a rewrite unchanged.
struct Pattern {
    int k = 1;
    std::vector<std::optional<TileKind>> cells;

    std::optional<TileKind> at(int r, int c) const { return cells[r * k + c]; }
    bool has_wildcards() const;
    std::string key() const; // token serialization, '?' for wildcards

    bool operator==(const Pattern&) const = default;
};

enum class MoveKind { Planar, R1, R2, R3, Virtual };

std::string move_kind_name(MoveKind k);

struct MoveRule {
    Pattern before;
    Pattern after;
    MoveKind kind = MoveKind::Planar;
    std::string name; // provenance tag, e.g. "r1-kink/r90"
};

struct Placement {
    int rule_id = 0;
    int row = 0;
    int col = 0;

    bool operator==(const Placement&) const = default;
};

/// Shadow structure of a patch: which boundary points are connected, how they
/// pair through the tangle, and how many closed loops live inside.
/// Crossings and virtual crossings pass strands straight through.
struct PatchShape {
    std::uint32_t profile = 0; // bit b set iff boundary position b connected
    std::vector<std::pair<int, int>> pairing; // sorted pairs of positions
    int loops = 0;
};

/// Boundary position of (cell, side) on a k x k patch, clockwise from the
/// north-west corner; -1 for interior sides.
int patch_boundary_position(int k, int row, int col, Side s);

/// nullopt when the patch has an internally inconsistent edge.
std::optional<PatchShape> patch_shape(const std::vector<TileKind>& cells,
                                      int k);

/// Kauffman bracket of an open tangle as a map from boundary pairings to
/// coefficients: each smoothing state contributes A^(a-b) * delta^loops to
/// its resulting pairing.  Used to machine-check move soundness.
std::map<std::vector<std::pair<int, int>>, LaurentPoly> tangle_bracket(
    const std::vector<TileKind>& cells, int k);

/// The move catalog: hand-specified base rules closed under grid symmetry,
/// simultaneous crossing swap and before/after exchange, plus exhaustively
/// generated planar isotopy rules for k <= 2.
class MoveCatalog {
public:
    static MoveCatalog build(Alphabet alphabet);
    static MoveCatalog build_from_text(Alphabet alphabet,
                                       const std::string& base_rules_text);

    /// Cached catalog for the given alphabet.
    static const MoveCatalog& builtin(Alphabet alphabet);

    const std::vector<MoveRule>& rules() const { return rules_; }
    const MoveRule& rule(int id) const { return rules_[id]; }
    int size() const { return static_cast<int>(rules_.size()); }

    /// Rule with before/after exchanged; always present by closure.
    int reverse_rule_id(int id) const;

    /// Rule ids whose before-pattern (wildcard-free) equals the key.
    const std::vector<int>* rules_with_before(const std::string& key) const;
    const std::vector<int>& wildcard_rule_ids() const { return wildcard_rules_; }
    const std::vector<int>& pattern_sizes() const { return sizes_; }

private:
    std::vector<MoveRule> rules_;
    std::unordered_map<std::string, std::vector<int>> by_before_;
    std::unordered_map<std::string, int> id_by_shape_;
    std::vector<int> wildcard_rules_;
    std::vector<int> sizes_;

    void finalize();
};

/// Parse base rules from the catalog document format.
std::vector<MoveRule> parse_move_rules(const std::string& text);

/// All placements whose before-pattern matches and whose rewrite leaves the
/// mosaic suitably connected, ordered by (rule id, row, col).
std::vector<Placement> applicable_moves(const Mosaic& m,
                                        const MoveCatalog& catalog);

/// Apply one placement; throws NotApplicable when it does not match or the
/// result would not be suitably connected.
Mosaic apply_move(const Mosaic& m, const MoveCatalog& catalog,
                  const Placement& p);

struct SimplifyBudget {
    int max_steps = 256; // node expansions
    int max_grow = 1;    // rows/cols above the input size
};

/// Best-first search preferring lexicographically smaller
/// (crossings, n, serialized text); returns the best mosaic found.
Mosaic simplify(const Mosaic& m, const MoveCatalog& catalog,
                SimplifyBudget budget = {});

struct PathStep {
    enum class Kind { Move, Grow, Shrink };
    Kind kind = Kind::Move;
    Placement placement; // valid for Kind::Move
};

struct SearchBudget {
    int max_nodes = 4096; // per search side
    int max_grow = 1;
};

/// Bidirectional breadth-first search over the move graph (including grow
/// and shrink).  A path maps `a` to `b`; not-found is inconclusive.
std::optional<std::vector<PathStep>> equivalent_bfs(const Mosaic& a,
                                                    const Mosaic& b,
                                                    const MoveCatalog& catalog,
                                                    SearchBudget budget = {});

/// Apply a path returned by equivalent_bfs.
Mosaic apply_path(const Mosaic& m, const MoveCatalog& catalog,
                  const std::vector<PathStep>& path);

} // namespace knotmosaic
