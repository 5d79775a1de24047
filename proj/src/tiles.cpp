#include "knotmosaic/tiles.hpp"

#include <cassert>

namespace knotmosaic {

namespace {

constexpr std::uint8_t N = 1, E = 2, S = 4, W = 8;

constexpr std::array<std::uint8_t, kTileKindCount> kConnections = {
    0,             // T0
    W | S,         // T1
    S | E,         // T2
    E | N,         // T3
    N | W,         // T4
    N | S,         // T5
    E | W,         // T6
    N | E | S | W, // T7
    N | E | S | W, // T8
    N | E | S | W, // T9
    N | E | S | W, // T10
    N | E | S | W, // TV
};

// partner[kind][side], -1 when the side is not connected.
constexpr std::array<std::array<std::int8_t, 4>, kTileKindCount> kPartner = {{
    {-1, -1, -1, -1}, // T0
    {-1, -1, 3, 2},   // T1: S<->W
    {-1, 2, 1, -1},   // T2: E<->S
    {1, 0, -1, -1},   // T3: N<->E
    {3, -1, -1, 0},   // T4: N<->W
    {2, -1, 0, -1},   // T5: N<->S
    {-1, 3, -1, 1},   // T6: E<->W
    {1, 0, 3, 2},     // T7: N<->E, S<->W
    {3, 2, 1, 0},     // T8: N<->W, S<->E
    {2, 3, 0, 1},     // T9: N<->S, E<->W
    {2, 3, 0, 1},     // T10
    {2, 3, 0, 1},     // TV
}};

constexpr std::array<TileKind, kTileKindCount> kRotateCw = {
    TileKind::T0, TileKind::T4, TileKind::T1,  TileKind::T2,
    TileKind::T3, TileKind::T6, TileKind::T5,  TileKind::T8,
    TileKind::T7, TileKind::T10, TileKind::T9, TileKind::TV,
};

constexpr std::array<TileKind, kTileKindCount> kReflect = {
    TileKind::T0, TileKind::T2, TileKind::T1, TileKind::T4,
    TileKind::T3, TileKind::T5, TileKind::T6, TileKind::T8,
    TileKind::T7, TileKind::T9, TileKind::T10, TileKind::TV,
};

} // namespace

std::uint8_t connections(TileKind k) {
    return kConnections[static_cast<int>(k)];
}

std::optional<Side> strand_partner(TileKind k, Side s) {
    std::int8_t p = kPartner[static_cast<int>(k)][static_cast<int>(s)];
    if (p < 0) return std::nullopt;
    return static_cast<Side>(p);
}

std::optional<bool> over_strand_is_vertical(TileKind k) {
    if (k == TileKind::T9) return true;
    if (k == TileKind::T10) return false;
    return std::nullopt;
}

bool is_crossing(TileKind k) {
    return k == TileKind::T9 || k == TileKind::T10;
}

bool is_virtual_crossing(TileKind k) { return k == TileKind::TV; }

TileKind rotate_kind_cw(TileKind k) { return kRotateCw[static_cast<int>(k)]; }

TileKind reflect_kind(TileKind k) { return kReflect[static_cast<int>(k)]; }

TileKind mirror_kind(TileKind k) {
    if (k == TileKind::T9) return TileKind::T10;
    if (k == TileKind::T10) return TileKind::T9;
    return k;
}

std::string kind_token(TileKind k) {
    if (k == TileKind::TV) return "v";
    return std::to_string(static_cast<int>(k));
}

std::optional<TileKind> kind_from_token(const std::string& token) {
    if (token == "v") return TileKind::TV;
    if (token.empty() || token.size() > 2) return std::nullopt;
    for (char c : token)
        if (c < '0' || c > '9') return std::nullopt;
    int v = std::stoi(token);
    if (v < 0 || v > 10) return std::nullopt;
    return static_cast<TileKind>(v);
}

std::array<D4Element, 8> d4_elements() {
    return {D4Element{0, false}, D4Element{1, false}, D4Element{2, false},
            D4Element{3, false}, D4Element{0, true},  D4Element{1, true},
            D4Element{2, true},  D4Element{3, true}};
}

D4Element d4_compose(D4Element a, D4Element b) {
    // a∘b = R^a F^fa R^b F^fb; use F R = R^{-1} F.
    int rot = a.rot + (a.flip ? (4 - b.rot) % 4 : b.rot);
    return D4Element{static_cast<std::uint8_t>(rot % 4),
                     static_cast<bool>(a.flip ^ b.flip)};
}

D4Element d4_inverse(D4Element g) {
    if (g.flip) return g; // reflections are involutions
    return D4Element{static_cast<std::uint8_t>((4 - g.rot) % 4), false};
}

void d4_apply_cell(D4Element g, int n, int row, int col, int& out_row,
                   int& out_col) {
    int r = row, c = col;
    if (g.flip) c = n - 1 - c;
    for (int i = 0; i < g.rot; ++i) {
        int nr = c, nc = n - 1 - r;
        r = nr;
        c = nc;
    }
    out_row = r;
    out_col = c;
}

TileKind d4_apply_kind(D4Element g, TileKind k) {
    if (g.flip) k = reflect_kind(k);
    for (int i = 0; i < g.rot; ++i) k = rotate_kind_cw(k);
    return k;
}

std::string d4_name(D4Element g) {
    static const char* rot_names[] = {"id", "r90", "r180", "r270"};
    std::string s = rot_names[g.rot];
    if (g.flip) s += "*f";
    return s;
}

} // namespace knotmosaic
