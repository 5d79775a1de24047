#include "knotmosaic/invariants.hpp"

#include <vector>

#include "knotmosaic/error.hpp"
#include "knotmosaic/topology.hpp"

namespace knotmosaic {

int count_loops(const std::vector<TileKind>& tiles, int n) {
    std::vector<bool> visited(static_cast<size_t>(n) * n * 4, false);
    auto idx = [n](int r, int c, int s) {
        return (static_cast<size_t>(r) * n + c) * 4 + s;
    };
    int loops = 0;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            std::uint8_t conn = connections(tiles[r * n + c]);
            for (int s = 0; s < 4; ++s) {
                if (!(conn & side_bit(static_cast<Side>(s)))) continue;
                if (visited[idx(r, c, s)]) continue;
                ++loops;
                int cr = r, cc = c;
                Side entry = static_cast<Side>(s);
                do {
                    Side exit = *strand_partner(tiles[cr * n + cc], entry);
                    visited[idx(cr, cc, static_cast<int>(entry))] = true;
                    visited[idx(cr, cc, static_cast<int>(exit))] = true;
                    switch (exit) {
                        case Side::North: --cr; break;
                        case Side::East: ++cc; break;
                        case Side::South: ++cr; break;
                        case Side::West: --cc; break;
                    }
                    entry = opposite(exit);
                } while (!(cr == r && cc == c && entry == static_cast<Side>(s)));
            }
        }
    }
    return loops;
}

LaurentPoly kauffman_bracket(const Mosaic& m, int crossing_limit) {
    require_suitably_connected(m);

    std::vector<int> crossing_cells;
    const int n = m.size();
    for (int i = 0; i < n * n; ++i)
        if (is_crossing(m.tiles()[i])) crossing_cells.push_back(i);
    const int c = static_cast<int>(crossing_cells.size());
    if (c > crossing_limit)
        throw Error(ErrorCode::TooManyCrossings,
                    std::to_string(c) + " crossings exceed the limit of " +
                        std::to_string(crossing_limit));

    bool any_connection = false;
    for (TileKind k : m.tiles())
        if (connections(k)) any_connection = true;
    if (!any_connection)
        throw Error(ErrorCode::InvalidArgument,
                    "bracket requires at least one component");

    // delta^k cache, k up to the maximum possible loop count.
    std::vector<LaurentPoly> delta_pow{LaurentPoly::one()};
    auto delta_power = [&delta_pow](int k) -> const LaurentPoly& {
        while (static_cast<int>(delta_pow.size()) <= k)
            delta_pow.push_back(delta_pow.back() * bracket_delta());
        return delta_pow[k];
    };

    LaurentPoly bracket;
    std::vector<TileKind> state = m.tiles();
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        int a_count = 0;
        for (int i = 0; i < c; ++i) {
            TileKind orig = m.tiles()[crossing_cells[i]];
            bool a_smoothing = !(mask & (1u << i));
            if (a_smoothing) ++a_count;
            // A-smoothing joins the regions swept by rotating the over
            // strand counterclockwise: T9 -> T7, T10 -> T8.
            TileKind smoothed;
            if (orig == TileKind::T9)
                smoothed = a_smoothing ? TileKind::T7 : TileKind::T8;
            else
                smoothed = a_smoothing ? TileKind::T8 : TileKind::T7;
            state[crossing_cells[i]] = smoothed;
        }
        int loops = count_loops(state, n);
        int exponent = a_count - (c - a_count);
        bracket += delta_power(loops - 1).times_monomial(BigInt(1), exponent);
    }
    return bracket;
}

LaurentPoly jones(const Mosaic& m, int crossing_limit) {
    for (TileKind k : m.tiles())
        if (is_virtual_crossing(k))
            throw Error(ErrorCode::InvalidArgument,
                        "jones requires a classical mosaic");
    int w = writhe(m); // throws NotAKnot on multi-component input
    LaurentPoly bracket = kauffman_bracket(m, crossing_limit);
    // f(A) = (-A^3)^(-w) * bracket
    LaurentPoly f =
        bracket.times_monomial(BigInt(w % 2 == 0 ? 1 : -1), -3 * w);
    if (!f.exponents_divisible_by(4))
        throw Error(ErrorCode::InvalidArgument,
                    "normalized bracket has exponents not divisible by 4");
    // t = A^-4
    LaurentPoly in_t;
    for (const auto& [e, coeff] : f.coefficients())
        in_t += LaurentPoly::monomial(coeff, -e / 4);
    return in_t;
}

int span_crossing_bound(const Mosaic& m, int crossing_limit) {
    LaurentPoly bracket = kauffman_bracket(m, crossing_limit);
    return bracket.span() / 4;
}

} // namespace knotmosaic
