#include "knotmosaic/topology.hpp"

#include <array>
#include <map>

#include "knotmosaic/error.hpp"

namespace knotmosaic {

namespace {

struct Dir {
    int dr, dc;
    bool operator==(const Dir&) const = default;
};

Dir exit_dir(Side s) {
    switch (s) {
        case Side::North: return {-1, 0};
        case Side::East: return {0, 1};
        case Side::South: return {1, 0};
        case Side::West: return {0, -1};
    }
    return {0, 0};
}

Dir rot90ccw(Dir d) { return {-d.dc, d.dr}; }

} // namespace

ComponentSet trace(const Mosaic& m) {
    require_suitably_connected(m);
    const int n = m.size();
    std::vector<bool> visited(static_cast<size_t>(n) * n * 4, false);
    auto idx = [n](int r, int c, Side s) {
        return (static_cast<size_t>(r) * n + c) * 4 + static_cast<int>(s);
    };

    ComponentSet cs;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            for (Side s : kSides) {
                if (!(connections(m.at(r, c)) & side_bit(s))) continue;
                if (visited[idx(r, c, s)]) continue;

                std::vector<StrandStep> comp;
                int cr = r, cc = c;
                Side entry = s;
                do {
                    Side exit = *strand_partner(m.at(cr, cc), entry);
                    visited[idx(cr, cc, entry)] = true;
                    visited[idx(cr, cc, exit)] = true;
                    comp.push_back({cr, cc, entry, exit});
                    Dir d = exit_dir(exit);
                    cr += d.dr;
                    cc += d.dc;
                    entry = opposite(exit);
                } while (!(cr == r && cc == c && entry == s));
                cs.components.push_back(std::move(comp));
            }
        }
    }
    return cs;
}

Counts counts(const Mosaic& m) {
    ComponentSet cs = trace(m);
    Counts out;
    out.components = cs.count();
    for (TileKind k : m.tiles()) {
        if (is_crossing(k)) ++out.crossings;
        if (is_virtual_crossing(k)) ++out.virtual_crossings;
    }
    return out;
}

namespace {

struct CrossingVisit {
    bool seen_over = false, seen_under = false;
    Dir over_dir{0, 0}, under_dir{0, 0};
};

// Shared walk for gauss_code and writhe: emits unsigned entries in trace
// order and fills per-label pass directions.
GaussCode walk_crossings(const Mosaic& m,
                         std::vector<CrossingVisit>& visits) {
    ComponentSet cs = trace(m);
    if (cs.count() != 1)
        throw Error(ErrorCode::NotAKnot,
                    "expected 1 component, found " +
                        std::to_string(cs.count()));

    const int n = m.size();
    std::vector<int> label_of_cell(static_cast<size_t>(n) * n, 0);
    int next_label = 1;
    GaussCode code;
    for (const StrandStep& step : cs.components[0]) {
        TileKind k = m.at(step.row, step.col);
        if (!is_crossing(k)) continue;
        int& label = label_of_cell[step.row * n + step.col];
        if (label == 0) {
            label = next_label++;
            visits.push_back({});
        }
        bool vertical = (step.entry == Side::North || step.entry == Side::South);
        bool over = (*over_strand_is_vertical(k) == vertical);
        code.entries.push_back(
            {label, over ? Passage::Over : Passage::Under, 0});
        CrossingVisit& v = visits[label - 1];
        if (over) {
            v.seen_over = true;
            v.over_dir = exit_dir(step.exit);
        } else {
            v.seen_under = true;
            v.under_dir = exit_dir(step.exit);
        }
    }
    return code;
}

int crossing_sign(const CrossingVisit& v) {
    return rot90ccw(v.over_dir) == v.under_dir ? 1 : -1;
}

} // namespace

GaussCode gauss_code(const Mosaic& m) {
    std::vector<CrossingVisit> visits;
    GaussCode code = walk_crossings(m, visits);
    for (GaussEntry& e : code.entries) {
        const CrossingVisit& v = visits[e.label - 1];
        if (v.seen_over && v.seen_under) e.sign = crossing_sign(v);
    }
    return code;
}

int writhe(const Mosaic& m) {
    for (TileKind k : m.tiles())
        if (is_virtual_crossing(k))
            throw Error(ErrorCode::InvalidArgument,
                        "writhe requires a classical mosaic");
    std::vector<CrossingVisit> visits;
    walk_crossings(m, visits);
    int w = 0;
    for (const CrossingVisit& v : visits) w += crossing_sign(v);
    return w;
}

} // namespace knotmosaic
