#include <algorithm>
#include <deque>
#include <set>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "knotmosaic/error.hpp"
#include "knotmosaic/gauss.hpp"
#include "knotmosaic/topology.hpp"

namespace knotmosaic {

namespace {

// Union-find with parity between boolean variables.
class ParityUF {
public:
    explicit ParityUF(int n) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    std::pair<int, int> find(int x) {
        if (parent_[x] == x) return {x, 0};
        auto [root, p] = find(parent_[x]);
        parent_[x] = root;
        parity_[x] ^= p;
        return {root, parity_[x]};
    }

    /// Require value(x) xor value(y) == rel; false on contradiction.
    bool unite(int x, int y, int rel) {
        auto [rx, px] = find(x);
        auto [ry, py] = find(y);
        if (rx == ry) return (px ^ py) == rel;
        parent_[rx] = ry;
        parity_[rx] = px ^ py ^ rel;
        return true;
    }

    bool value(int x, int const_node) {
        auto [r, p] = find(x);
        auto [rc, pc] = find(const_node);
        return r == rc ? (p ^ pc) : p;
    }

private:
    std::vector<int> parent_;
    std::vector<char> parity_;
};

enum class PortKind { VerticalEntry, VerticalExit, HorizontalEntry,
                      HorizontalExit };

struct PortRef {
    int crossing = 0; // 0-based, first-visit order
    PortKind kind = PortKind::VerticalEntry;
};

struct Segment {
    PortRef from, to;
};

struct Plan {
    int c = 0;
    std::vector<int> pos;          // crossing -> spine position
    std::vector<int> order;        // spine position -> crossing
    std::vector<bool> vertical_over; // crossing's first visit is the over pass
    std::vector<bool> vflip;       // vertical pass runs upward instead of down
    std::vector<bool> hflip;       // horizontal pass enters east instead of west
    std::vector<Segment> segments;
    std::vector<int> arc_ids;      // segment ids that are lane arcs
    std::vector<bool> direct;      // per segment
    std::vector<bool> page;        // per segment (false = left)
    std::vector<int> lane;         // per arc segment, >= 1
};

// Row of a port: vertical passes own the rows above and below their tile
// row, horizontal passes attach on the tile row itself.
int port_height(const Plan& plan, const PortRef& p) {
    int base = 3 * plan.pos[p.crossing];
    bool up = plan.vflip[p.crossing];
    switch (p.kind) {
        case PortKind::VerticalEntry: return up ? base + 2 : base;
        case PortKind::HorizontalEntry:
        case PortKind::HorizontalExit: return base + 1;
        case PortKind::VerticalExit: return up ? base : base + 2;
    }
    return base;
}

bool is_horizontal(PortKind k) {
    return k == PortKind::HorizontalEntry || k == PortKind::HorizontalExit;
}

// Crossing order of first visits plus the passage structure shared by every
// attempt.
struct CodeStructure {
    int c = 0;
    std::vector<int> labels;          // crossing index -> original label
    std::vector<bool> first_over;     // first visit is the over pass
    std::vector<int> sign_by_crossing; // 0 when unsigned
    std::vector<std::pair<int, bool>> passages; // (crossing, is_first)
};

CodeStructure analyze(const GaussCode& code) {
    CodeStructure s;
    std::map<int, int> index_of_label;
    for (const GaussEntry& e : code.entries) {
        auto [it, inserted] = index_of_label.try_emplace(
            e.label, static_cast<int>(index_of_label.size()));
        int j = it->second;
        if (inserted) {
            s.labels.push_back(e.label);
            s.first_over.push_back(e.passage == Passage::Over);
            s.sign_by_crossing.push_back(e.sign);
        }
        s.passages.emplace_back(j, inserted);
    }
    s.c = static_cast<int>(s.labels.size());
    return s;
}

// Segments under a role assignment: crossing j's vertical strand carries its
// first visit unless role[j] flips it to the second.
std::vector<Segment> build_segments(const CodeStructure& s,
                                    const std::vector<bool>& role) {
    std::vector<Segment> segments;
    const int len = static_cast<int>(s.passages.size());
    for (int t = 0; t < len; ++t) {
        auto [j, j_first] = s.passages[t];
        auto [k, k_first] = s.passages[(t + 1) % len];
        bool j_vertical = j_first != role[j];
        bool k_vertical = k_first != role[k];
        Segment seg;
        seg.from = {j, j_vertical ? PortKind::VerticalExit
                                  : PortKind::HorizontalExit};
        seg.to = {k, k_vertical ? PortKind::VerticalEntry
                                : PortKind::HorizontalEntry};
        segments.push_back(seg);
    }
    return segments;
}

// Try to realize the code on a spine with the given crossing order, strand
// role assignment and vertical pass directions.  `conflicts_hard` demands a
// planar (virtual-free) page assignment; `enforce_signs` pins each
// crossing's strand directions to the input signs.
std::optional<Plan> attempt(const CodeStructure& s,
                            const std::vector<int>& order,
                            const std::vector<bool>& role,
                            const std::vector<bool>& vflip,
                            bool conflicts_hard, bool enforce_signs) {
    Plan plan;
    plan.c = s.c;
    plan.order = order;
    plan.pos.assign(s.c, 0);
    for (int p = 0; p < s.c; ++p) plan.pos[order[p]] = p;
    plan.vertical_over.assign(s.c, false);
    for (int j = 0; j < s.c; ++j)
        plan.vertical_over[j] = s.first_over[j] != role[j];
    plan.vflip = vflip;
    plan.segments = build_segments(s, role);

    const int nseg = static_cast<int>(plan.segments.size());
    plan.direct.assign(nseg, false);
    for (int i = 0; i < nseg; ++i) {
        const Segment& seg = plan.segments[i];
        if (seg.from.kind == PortKind::VerticalExit &&
            seg.to.kind == PortKind::VerticalEntry) {
            int pf = plan.pos[seg.from.crossing];
            int pt = plan.pos[seg.to.crossing];
            int hf = port_height(plan, seg.from);
            int ht = port_height(plan, seg.to);
            // facing rows of adjacent crossings connect straight down the
            // spine column
            plan.direct[i] = (pt == pf + 1 && hf == 3 * pf + 2 &&
                              ht == 3 * pt) ||
                             (pt == pf - 1 && hf == 3 * pf &&
                              ht == 3 * pt + 2);
        }
        if (!plan.direct[i]) plan.arc_ids.push_back(i);
    }

    // Variables: hflip per crossing, page per segment, one constant node.
    const int hflip_base = 0;
    const int page_base = s.c;
    const int const_node = s.c + nseg;
    ParityUF uf(const_node + 1);

    auto port_page_rel = [&](const PortRef& p) {
        // page == (side is east); entry side = hflip ? E : W, exit flipped.
        return p.kind == PortKind::HorizontalEntry ? 0 : 1;
    };
    for (int id : plan.arc_ids) {
        const Segment& seg = plan.segments[id];
        for (const PortRef& p : {seg.from, seg.to}) {
            if (!is_horizontal(p.kind)) continue;
            if (!uf.unite(page_base + id, hflip_base + p.crossing,
                          port_page_rel(p)))
                return std::nullopt;
        }
    }

    if (enforce_signs) {
        for (int j = 0; j < s.c; ++j) {
            if (s.sign_by_crossing[j] == 0) continue;
            // sign is positive iff over-pass-vertical xor vflip xor hflip
            bool want_hflip = (s.sign_by_crossing[j] > 0) ^
                              plan.vertical_over[j] ^ vflip[j];
            if (!uf.unite(hflip_base + j, const_node, want_hflip ? 1 : 0))
                return std::nullopt;
        }
    }

    // Interleaved arcs must sit on opposite pages to stay planar.
    auto span_of = [&](int id) {
        int h1 = port_height(plan, plan.segments[id].from);
        int h2 = port_height(plan, plan.segments[id].to);
        return std::pair(std::min(h1, h2), std::max(h1, h2));
    };
    for (size_t x = 0; x < plan.arc_ids.size(); ++x) {
        for (size_t y = x + 1; y < plan.arc_ids.size(); ++y) {
            int a = plan.arc_ids[x], b = plan.arc_ids[y];
            auto [amin, amax] = span_of(a);
            auto [bmin, bmax] = span_of(b);
            bool interleaved = (amin < bmin && bmin < amax && amax < bmax) ||
                               (bmin < amin && amin < bmax && bmax < amax);
            if (!interleaved) continue;
            bool ok = uf.unite(page_base + a, page_base + b, 1);
            if (!ok && conflicts_hard) return std::nullopt;
        }
    }

    plan.hflip.assign(s.c, false);
    for (int j = 0; j < s.c; ++j)
        plan.hflip[j] = uf.value(hflip_base + j, const_node);
    plan.page.assign(nseg, false);
    for (int id : plan.arc_ids)
        plan.page[id] = uf.value(page_base + id, const_node);

    // Nesting-aware lane assignment per page: overlapping arcs get distinct
    // lanes, inner (shorter) arcs lower ones.
    plan.lane.assign(nseg, 0);
    std::vector<int> by_length = plan.arc_ids;
    std::sort(by_length.begin(), by_length.end(), [&](int a, int b) {
        auto [amin, amax] = span_of(a);
        auto [bmin, bmax] = span_of(b);
        return std::tuple(amax - amin, amin, a) <
               std::tuple(bmax - bmin, bmin, b);
    });
    for (size_t i = 0; i < by_length.size(); ++i) {
        int a = by_length[i];
        auto [amin, amax] = span_of(a);
        int lane = 1;
        for (size_t j = 0; j < i; ++j) {
            int b = by_length[j];
            if (plan.page[b] != plan.page[a]) continue;
            auto [bmin, bmax] = span_of(b);
            if (std::max(amin, bmin) <= std::min(amax, bmax))
                lane = std::max(lane, plan.lane[b] + 1);
        }
        plan.lane[a] = lane;
    }
    return plan;
}

// Mutable tile canvas with collision handling: a horizontal strand drawn
// across a vertical one becomes a virtual crossing tile.
class Canvas {
public:
    Canvas(int rows, int cols)
        : rows_(rows), cols_(cols),
          tiles_(static_cast<size_t>(rows) * cols, TileKind::T0) {}

    void put(int r, int c, TileKind k) {
        TileKind& cell = tiles_[r * cols_ + c];
        if (cell == TileKind::T0) {
            cell = k;
            return;
        }
        if ((cell == TileKind::T5 && k == TileKind::T6) ||
            (cell == TileKind::T6 && k == TileKind::T5)) {
            cell = TileKind::TV;
            return;
        }
        throw std::logic_error("layout painted overlapping tiles");
    }

    const std::vector<TileKind>& tiles() const { return tiles_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

private:
    int rows_, cols_;
    std::vector<TileKind> tiles_;
};

TileKind arc_tile(bool north, bool east, bool south, bool west) {
    std::uint8_t bits = (north ? 1 : 0) | (east ? 2 : 0) | (south ? 4 : 0) |
                        (west ? 8 : 0);
    switch (bits) {
        case 1 | 2: return TileKind::T3;
        case 1 | 8: return TileKind::T4;
        case 4 | 2: return TileKind::T2;
        case 4 | 8: return TileKind::T1;
        case 1 | 4: return TileKind::T5;
        case 2 | 8: return TileKind::T6;
    }
    throw std::logic_error("bad arc tile request");
}

Mosaic emit(const Plan& plan) {
    const int c = plan.c;
    int lanes_left = 0, lanes_right = 0;
    for (int id : plan.arc_ids) {
        if (plan.page[id])
            lanes_right = std::max(lanes_right, plan.lane[id]);
        else
            lanes_left = std::max(lanes_left, plan.lane[id]);
    }
    const int spine = lanes_left;
    const int rows = 3 * c;
    const int cols = lanes_left + 1 + lanes_right;
    Canvas canvas(rows, cols);

    // Crossing tiles.
    for (int j = 0; j < c; ++j)
        canvas.put(3 * plan.pos[j] + 1, spine,
                   plan.vertical_over[j] ? TileKind::T9 : TileKind::T10);

    // Direct spine connections between vertically adjacent crossings.
    for (size_t i = 0; i < plan.segments.size(); ++i) {
        if (!plan.direct[i]) continue;
        canvas.put(port_height(plan, plan.segments[i].from), spine,
                   TileKind::T5);
        canvas.put(port_height(plan, plan.segments[i].to), spine,
                   TileKind::T5);
    }

    // Lane arcs.
    for (int id : plan.arc_ids) {
        const Segment& seg = plan.segments[id];
        bool right = plan.page[id];
        int lane_col = right ? spine + plan.lane[id] : spine - plan.lane[id];
        int h_from = port_height(plan, seg.from);
        int h_to = port_height(plan, seg.to);

        const std::pair<PortRef, int> ends[2] = {{seg.from, h_to},
                                                 {seg.to, h_from}};
        for (const auto& [p, other] : ends) {
            int h = port_height(plan, p);
            if (!is_horizontal(p.kind)) {
                // the crossing tile sits on the far side of this port row
                bool toward_south = h == 3 * plan.pos[p.crossing];
                canvas.put(h, spine,
                           arc_tile(!toward_south, right, toward_south, !right));
            }
            for (int col = std::min(spine, lane_col) + 1;
                 col < std::max(spine, lane_col); ++col)
                canvas.put(h, col, TileKind::T6);
            canvas.put(h, lane_col,
                       arc_tile(other < h, !right, other > h, right));
        }
        for (int r = std::min(h_from, h_to) + 1; r < std::max(h_from, h_to);
             ++r)
            canvas.put(r, lane_col, TileKind::T5);
    }

    // Compact: drop pass-through rows/columns, then pad to a square.
    std::vector<TileKind> tiles = canvas.tiles();
    int n_rows = canvas.rows(), n_cols = canvas.cols();
    auto row_removable = [&](int r) {
        for (int col = 0; col < n_cols; ++col) {
            TileKind k = tiles[r * n_cols + col];
            if (k != TileKind::T0 && k != TileKind::T5) return false;
        }
        return true;
    };
    auto col_removable = [&](int col) {
        for (int r = 0; r < n_rows; ++r) {
            TileKind k = tiles[r * n_cols + col];
            if (k != TileKind::T0 && k != TileKind::T6) return false;
        }
        return true;
    };
    for (int r = n_rows - 1; r >= 0; --r) {
        if (!row_removable(r)) continue;
        tiles.erase(tiles.begin() + static_cast<long>(r) * n_cols,
                    tiles.begin() + static_cast<long>(r + 1) * n_cols);
        --n_rows;
    }
    for (int col = n_cols - 1; col >= 0; --col) {
        if (!col_removable(col)) continue;
        for (int r = n_rows - 1; r >= 0; --r)
            tiles.erase(tiles.begin() + static_cast<long>(r) * n_cols + col);
        --n_cols;
    }

    const int n = std::max({n_rows, n_cols, 1});
    std::vector<TileKind> grid(static_cast<size_t>(n) * n, TileKind::T0);
    for (int r = 0; r < n_rows; ++r)
        for (int col = 0; col < n_cols; ++col)
            grid[r * n + col] = tiles[r * n_cols + col];

    bool has_virtual = std::find(grid.begin(), grid.end(), TileKind::TV) !=
                       grid.end();
    return Mosaic(n, std::move(grid),
                  has_virtual ? Alphabet::Virtual : Alphabet::Classical);
}

Mosaic circle_mosaic() {
    return Mosaic(2, {TileKind::T2, TileKind::T1, TileKind::T3, TileKind::T4});
}

// Fallback router for the rare realizable codes with no two-page spine
// presentation (a strand has to tunnel through the stack).  Crossings keep
// the spine arrangement; each curve segment is drawn by breadth-first search
// through empty cells, so paths may pass between crossings.  Cell caps keep
// the final grid within the 4c+2 budget.
class GridRouter {
public:
    GridRouter(const CodeStructure& s)
        : s_(s), c_(s.c), row_lo_(-1), row_hi_(3 * s.c),
          col_lo_(-2 * s.c), col_hi_(2 * s.c) {}

    /// Draw with curve segments inserted in rotated or reversed order;
    /// different insertion orders unblock different routings.
    std::optional<Mosaic> run(int shift, bool reversed) {
        tiles_.clear();
        reserved_.clear();
        for (int j = 0; j < c_; ++j) {
            put(3 * j + 1, 0,
                s_.first_over[j] ? TileKind::T9 : TileKind::T10);
            // keep every unrouted port's approach cell free
            reserved_.insert({3 * j, 0});
            reserved_.insert({3 * j + 2, 0});
            reserved_.insert({3 * j + 1, 1});
            reserved_.insert({3 * j + 1, -1});
        }

        const int len = static_cast<int>(s_.passages.size());
        for (int i = 0; i < len; ++i) {
            int t = reversed ? ((shift - i) % len + len) % len
                             : (shift + i) % len;
            auto [j, j_first] = s_.passages[t];
            auto [k, k_first] = s_.passages[(t + 1) % len];
            // first visit runs vertically north to south, second west to east
            Cell from = j_first ? Cell{3 * plan_pos(j) + 2, 0}
                                : Cell{3 * plan_pos(j) + 1, 1};
            Side from_link = j_first ? Side::North : Side::West;
            Cell to = k_first ? Cell{3 * plan_pos(k), 0}
                              : Cell{3 * plan_pos(k) + 1, -1};
            Side to_link = k_first ? Side::South : Side::East;
            reserved_.erase(from);
            reserved_.erase(to);
            if (!route(from, from_link, to, to_link)) return std::nullopt;
        }
        return finish();
    }

private:
    struct Cell {
        int r, c;
        bool operator==(const Cell&) const = default;
        bool operator<(const Cell& o) const {
            return std::pair(r, c) < std::pair(o.r, o.c);
        }
    };

    int plan_pos(int j) const { return j; } // first-visit order

    bool occupied(Cell x) const { return tiles_.contains(x); }

    void put(int r, int c, TileKind k) { tiles_[{r, c}] = k; }

    static Side step_dir(Cell a, Cell b) {
        if (b.r < a.r) return Side::North;
        if (b.r > a.r) return Side::South;
        if (b.c > a.c) return Side::East;
        return Side::West;
    }

    static TileKind tile_for(Side in, Side out) {
        auto bit = [](Side s) { return side_bit(s); };
        std::uint8_t bits = bit(in) | bit(out);
        for (TileKind k :
             {TileKind::T1, TileKind::T2, TileKind::T3, TileKind::T4,
              TileKind::T5, TileKind::T6})
            if (connections(k) == bits) return k;
        throw std::logic_error("no tile for bend");
    }

    bool route(Cell from, Side from_link, Cell to, Side to_link) {
        if (occupied(from) || occupied(to)) return false;
        if (from == to) return false;

        std::map<Cell, Cell> parent;
        std::deque<Cell> queue{from};
        parent[from] = from;
        bool reached = false;
        while (!queue.empty() && !reached) {
            Cell cur = queue.front();
            queue.pop_front();
            const Cell next[4] = {{cur.r - 1, cur.c},
                                  {cur.r, cur.c + 1},
                                  {cur.r + 1, cur.c},
                                  {cur.r, cur.c - 1}};
            for (const Cell& nxt : next) {
                if (nxt.r < row_lo_ || nxt.r > row_hi_ || nxt.c < col_lo_ ||
                    nxt.c > col_hi_)
                    continue;
                if (parent.contains(nxt)) continue;
                if ((occupied(nxt) || reserved_.contains(nxt)) && !(nxt == to))
                    continue;
                parent[nxt] = cur;
                if (nxt == to) {
                    reached = true;
                    break;
                }
                queue.push_back(nxt);
            }
        }
        if (!reached) return false;

        std::vector<Cell> path{to};
        while (!(path.back() == from)) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());

        for (size_t i = 0; i < path.size(); ++i) {
            Side in = i == 0 ? from_link : opposite(step_dir(path[i - 1], path[i]));
            Side out = i + 1 == path.size() ? to_link
                                            : step_dir(path[i], path[i + 1]);
            put(path[i].r, path[i].c, tile_for(in, out));
        }
        return true;
    }

    std::optional<Mosaic> finish() const {
        int rmin = 0, rmax = 0, cmin = 0, cmax = 0;
        for (const auto& [cell, k] : tiles_) {
            rmin = std::min(rmin, cell.r);
            rmax = std::max(rmax, cell.r);
            cmin = std::min(cmin, cell.c);
            cmax = std::max(cmax, cell.c);
        }
        int rows = rmax - rmin + 1, cols = cmax - cmin + 1;
        std::vector<TileKind> grid(static_cast<size_t>(rows) * cols,
                                   TileKind::T0);
        for (const auto& [cell, k] : tiles_)
            grid[(cell.r - rmin) * cols + (cell.c - cmin)] = k;

        // pass-through compaction, then square padding
        auto row_removable = [&](int r) {
            for (int c = 0; c < cols; ++c) {
                TileKind k = grid[r * cols + c];
                if (k != TileKind::T0 && k != TileKind::T5) return false;
            }
            return true;
        };
        auto col_removable = [&](int c) {
            for (int r = 0; r < rows; ++r) {
                TileKind k = grid[r * cols + c];
                if (k != TileKind::T0 && k != TileKind::T6) return false;
            }
            return true;
        };
        for (int r = rows - 1; r >= 0; --r) {
            if (!row_removable(r)) continue;
            grid.erase(grid.begin() + static_cast<long>(r) * cols,
                       grid.begin() + static_cast<long>(r + 1) * cols);
            --rows;
        }
        for (int c = cols - 1; c >= 0; --c) {
            if (!col_removable(c)) continue;
            for (int r = rows - 1; r >= 0; --r)
                grid.erase(grid.begin() + static_cast<long>(r) * cols + c);
            --cols;
        }
        const int n = std::max({rows, cols, 1});
        if (n > 4 * c_ + 2) return std::nullopt;
        std::vector<TileKind> square(static_cast<size_t>(n) * n, TileKind::T0);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                square[r * n + c] = grid[r * cols + c];
        return Mosaic(n, std::move(square), Alphabet::Classical);
    }

    const CodeStructure& s_;
    int c_;
    int row_lo_, row_hi_, col_lo_, col_hi_;
    std::map<Cell, TileKind> tiles_;
    std::set<Cell> reserved_;
};

std::vector<std::vector<int>> candidate_orders(int c) {
    std::vector<std::vector<int>> orders;
    std::vector<int> identity(c);
    std::iota(identity.begin(), identity.end(), 0);
    if (c <= 7) {
        std::vector<int> perm = identity;
        do {
            orders.push_back(perm);
        } while (std::next_permutation(perm.begin(), perm.end()));
        // Identity first.
        std::swap(orders.front(),
                  *std::find(orders.begin(), orders.end(), identity));
    } else {
        orders.push_back(identity);
        std::vector<int> reversed(identity.rbegin(), identity.rend());
        orders.push_back(reversed);
        for (int shift = 1; shift < c; ++shift) {
            std::vector<int> rotated(c);
            for (int i = 0; i < c; ++i) rotated[i] = (i + shift) % c;
            orders.push_back(rotated);
        }
    }
    return orders;
}

} // namespace

Mosaic layout(const GaussCode& code, bool allow_virtual) {
    validate_gauss(code);
    if (code.empty()) return circle_mosaic();

    CodeStructure s = analyze(code);
    bool realizable = is_realizable(code);
    if (!realizable && !allow_virtual)
        throw Error(ErrorCode::NotRealizable,
                    "code is not classically realizable");

    std::vector<int> identity(s.c);
    std::iota(identity.begin(), identity.end(), 0);
    const std::vector<bool> no_flips(s.c, false);

    if (realizable) {
        const unsigned vmask_limit = s.c <= 20 ? (1u << s.c) : (1u << 20);
        // strand role flips pay off only at small sizes; the grid router
        // covers whatever the spine search misses
        const unsigned rmask_limit = s.c <= 5 ? (1u << s.c) : 1;
        auto unpack = [&](unsigned mask) {
            std::vector<bool> flags(s.c, false);
            for (int j = 0; j < s.c; ++j)
                if (mask & (1u << j)) flags[j] = true;
            return flags;
        };
        bool signed_input = code.has_signs();
        long long attempts_left = 20'000'000;
        for (bool enforce_signs : signed_input ? std::vector<bool>{true, false}
                                               : std::vector<bool>{false}) {
            for (const auto& order : candidate_orders(s.c)) {
                for (unsigned rmask = 0; rmask < rmask_limit; ++rmask) {
                    std::vector<bool> role = unpack(rmask);
                    for (unsigned vmask = 0; vmask < vmask_limit; ++vmask) {
                        if (--attempts_left < 0)
                            throw Error(ErrorCode::FeasibilityLimit,
                                        "spine search budget exhausted");
                        auto plan = attempt(s, order, role, unpack(vmask),
                                            true, enforce_signs);
                        if (plan) return emit(*plan);
                    }
                }
            }
        }
        GridRouter router(s);
        for (bool reversed : {false, true})
            for (int shift = 0; shift < 2 * s.c; ++shift)
                if (auto routed = router.run(shift, reversed)) return *routed;
        throw Error(ErrorCode::FeasibilityLimit,
                    "spine search exhausted for a realizable code");
    }

    auto plan = attempt(s, identity, no_flips, no_flips, false, false);
    if (!plan)
        throw Error(ErrorCode::FeasibilityLimit, "virtual layout failed");
    return emit(*plan);
}

bool roundtrip_check(const GaussCode& code, const Mosaic& m) {
    GaussCode traced = gauss_code(m);
    return gauss_equivalent(traced, code, code.has_signs());
}

} // namespace knotmosaic
