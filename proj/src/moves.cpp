#include "knotmosaic/moves.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_set>

#include "knotmosaic/embedded_data.hpp"
#include "knotmosaic/error.hpp"

namespace knotmosaic {

bool Pattern::has_wildcards() const {
    return std::any_of(cells.begin(), cells.end(),
                       [](const auto& c) { return !c.has_value(); });
}

std::string Pattern::key() const {
    std::ostringstream out;
    out << k << ':';
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            if (c) out << ' ';
            const auto& cell = at(r, c);
            out << (cell ? kind_token(*cell) : std::string("?"));
        }
        out << ';';
    }
    return out.str();
}

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::Planar: return "planar";
        case MoveKind::R1: return "R1";
        case MoveKind::R2: return "R2";
        case MoveKind::R3: return "R3";
        case MoveKind::Virtual: return "virtual";
    }
    return "?";
}

int patch_boundary_position(int k, int row, int col, Side s) {
    switch (s) {
        case Side::North: return row == 0 ? col : -1;
        case Side::East: return col == k - 1 ? k + row : -1;
        case Side::South: return row == k - 1 ? 2 * k + (k - 1 - col) : -1;
        case Side::West: return col == 0 ? 3 * k + (k - 1 - row) : -1;
    }
    return -1;
}

std::optional<PatchShape> patch_shape(const std::vector<TileKind>& cells,
                                      int k) {
    auto conn = [&](int r, int c, Side s) {
        return (connections(cells[r * k + c]) & side_bit(s)) != 0;
    };
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            if (c + 1 < k && conn(r, c, Side::East) != conn(r, c + 1, Side::West))
                return std::nullopt;
            if (r + 1 < k && conn(r, c, Side::South) != conn(r + 1, c, Side::North))
                return std::nullopt;
        }
    }

    PatchShape shape;
    std::vector<bool> visited(static_cast<size_t>(k) * k * 4, false);
    auto idx = [k](int r, int c, Side s) {
        return (static_cast<size_t>(r) * k + c) * 4 + static_cast<int>(s);
    };

    // Strands reaching the boundary, in boundary order.
    for (int pos = 0; pos < 4 * k; ++pos) {
        // invert the position map
        int r, c;
        Side s;
        if (pos < k) {
            r = 0; c = pos; s = Side::North;
        } else if (pos < 2 * k) {
            r = pos - k; c = k - 1; s = Side::East;
        } else if (pos < 3 * k) {
            r = k - 1; c = k - 1 - (pos - 2 * k); s = Side::South;
        } else {
            r = k - 1 - (pos - 3 * k); c = 0; s = Side::West;
        }
        if (!conn(r, c, s)) continue;
        shape.profile |= (1u << pos);
        if (visited[idx(r, c, s)]) continue;

        int cr = r, cc = c;
        Side entry = s;
        int end_pos = -1;
        while (true) {
            Side exit = *strand_partner(cells[cr * k + cc], entry);
            visited[idx(cr, cc, entry)] = true;
            visited[idx(cr, cc, exit)] = true;
            int nr = cr, nc = cc;
            switch (exit) {
                case Side::North: --nr; break;
                case Side::East: ++nc; break;
                case Side::South: ++nr; break;
                case Side::West: --nc; break;
            }
            if (nr < 0 || nr >= k || nc < 0 || nc >= k) {
                end_pos = patch_boundary_position(k, cr, cc, exit);
                break;
            }
            cr = nr;
            cc = nc;
            entry = opposite(exit);
        }
        shape.pairing.emplace_back(std::min(pos, end_pos),
                                   std::max(pos, end_pos));
    }
    std::sort(shape.pairing.begin(), shape.pairing.end());
    shape.pairing.erase(
        std::unique(shape.pairing.begin(), shape.pairing.end()),
        shape.pairing.end());

    // Anything connected but unreached from the boundary is a closed loop.
    for (int r = 0; r < k; ++r) {
        for (int c = 0; c < k; ++c) {
            for (Side s : kSides) {
                if (!conn(r, c, s) || visited[idx(r, c, s)]) continue;
                ++shape.loops;
                int cr = r, cc = c;
                Side entry = s;
                do {
                    Side exit = *strand_partner(cells[cr * k + cc], entry);
                    visited[idx(cr, cc, entry)] = true;
                    visited[idx(cr, cc, exit)] = true;
                    switch (exit) {
                        case Side::North: --cr; break;
                        case Side::East: ++cc; break;
                        case Side::South: ++cr; break;
                        case Side::West: --cc; break;
                    }
                    entry = opposite(exit);
                } while (!(cr == r && cc == c && entry == s));
            }
        }
    }
    return shape;
}

std::map<std::vector<std::pair<int, int>>, LaurentPoly> tangle_bracket(
    const std::vector<TileKind>& cells, int k) {
    std::vector<int> crossings;
    for (int i = 0; i < k * k; ++i)
        if (is_crossing(cells[i])) crossings.push_back(i);
    const int c = static_cast<int>(crossings.size());

    std::vector<LaurentPoly> delta_pow{LaurentPoly::one()};
    auto delta_power = [&delta_pow](int p) -> const LaurentPoly& {
        while (static_cast<int>(delta_pow.size()) <= p)
            delta_pow.push_back(delta_pow.back() * bracket_delta());
        return delta_pow[p];
    };

    std::map<std::vector<std::pair<int, int>>, LaurentPoly> result;
    std::vector<TileKind> state = cells;
    for (std::uint32_t mask = 0; mask < (1u << c); ++mask) {
        int a_count = 0;
        for (int i = 0; i < c; ++i) {
            TileKind orig = cells[crossings[i]];
            bool a_smoothing = !(mask & (1u << i));
            if (a_smoothing) ++a_count;
            state[crossings[i]] =
                (orig == TileKind::T9) == a_smoothing ? TileKind::T7
                                                      : TileKind::T8;
        }
        auto shape = patch_shape(state, k);
        if (!shape)
            throw Error(ErrorCode::InvalidArgument,
                        "tangle_bracket requires an internally consistent patch");
        result[shape->pairing] += delta_power(shape->loops)
                                      .times_monomial(BigInt(1),
                                                      a_count - (c - a_count));
    }
    std::erase_if(result, [](const auto& kv) { return kv.second.is_zero(); });
    return result;
}

namespace {

Pattern transform_pattern(const Pattern& p, D4Element g) {
    Pattern out;
    out.k = p.k;
    out.cells.assign(p.cells.size(), std::nullopt);
    for (int r = 0; r < p.k; ++r) {
        for (int c = 0; c < p.k; ++c) {
            int nr, nc;
            d4_apply_cell(g, p.k, r, c, nr, nc);
            const auto& cell = p.at(r, c);
            if (cell) out.cells[nr * p.k + nc] = d4_apply_kind(g, *cell);
        }
    }
    return out;
}

Pattern mirror_pattern(const Pattern& p) {
    Pattern out = p;
    for (auto& cell : out.cells)
        if (cell) cell = mirror_kind(*cell);
    return out;
}

bool pattern_contains_virtual(const Pattern& p) {
    return std::any_of(p.cells.begin(), p.cells.end(), [](const auto& c) {
        return c && *c == TileKind::TV;
    });
}

bool pattern_contains_crossing(const Pattern& p) {
    return std::any_of(p.cells.begin(), p.cells.end(), [](const auto& c) {
        return c && is_crossing(*c);
    });
}

int kind_rank(MoveKind k) { return static_cast<int>(k); }

void validate_rule(const MoveRule& rule, const std::string& where) {
    if (rule.before.k != rule.after.k)
        throw Error(ErrorCode::InvalidArgument,
                    where + ": pattern sizes differ");
    if (rule.before.cells == rule.after.cells)
        throw Error(ErrorCode::InvalidArgument, where + ": rule is a no-op");
    for (size_t i = 0; i < rule.before.cells.size(); ++i) {
        if (rule.before.cells[i].has_value() != rule.after.cells[i].has_value())
            throw Error(ErrorCode::InvalidArgument,
                        where + ": wildcards do not coincide positionally");
    }
    if (rule.before.has_wildcards()) return; // shape checks need concrete tiles

    std::vector<TileKind> before_cells, after_cells;
    for (const auto& c : rule.before.cells) before_cells.push_back(*c);
    for (const auto& c : rule.after.cells) after_cells.push_back(*c);
    auto bs = patch_shape(before_cells, rule.before.k);
    auto as = patch_shape(after_cells, rule.after.k);
    if (!bs || !as)
        throw Error(ErrorCode::InvalidArgument,
                    where + ": internally inconsistent pattern");
    if (bs->profile != as->profile)
        throw Error(ErrorCode::InvalidArgument,
                    where + ": boundary profiles differ");
    if (bs->pairing != as->pairing)
        throw Error(ErrorCode::InvalidArgument,
                    where + ": endpoint pairings differ");
    if (bs->loops != 0 || as->loops != 0)
        throw Error(ErrorCode::InvalidArgument,
                    where + ": pattern contains a closed loop");
}

} // namespace

std::vector<MoveRule> parse_move_rules(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto next_content_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            size_t p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos) continue;
            if (line[p] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    auto fail = [&](const std::string& msg) -> void {
        throw Error(ErrorCode::ParseError,
                    "moves catalog line " + std::to_string(lineno) + ": " + msg);
    };

    auto parse_pattern = [&]() {
        std::string l;
        if (!next_content_line(l)) fail("expected pattern size");
        int k = 0;
        {
            std::istringstream ls(l);
            if (!(ls >> k) || k < 1 || k > 3) fail("bad pattern size");
        }
        Pattern p;
        p.k = k;
        for (int r = 0; r < k; ++r) {
            if (!next_content_line(l)) fail("unexpected end of pattern");
            std::istringstream ls(l);
            std::string tok;
            int c = 0;
            while (ls >> tok) {
                if (c >= k) fail("too many tokens in pattern row");
                if (tok == "?") {
                    p.cells.push_back(std::nullopt);
                } else {
                    auto kind = kind_from_token(tok);
                    if (!kind) fail("bad tile token '" + tok + "'");
                    p.cells.push_back(*kind);
                }
                ++c;
            }
            if (c != k) fail("too few tokens in pattern row");
        }
        return p;
    };

    std::vector<MoveRule> rules;
    std::string l;
    while (next_content_line(l)) {
        std::istringstream ls(l);
        std::string word, name;
        ls >> word;
        if (word != "rule") fail("expected 'rule <name>'");
        ls >> name;
        if (name.empty()) fail("rule needs a name");

        if (!next_content_line(l)) fail("expected 'kind:'");
        std::string kind_str;
        {
            std::istringstream ks(l);
            ks >> word >> kind_str;
            if (word != "kind:") fail("expected 'kind:'");
        }
        MoveKind kind;
        if (kind_str == "planar") kind = MoveKind::Planar;
        else if (kind_str == "R1") kind = MoveKind::R1;
        else if (kind_str == "R2") kind = MoveKind::R2;
        else if (kind_str == "R3") kind = MoveKind::R3;
        else if (kind_str == "virtual") kind = MoveKind::Virtual;
        else { fail("unknown move kind '" + kind_str + "'"); return rules; }

        if (!next_content_line(l) || l.find("before:") == std::string::npos)
            fail("expected 'before:'");
        Pattern before = parse_pattern();
        if (!next_content_line(l) || l.find("after:") == std::string::npos)
            fail("expected 'after:'");
        Pattern after = parse_pattern();

        MoveRule rule{std::move(before), std::move(after), kind, name};
        validate_rule(rule, "rule " + name);
        rules.push_back(std::move(rule));
    }
    return rules;
}

namespace {

// Exhaustively generated local rules for k x k patches (k <= 2).
//
// Crossing-free case: every ordered pair of distinct loop-free fillings with
// identical boundary profile and endpoint pairing is a planar isotopy.
//
// One-crossing case: fillings are grouped by their full tangle bracket.  For
// tangles with at most one crossing the bracket determines the isotopy class
// (the two smoothing pairings pin down the strands and the over choice, and
// opposite kinks scale by -A^3 versus -A^-3), so equal-bracket pairs are
// sound crossing slides.  They are tagged R3: each is a composite of
// Reidemeister moves that carries a crossing past a bend.
void generate_local_rules(int k, std::vector<MoveRule>& out) {
    const std::array<TileKind, 11> kinds = {
        TileKind::T0, TileKind::T1, TileKind::T2, TileKind::T3,
        TileKind::T4, TileKind::T5, TileKind::T6, TileKind::T7,
        TileKind::T8, TileKind::T9, TileKind::T10};

    std::map<std::string, std::vector<std::vector<TileKind>>> groups;
    std::vector<TileKind> cells(static_cast<size_t>(k) * k, TileKind::T0);

    auto edge_ok = [&](int r, int c) {
        std::uint8_t conn = connections(cells[r * k + c]);
        if (c > 0) {
            bool west = conn & side_bit(Side::West);
            bool left = connections(cells[r * k + c - 1]) & side_bit(Side::East);
            if (west != left) return false;
        }
        if (r > 0) {
            bool north = conn & side_bit(Side::North);
            bool up = connections(cells[(r - 1) * k + c]) & side_bit(Side::South);
            if (north != up) return false;
        }
        return true;
    };

    auto record = [&]() {
        auto shape = patch_shape(cells, k);
        if (!shape || shape->loops != 0) return;
        std::ostringstream key;
        key << shape->profile << '/';
        for (const auto& [pairing, poly] : tangle_bracket(cells, k)) {
            for (auto [a, b] : pairing) key << a << '-' << b << ',';
            key << '=' << poly.to_string() << ';';
        }
        groups[key.str()].push_back(cells);
    };

    std::function<void(int, int)> fill = [&](int i, int crossings) {
        if (i == k * k) {
            record();
            return;
        }
        int r = i / k, c = i % k;
        for (TileKind kind : kinds) {
            if (is_crossing(kind) && crossings >= 1) continue;
            cells[i] = kind;
            if (edge_ok(r, c))
                fill(i + 1, crossings + (is_crossing(kind) ? 1 : 0));
        }
        cells[i] = TileKind::T0;
    };
    fill(0, 0);

    for (const auto& [key, members] : groups) {
        if (members.size() < 2) continue;
        for (size_t i = 0; i < members.size(); ++i) {
            for (size_t j = 0; j < members.size(); ++j) {
                if (i == j) continue;
                Pattern before, after;
                before.k = after.k = k;
                for (TileKind t : members[i]) before.cells.push_back(t);
                for (TileKind t : members[j]) after.cells.push_back(t);
                bool has_crossing =
                    std::any_of(members[i].begin(), members[i].end(),
                                [](TileKind t) { return is_crossing(t); });
                out.push_back({std::move(before), std::move(after),
                               has_crossing ? MoveKind::R3 : MoveKind::Planar,
                               (has_crossing ? "slide-k" : "planar-k") +
                                   std::to_string(k)});
            }
        }
    }
}

} // namespace

MoveCatalog MoveCatalog::build(Alphabet alphabet) {
    return build_from_text(alphabet, data::moves_catalog());
}

MoveCatalog MoveCatalog::build_from_text(Alphabet alphabet,
                                         const std::string& base_rules_text) {
    std::vector<MoveRule> base = parse_move_rules(base_rules_text);

    std::vector<MoveRule> expanded;
    for (int k = 1; k <= 2; ++k) generate_local_rules(k, expanded);

    for (const MoveRule& rule : base) {
        for (int swap = 0; swap < 2; ++swap) {
            for (int mir = 0; mir < 2; ++mir) {
                // Skip the crossing swap when it cannot change anything.
                if (mir == 1 && !pattern_contains_crossing(rule.before) &&
                    !pattern_contains_crossing(rule.after))
                    continue;
                for (D4Element g : d4_elements()) {
                    Pattern b = rule.before, a = rule.after;
                    if (mir) {
                        b = mirror_pattern(b);
                        a = mirror_pattern(a);
                    }
                    b = transform_pattern(b, g);
                    a = transform_pattern(a, g);
                    if (swap) std::swap(b, a);
                    expanded.push_back(
                        {std::move(b), std::move(a), rule.kind, rule.name});
                }
            }
        }
    }

    MoveCatalog cat;
    std::set<std::string> seen;
    for (MoveRule& rule : expanded) {
        if (alphabet == Alphabet::Classical &&
            (pattern_contains_virtual(rule.before) ||
             pattern_contains_virtual(rule.after)))
            continue;
        std::string shape = rule.before.key() + "|" + rule.after.key();
        if (!seen.insert(shape).second) continue;
        cat.rules_.push_back(std::move(rule));
    }
    std::sort(cat.rules_.begin(), cat.rules_.end(),
              [](const MoveRule& x, const MoveRule& y) {
                  return std::tuple(x.before.k, kind_rank(x.kind),
                                    x.before.key(), x.after.key()) <
                         std::tuple(y.before.k, kind_rank(y.kind),
                                    y.before.key(), y.after.key());
              });
    cat.finalize();
    return cat;
}

const MoveCatalog& MoveCatalog::builtin(Alphabet alphabet) {
    static const MoveCatalog classical = build(Alphabet::Classical);
    static const MoveCatalog with_virtual = build(Alphabet::Virtual);
    return alphabet == Alphabet::Classical ? classical : with_virtual;
}

void MoveCatalog::finalize() {
    std::set<int> ks;
    for (int id = 0; id < size(); ++id) {
        const MoveRule& rule = rules_[id];
        ks.insert(rule.before.k);
        id_by_shape_[rule.before.key() + "|" + rule.after.key()] = id;
        if (rule.before.has_wildcards())
            wildcard_rules_.push_back(id);
        else
            by_before_[rule.before.key()].push_back(id);
    }
    sizes_.assign(ks.begin(), ks.end());
}

int MoveCatalog::reverse_rule_id(int id) const {
    const MoveRule& rule = rules_[id];
    auto it = id_by_shape_.find(rule.after.key() + "|" + rule.before.key());
    if (it == id_by_shape_.end())
        throw Error(ErrorCode::InvalidArgument,
                    "catalog is not closed under before/after swap");
    return it->second;
}

const std::vector<int>* MoveCatalog::rules_with_before(
    const std::string& key) const {
    auto it = by_before_.find(key);
    return it == by_before_.end() ? nullptr : &it->second;
}

namespace {

std::string subgrid_key(const Mosaic& m, int r0, int c0, int k) {
    Pattern p;
    p.k = k;
    for (int r = 0; r < k; ++r)
        for (int c = 0; c < k; ++c) p.cells.push_back(m.at(r0 + r, c0 + c));
    return p.key();
}

bool pattern_matches(const Mosaic& m, const Pattern& p, int r0, int c0) {
    for (int r = 0; r < p.k; ++r)
        for (int c = 0; c < p.k; ++c) {
            const auto& cell = p.at(r, c);
            if (cell && m.at(r0 + r, c0 + c) != *cell) return false;
        }
    return true;
}

std::vector<TileKind> rewrite_tiles(const Mosaic& m, const Pattern& after,
                                    int r0, int c0) {
    std::vector<TileKind> tiles = m.tiles();
    for (int r = 0; r < after.k; ++r)
        for (int c = 0; c < after.k; ++c) {
            const auto& cell = after.at(r, c);
            if (cell) tiles[(r0 + r) * m.size() + (c0 + c)] = *cell;
        }
    return tiles;
}

// Suitable connectivity restricted to the rewritten window plus one ring.
bool locally_connected(const std::vector<TileKind>& tiles, int n, int r0,
                       int c0, int k) {
    int rlo = std::max(0, r0 - 1), rhi = std::min(n - 1, r0 + k);
    int clo = std::max(0, c0 - 1), chi = std::min(n - 1, c0 + k);
    for (int r = rlo; r <= rhi; ++r) {
        for (int c = clo; c <= chi; ++c) {
            std::uint8_t conn = connections(tiles[r * n + c]);
            if (r == 0 && (conn & side_bit(Side::North))) return false;
            if (r == n - 1 && (conn & side_bit(Side::South))) return false;
            if (c == 0 && (conn & side_bit(Side::West))) return false;
            if (c == n - 1 && (conn & side_bit(Side::East))) return false;
            if (c + 1 < n) {
                bool a = conn & side_bit(Side::East);
                bool b = connections(tiles[r * n + c + 1]) & side_bit(Side::West);
                if (a != b) return false;
            }
            if (r + 1 < n) {
                bool a = conn & side_bit(Side::South);
                bool b = connections(tiles[(r + 1) * n + c]) & side_bit(Side::North);
                if (a != b) return false;
            }
        }
    }
    return true;
}

bool placement_valid(const Mosaic& m, const MoveCatalog& catalog,
                     const Placement& p) {
    const MoveRule& rule = catalog.rule(p.rule_id);
    const int n = m.size();
    if (p.row < 0 || p.col < 0 || p.row + rule.before.k > n ||
        p.col + rule.before.k > n)
        return false;
    if (!pattern_matches(m, rule.before, p.row, p.col)) return false;
    if (m.alphabet() == Alphabet::Classical &&
        pattern_contains_virtual(rule.after))
        return false;
    auto tiles = rewrite_tiles(m, rule.after, p.row, p.col);
    return locally_connected(tiles, n, p.row, p.col, rule.before.k);
}

} // namespace

std::vector<Placement> applicable_moves(const Mosaic& m,
                                        const MoveCatalog& catalog) {
    const int n = m.size();
    std::vector<Placement> out;
    for (int k : catalog.pattern_sizes()) {
        if (k > n) continue;
        for (int r0 = 0; r0 + k <= n; ++r0) {
            for (int c0 = 0; c0 + k <= n; ++c0) {
                if (const auto* ids =
                        catalog.rules_with_before(subgrid_key(m, r0, c0, k))) {
                    for (int id : *ids) out.push_back({id, r0, c0});
                }
            }
        }
    }
    for (int id : catalog.wildcard_rule_ids()) {
        int k = catalog.rule(id).before.k;
        for (int r0 = 0; r0 + k <= n; ++r0)
            for (int c0 = 0; c0 + k <= n; ++c0)
                if (pattern_matches(m, catalog.rule(id).before, r0, c0))
                    out.push_back({id, r0, c0});
    }
    std::sort(out.begin(), out.end(), [](const Placement& a, const Placement& b) {
        return std::tuple(a.rule_id, a.row, a.col) <
               std::tuple(b.rule_id, b.row, b.col);
    });
    std::erase_if(out, [&](const Placement& p) {
        return !placement_valid(m, catalog, p);
    });
    return out;
}

Mosaic apply_move(const Mosaic& m, const MoveCatalog& catalog,
                  const Placement& p) {
    if (p.rule_id < 0 || p.rule_id >= catalog.size())
        throw Error(ErrorCode::NotApplicable, "unknown rule id");
    if (!placement_valid(m, catalog, p))
        throw Error(ErrorCode::NotApplicable,
                    "rule " + std::to_string(p.rule_id) + " at (" +
                        std::to_string(p.row) + "," + std::to_string(p.col) +
                        ") does not apply");
    const MoveRule& rule = catalog.rule(p.rule_id);
    return Mosaic(m.size(), rewrite_tiles(m, rule.after, p.row, p.col),
                  m.alphabet());
}

namespace {

int crossing_tiles(const Mosaic& m) {
    int c = 0;
    for (TileKind k : m.tiles())
        if (is_crossing(k)) ++c;
    return c;
}

struct SearchKey {
    int crossings;
    int n;
    std::string text;

    auto operator<=>(const SearchKey&) const = default;
};

SearchKey search_key(const Mosaic& m) {
    return {crossing_tiles(m), m.size(), serialize_mosaic(m)};
}

bool can_shrink(const Mosaic& m) {
    if (m.size() < 2) return false;
    for (int c = 0; c < m.size(); ++c)
        if (m.at(m.size() - 1, c) != TileKind::T0) return false;
    for (int r = 0; r < m.size(); ++r)
        if (m.at(r, m.size() - 1) != TileKind::T0) return false;
    return true;
}

// Neighbors in deterministic order: moves, then grow, then shrink.
void for_each_neighbor(const Mosaic& m, const MoveCatalog& catalog,
                       int max_size,
                       const std::function<void(Mosaic, PathStep)>& visit) {
    for (const Placement& p : applicable_moves(m, catalog))
        visit(apply_move(m, catalog, p), {PathStep::Kind::Move, p});
    if (m.size() < max_size)
        visit(grow(m), {PathStep::Kind::Grow, {}});
    if (can_shrink(m))
        visit(shrink(m), {PathStep::Kind::Shrink, {}});
}

} // namespace

Mosaic simplify(const Mosaic& m, const MoveCatalog& catalog,
                SimplifyBudget budget) {
    require_suitably_connected(m);
    const int max_size = m.size() + std::max(0, budget.max_grow);

    using Entry = std::pair<SearchKey, int>; // key, node index
    auto cmp = [](const Entry& a, const Entry& b) { return a > b; };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> queue(cmp);
    std::deque<Mosaic> nodes;
    std::unordered_set<std::string> visited;

    SearchKey best_key = search_key(m);
    Mosaic best = m;
    nodes.push_back(m);
    queue.push({best_key, 0});
    visited.insert(best_key.text);

    int expanded = 0;
    while (!queue.empty() && expanded < budget.max_steps) {
        auto [key, index] = queue.top();
        queue.pop();
        ++expanded;
        Mosaic cur = nodes[index];
        for_each_neighbor(cur, catalog, max_size,
                          [&](Mosaic next, PathStep) {
                              SearchKey k = search_key(next);
                              if (!visited.insert(k.text).second) return;
                              if (k < best_key) {
                                  best_key = k;
                                  best = next;
                              }
                              nodes.push_back(std::move(next));
                              queue.push({std::move(k),
                                          static_cast<int>(nodes.size()) - 1});
                          });
    }
    return best;
}

namespace {

struct BfsSide {
    std::deque<std::string> frontier;
    // state -> (parent state, step from parent to state)
    std::unordered_map<std::string, std::pair<std::string, PathStep>> parents;
    std::unordered_map<std::string, Mosaic> mosaics;
};

std::vector<PathStep> path_from(const BfsSide& side, std::string state) {
    std::vector<PathStep> steps;
    while (true) {
        auto it = side.parents.find(state);
        if (it == side.parents.end() || it->second.first.empty()) break;
        steps.push_back(it->second.second);
        state = it->second.first;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

PathStep invert_step(const PathStep& step, const MoveCatalog& catalog) {
    switch (step.kind) {
        case PathStep::Kind::Grow:
            return {PathStep::Kind::Shrink, {}};
        case PathStep::Kind::Shrink:
            return {PathStep::Kind::Grow, {}};
        case PathStep::Kind::Move: {
            Placement p = step.placement;
            p.rule_id = catalog.reverse_rule_id(p.rule_id);
            return {PathStep::Kind::Move, p};
        }
    }
    return step;
}

} // namespace

std::optional<std::vector<PathStep>> equivalent_bfs(const Mosaic& a,
                                                    const Mosaic& b,
                                                    const MoveCatalog& catalog,
                                                    SearchBudget budget) {
    require_suitably_connected(a);
    require_suitably_connected(b);
    const int max_size =
        std::max(a.size(), b.size()) + std::max(0, budget.max_grow);

    BfsSide fwd, bwd;
    std::string sa = serialize_mosaic(a), sb = serialize_mosaic(b);
    fwd.frontier.push_back(sa);
    fwd.parents[sa] = {"", {}};
    fwd.mosaics.emplace(sa, a);
    bwd.frontier.push_back(sb);
    bwd.parents[sb] = {"", {}};
    bwd.mosaics.emplace(sb, b);

    auto build_path = [&](const std::string& meet) {
        std::vector<PathStep> steps = path_from(fwd, meet);
        std::vector<PathStep> back = path_from(bwd, meet);
        for (auto it = back.rbegin(); it != back.rend(); ++it)
            steps.push_back(invert_step(*it, catalog));
        return steps;
    };

    if (sa == sb) return std::vector<PathStep>{};

    int expanded_fwd = 0, expanded_bwd = 0;
    while (!fwd.frontier.empty() || !bwd.frontier.empty()) {
        bool take_fwd;
        if (fwd.frontier.empty())
            take_fwd = false;
        else if (bwd.frontier.empty())
            take_fwd = true;
        else
            take_fwd = fwd.frontier.size() <= bwd.frontier.size();
        BfsSide& side = take_fwd ? fwd : bwd;
        BfsSide& other = take_fwd ? bwd : fwd;
        int& expanded = take_fwd ? expanded_fwd : expanded_bwd;
        if (expanded >= budget.max_nodes) {
            side.frontier.clear();
            continue;
        }

        std::string state = side.frontier.front();
        side.frontier.pop_front();
        ++expanded;
        Mosaic cur = side.mosaics.at(state);

        std::optional<std::vector<PathStep>> found;
        for_each_neighbor(cur, catalog, max_size,
                          [&](Mosaic next, PathStep step) {
                              if (found) return;
                              std::string key = serialize_mosaic(next);
                              if (side.parents.contains(key)) return;
                              side.parents[key] = {state, step};
                              side.mosaics.emplace(key, std::move(next));
                              side.frontier.push_back(key);
                              if (other.parents.contains(key))
                                  found = build_path(key);
                          });
        if (found) return found;
    }
    return std::nullopt;
}

Mosaic apply_path(const Mosaic& m, const MoveCatalog& catalog,
                  const std::vector<PathStep>& path) {
    Mosaic cur = m;
    for (const PathStep& step : path) {
        switch (step.kind) {
            case PathStep::Kind::Move:
                cur = apply_move(cur, catalog, step.placement);
                break;
            case PathStep::Kind::Grow:
                cur = grow(cur);
                break;
            case PathStep::Kind::Shrink:
                cur = shrink(cur);
                break;
        }
    }
    return cur;
}

} // namespace knotmosaic
