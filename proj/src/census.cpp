#include "knotmosaic/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <thread>
#include <unordered_map>

#include "knotmosaic/error.hpp"
#include "knotmosaic/invariants.hpp"
#include "knotmosaic/topology.hpp"

namespace knotmosaic {

namespace {

enum class KindClass { Classical, VirtualAlphabet, CrossingsOnly };

const std::vector<TileKind>& kind_set(KindClass cls) {
    static const std::vector<TileKind> classical = {
        TileKind::T0, TileKind::T1, TileKind::T2,  TileKind::T3,
        TileKind::T4, TileKind::T5, TileKind::T6,  TileKind::T7,
        TileKind::T8, TileKind::T9, TileKind::T10};
    static const std::vector<TileKind> with_virtual = [] {
        std::vector<TileKind> v = classical;
        v.push_back(TileKind::TV);
        return v;
    }();
    static const std::vector<TileKind> crossings = {TileKind::T9,
                                                    TileKind::T10};
    switch (cls) {
        case KindClass::Classical: return classical;
        case KindClass::VirtualAlphabet: return with_virtual;
        case KindClass::CrossingsOnly: return crossings;
    }
    return classical;
}

// Candidate tiles per (north requirement, west requirement, east-must-be-
// empty, south-must-be-empty), for each kind class.
struct CandidateTable {
    std::array<std::vector<TileKind>, 16> lists;
};

CandidateTable make_table(KindClass cls) {
    CandidateTable t;
    for (int idx = 0; idx < 16; ++idx) {
        bool n_req = idx & 1, w_req = idx & 2, e_zero = idx & 4,
             s_zero = idx & 8;
        for (TileKind k : kind_set(cls)) {
            std::uint8_t conn = connections(k);
            bool n = conn & side_bit(Side::North);
            bool e = conn & side_bit(Side::East);
            bool s = conn & side_bit(Side::South);
            bool w = conn & side_bit(Side::West);
            if (n != n_req || w != w_req) continue;
            if (e_zero && e) continue;
            if (s_zero && s) continue;
            t.lists[idx].push_back(k);
        }
    }
    return t;
}

const CandidateTable& table_for(KindClass cls) {
    static const CandidateTable classical = make_table(KindClass::Classical);
    static const CandidateTable with_virtual =
        make_table(KindClass::VirtualAlphabet);
    static const CandidateTable crossings =
        make_table(KindClass::CrossingsOnly);
    switch (cls) {
        case KindClass::Classical: return classical;
        case KindClass::VirtualAlphabet: return with_virtual;
        case KindClass::CrossingsOnly: return crossings;
    }
    return classical;
}

// Kind order matching serialized-text comparison: "0" < "1" < "10" < "2" ...
// < "9" < "v".
constexpr std::array<int, kTileKindCount> kTextRank = {
    0, 1, 3, 4, 5, 6, 7, 8, 9, 10, 2, 11};

std::vector<int> text_ranks(const Mosaic& m) {
    std::vector<int> out;
    out.reserve(m.tiles().size());
    for (TileKind k : m.tiles()) out.push_back(kTextRank[static_cast<int>(k)]);
    return out;
}

bool is_canonical(const Mosaic& m) {
    std::vector<int> base = text_ranks(m);
    for (D4Element g : d4_elements()) {
        if (g == kD4Identity) continue;
        if (text_ranks(transform(m, g)) < base) return false;
    }
    return true;
}

struct DfsContext {
    int n;
    const CensusOptions* opts;
    const CandidateTable* normal_table;
    const CandidateTable* interior_table;
    std::vector<TileKind> tiles;
    std::vector<int> interior_suffix; // interior cells at index >= i
    long long emitted = 0;
    bool stopped = false;
    const std::function<bool(const CensusRecord&)>* emit;
};

bool cell_is_interior(int n, int i) {
    int r = i / n, c = i % n;
    return r >= 1 && r <= n - 2 && c >= 1 && c <= n - 2;
}

void emit_leaf(DfsContext& ctx) {
    const int n = ctx.n;
    const CensusOptions& opts = *ctx.opts;

    int crossings = 0, virtual_crossings = 0;
    for (TileKind k : ctx.tiles) {
        if (is_crossing(k)) ++crossings;
        if (is_virtual_crossing(k)) ++virtual_crossings;
    }
    if (opts.interior == InteriorConstraint::MinCrossings &&
        crossings < opts.min_crossings)
        return;

    int components = count_loops(ctx.tiles, n);
    if (opts.knots_only && components != 1) return;

    Mosaic m(n, ctx.tiles, opts.alphabet);
    if (opts.canonical_only && !is_canonical(m)) return;

    CensusRecord rec;
    rec.mosaic = std::move(m);
    rec.components = components;
    rec.crossings = crossings;
    rec.virtual_crossings = virtual_crossings;
    rec.multiplicity = orbit_size(rec.mosaic);
    if (opts.with_jones && components == 1 && virtual_crossings == 0)
        rec.jones = jones(rec.mosaic);

    ++ctx.emitted;
    if (!(*ctx.emit)(rec)) ctx.stopped = true;
    if (opts.max_results && ctx.emitted >= *opts.max_results)
        ctx.stopped = true;
}

void dfs(DfsContext& ctx, int i, int crossings_so_far) {
    if (ctx.stopped) return;
    const int n = ctx.n;
    if (i == n * n) {
        emit_leaf(ctx);
        return;
    }
    if (ctx.opts->interior == InteriorConstraint::MinCrossings &&
        crossings_so_far + ctx.interior_suffix[i] < ctx.opts->min_crossings)
        return;

    int r = i / n, c = i % n;
    bool n_req = r > 0 && (connections(ctx.tiles[(r - 1) * n + c]) &
                           side_bit(Side::South));
    bool w_req = c > 0 && (connections(ctx.tiles[r * n + c - 1]) &
                           side_bit(Side::East));
    int idx = (n_req ? 1 : 0) | (w_req ? 2 : 0) | (c == n - 1 ? 4 : 0) |
              (r == n - 1 ? 8 : 0);

    bool interior = cell_is_interior(n, i);
    const CandidateTable& table =
        (interior && ctx.opts->interior == InteriorConstraint::AllCrossings)
            ? *ctx.interior_table
            : *ctx.normal_table;
    for (TileKind k : table.lists[idx]) {
        ctx.tiles[i] = k;
        dfs(ctx, i + 1, crossings_so_far + (is_crossing(k) ? 1 : 0));
        if (ctx.stopped) return;
    }
    ctx.tiles[i] = TileKind::T0;
}

void enumerate_single(int n, const CensusOptions& opts,
                      const std::function<bool(const CensusRecord&)>& emit,
                      const std::vector<TileKind>* first_row) {
    DfsContext ctx;
    ctx.n = n;
    ctx.opts = &opts;
    ctx.normal_table = &table_for(opts.alphabet == Alphabet::Virtual
                                      ? KindClass::VirtualAlphabet
                                      : KindClass::Classical);
    ctx.interior_table = &table_for(KindClass::CrossingsOnly);
    ctx.tiles.assign(static_cast<size_t>(n) * n, TileKind::T0);
    ctx.interior_suffix.assign(static_cast<size_t>(n) * n + 1, 0);
    for (int i = n * n - 1; i >= 0; --i)
        ctx.interior_suffix[i] =
            ctx.interior_suffix[i + 1] + (cell_is_interior(n, i) ? 1 : 0);
    ctx.emit = &emit;

    int start = 0, crossings = 0;
    if (first_row) {
        for (int c = 0; c < n; ++c) {
            ctx.tiles[c] = (*first_row)[c];
            if (is_crossing((*first_row)[c])) ++crossings;
        }
        start = n;
    }
    dfs(ctx, start, crossings);
}

// All internally consistent first rows, in search order.
std::vector<std::vector<TileKind>> first_row_prefixes(int n,
                                                      const CensusOptions& opts) {
    std::vector<std::vector<TileKind>> out;
    const CandidateTable& table = table_for(opts.alphabet == Alphabet::Virtual
                                                ? KindClass::VirtualAlphabet
                                                : KindClass::Classical);
    std::vector<TileKind> row(n, TileKind::T0);
    std::function<void(int)> rec = [&](int c) {
        if (c == n) {
            out.push_back(row);
            return;
        }
        bool w_req = c > 0 && (connections(row[c - 1]) & side_bit(Side::East));
        int idx = (w_req ? 2 : 0) | (c == n - 1 ? 4 : 0) | (n == 1 ? 8 : 0);
        for (TileKind k : table.lists[idx]) {
            row[c] = k;
            rec(c + 1);
        }
        row[c] = TileKind::T0;
    };
    rec(0);
    return out;
}

} // namespace

void enumerate(int n, const CensusOptions& opts,
               const std::function<bool(const CensusRecord&)>& emit) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
    if (opts.with_jones && !opts.knots_only)
        throw Error(ErrorCode::InvalidArgument,
                    "with_jones requires knots_only");

    if (opts.jobs <= 1) {
        enumerate_single(n, opts, emit, nullptr);
        return;
    }

    // Partition the search tree by first-row prefixes; workers run
    // independently and the merged stream is re-emitted in search order.
    std::vector<std::vector<TileKind>> prefixes = first_row_prefixes(n, opts);
    std::vector<std::vector<CensusRecord>> results(prefixes.size());
    std::atomic<size_t> next{0};
    int jobs = std::min<int>(opts.jobs, static_cast<int>(prefixes.size()));
    std::vector<std::thread> workers;
    CensusOptions worker_opts = opts;
    worker_opts.max_results.reset(); // applied after the merge
    for (int t = 0; t < jobs; ++t) {
        workers.emplace_back([&, t] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= prefixes.size()) break;
                enumerate_single(n, worker_opts,
                                 [&results, i](const CensusRecord& rec) {
                                     results[i].push_back(rec);
                                     return true;
                                 },
                                 &prefixes[i]);
            }
        });
    }
    for (auto& w : workers) w.join();

    long long emitted = 0;
    for (const auto& chunk : results) {
        for (const CensusRecord& rec : chunk) {
            if (!emit(rec)) return;
            ++emitted;
            if (opts.max_results && emitted >= *opts.max_results) return;
        }
    }
}

std::vector<CensusRecord> enumerate_all(int n, const CensusOptions& opts) {
    std::vector<CensusRecord> out;
    enumerate(n, opts, [&out](const CensusRecord& rec) {
        out.push_back(rec);
        return true;
    });
    return out;
}

BigInt count(int n, const CensusOptions& opts) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
    if (opts.knots_only || opts.canonical_only || opts.with_jones ||
        opts.interior == InteriorConstraint::MinCrossings)
        throw Error(ErrorCode::UnsupportedFilter,
                    "count supports only connectivity-local filters");
    if (n > 30)
        throw Error(ErrorCode::FeasibilityLimit, "transfer state too wide");

    // Tile multiplicity per connection profile (N | E<<1 | S<<2 | W<<3).
    std::array<int, 16> normal_weight{};
    std::array<int, 16> interior_weight{};
    for (TileKind k : kind_set(opts.alphabet == Alphabet::Virtual
                                   ? KindClass::VirtualAlphabet
                                   : KindClass::Classical)) {
        std::uint8_t conn = connections(k);
        int p = (conn & side_bit(Side::North) ? 1 : 0) |
                (conn & side_bit(Side::East) ? 2 : 0) |
                (conn & side_bit(Side::South) ? 4 : 0) |
                (conn & side_bit(Side::West) ? 8 : 0);
        ++normal_weight[p];
        if (opts.interior == InteriorConstraint::AllCrossings
                ? is_crossing(k)
                : true)
            ++interior_weight[p];
    }
    if (opts.interior == InteriorConstraint::None)
        interior_weight = normal_weight;

    // State: n pending south-connection bits plus the east bit of the
    // previous cell.
    std::unordered_map<std::uint64_t, BigInt> states;
    states.emplace(0, BigInt(1));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            bool interior = r >= 1 && r <= n - 2 && c >= 1 && c <= n - 2;
            const auto& weights = interior ? interior_weight : normal_weight;
            std::unordered_map<std::uint64_t, BigInt> next;
            for (const auto& [state, ways] : states) {
                bool n_bit = (state >> c) & 1;
                bool e_bit = (state >> n) & 1;
                for (int p = 0; p < 16; ++p) {
                    if (weights[p] == 0) continue;
                    bool pn = p & 1, pe = p & 2, ps = p & 4, pw = p & 8;
                    if (pn != n_bit || pw != e_bit) continue;
                    if (c == n - 1 && pe) continue;
                    if (r == n - 1 && ps) continue;
                    std::uint64_t mask = state & ((std::uint64_t{1} << n) - 1);
                    mask = (mask & ~(std::uint64_t{1} << c)) |
                           (std::uint64_t{ps ? 1u : 0u} << c);
                    std::uint64_t ns = mask | (std::uint64_t{pe ? 1u : 0u} << n);
                    auto [it, inserted] = next.try_emplace(ns, BigInt(0));
                    it->second += ways * BigInt(weights[p]);
                }
            }
            states = std::move(next);
        }
    }
    BigInt total(0);
    for (const auto& [state, ways] : states) total += ways;
    return total;
}

Mosaic canonical_form(const Mosaic& m) {
    Mosaic best = m;
    std::string best_text = serialize_mosaic(m);
    for (D4Element g : d4_elements()) {
        Mosaic t = transform(m, g);
        std::string text = serialize_mosaic(t);
        if (text < best_text) {
            best = std::move(t);
            best_text = std::move(text);
        }
    }
    return best;
}

int orbit_size(const Mosaic& m) {
    int stabilizer = 0;
    for (D4Element g : d4_elements())
        if (transform(m, g) == m) ++stabilizer;
    return 8 / stabilizer;
}

std::vector<KnotClass> knot_census(int n, int feasibility_limit) {
    if (n > feasibility_limit)
        throw Error(ErrorCode::FeasibilityLimit,
                    "knot_census limited to n <= " +
                        std::to_string(feasibility_limit));
    CensusOptions opts;
    opts.knots_only = true;
    opts.canonical_only = true;
    opts.with_jones = true;

    std::map<std::string, KnotClass> classes;
    enumerate(n, opts, [&classes](const CensusRecord& rec) {
        std::string key = rec.jones->to_string("t");
        auto [it, inserted] = classes.try_emplace(key);
        KnotClass& cls = it->second;
        if (inserted) {
            cls.jones = *rec.jones;
            cls.witness = rec.mosaic;
            cls.witness_crossings = rec.crossings;
        } else {
            auto cur = std::pair(cls.witness_crossings,
                                 serialize_mosaic(cls.witness));
            auto cand = std::pair(rec.crossings, serialize_mosaic(rec.mosaic));
            if (cand < cur) {
                cls.witness = rec.mosaic;
                cls.witness_crossings = rec.crossings;
            }
        }
        ++cls.count;
        return true;
    });

    std::vector<KnotClass> out;
    for (auto& [key, cls] : classes) out.push_back(std::move(cls));
    std::sort(out.begin(), out.end(), [](const KnotClass& a, const KnotClass& b) {
        return std::tuple(a.witness_crossings, serialize_mosaic(a.witness)) <
               std::tuple(b.witness_crossings, serialize_mosaic(b.witness));
    });
    return out;
}

} // namespace knotmosaic
