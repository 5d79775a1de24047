#pragma once

// Shared fixtures and independent oracles for the test suites.  The oracles
// deliberately avoid the library's traversal code paths: loop counting uses
// union-find over connection points, the bracket oracle uses the recursive
// skein expansion, and Gauss-code realizability tries every planar chord
// embedding via rotation systems.

#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "knotmosaic/gauss_code.hpp"
#include "knotmosaic/invariants.hpp"
#include "knotmosaic/laurent.hpp"
#include "knotmosaic/mosaic.hpp"

namespace kmtest {

using namespace knotmosaic;

inline Mosaic from_rows(const std::vector<std::string>& rows,
                        Alphabet alphabet = Alphabet::Classical) {
    std::ostringstream text;
    if (alphabet == Alphabet::Virtual) text << "#alphabet: virtual\n";
    text << rows.size() << "\n";
    for (const std::string& r : rows) text << r << "\n";
    return parse_mosaic(text.str());
}

inline Mosaic trefoil_4mosaic() {
    return from_rows({"0 2 1 0", "2 9 10 1", "3 10 8 4", "0 3 4 0"});
}

inline Mosaic circle_2mosaic() {
    return from_rows({"2 1", "3 4"});
}

// Loop count by union-find over connection points; independent of the
// library's strand-walking code.
inline int loops_union_find(const std::vector<TileKind>& tiles, int n) {
    const int total = n * n * 4;
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    auto id = [n](int r, int c, Side s) {
        return (r * n + c) * 4 + static_cast<int>(s);
    };

    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            TileKind k = tiles[r * n + c];
            for (Side s : kSides) {
                auto p = strand_partner(k, s);
                if (p) unite(id(r, c, s), id(r, c, *p));
            }
            if (c + 1 < n && (connections(k) & side_bit(Side::East)))
                unite(id(r, c, Side::East), id(r, c + 1, Side::West));
            if (r + 1 < n && (connections(k) & side_bit(Side::South)))
                unite(id(r, c, Side::South), id(r + 1, c, Side::North));
        }
    }
    std::map<int, bool> roots;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            for (Side s : kSides)
                if (connections(tiles[r * n + c]) & side_bit(s))
                    roots[find(id(r, c, s))] = true;
    return static_cast<int>(roots.size());
}

// Recursive skein expansion of the Kauffman bracket, normalized so a single
// loop contributes 1.
inline LaurentPoly skein_bracket_oracle(const Mosaic& m) {
    const int n = m.size();
    std::function<LaurentPoly(std::vector<TileKind>)> eval =
        [&](std::vector<TileKind> tiles) {
            for (int i = 0; i < n * n; ++i) {
                if (!is_crossing(tiles[i])) continue;
                TileKind orig = tiles[i];
                std::vector<TileKind> a = tiles, b = tiles;
                a[i] = orig == TileKind::T9 ? TileKind::T7 : TileKind::T8;
                b[i] = orig == TileKind::T9 ? TileKind::T8 : TileKind::T7;
                return eval(a).times_monomial(BigInt(1), 1) +
                       eval(b).times_monomial(BigInt(1), -1);
            }
            int loops = loops_union_find(tiles, n);
            LaurentPoly out = LaurentPoly::one();
            for (int i = 1; i < loops; ++i) out = out * bracket_delta();
            return out;
        };
    return eval(m.tiles());
}

// Planar realizability by brute force: does any crossing rotation system of
// the chord diagram embed with genus zero?
inline bool realizable_oracle(const std::vector<int>& word) {
    const int len = static_cast<int>(word.size());
    if (len == 0) return true;
    std::map<int, std::pair<int, int>> pos;
    for (int i = 0; i < len; ++i) {
        auto [it, inserted] = pos.try_emplace(word[i], i, -1);
        if (!inserted) it->second.second = i;
    }
    const int c = len / 2;
    std::vector<std::pair<int, int>> vertex(pos.size());
    {
        int v = 0;
        for (auto& [label, p] : pos) vertex[v++] = p;
    }

    // Dart-ends: arc t runs from passage t to t+1; end ids 2t (start) and
    // 2t+1 (end).  alpha flips the end; sigma cycles the rotation at the
    // end's vertex.
    for (int mask = 0; mask < (1 << c); ++mask) {
        std::vector<int> sigma(2 * len);
        for (int v = 0; v < c; ++v) {
            auto [p, q] = vertex[v];
            int in_p = 2 * ((p - 1 + len) % len) + 1;
            int out_p = 2 * p;
            int in_q = 2 * ((q - 1 + len) % len) + 1;
            int out_q = 2 * q;
            std::vector<int> cycle;
            if (mask & (1 << v))
                cycle = {in_p, out_q, out_p, in_q};
            else
                cycle = {in_p, in_q, out_p, out_q};
            for (int i = 0; i < 4; ++i)
                sigma[cycle[i]] = cycle[(i + 1) % 4];
        }
        std::vector<bool> seen(2 * len, false);
        int faces = 0;
        for (int d = 0; d < 2 * len; ++d) {
            if (seen[d]) continue;
            ++faces;
            int cur = d;
            do {
                seen[cur] = true;
                cur = sigma[cur ^ 1]; // alpha then sigma
            } while (cur != d);
        }
        if (faces == c + 2) return true;
    }
    return false;
}

inline std::vector<int> word_of(const GaussCode& code) {
    std::vector<int> out;
    for (const GaussEntry& e : code.entries) out.push_back(e.label);
    return out;
}

// All double-occurrence words on c chords with canonical first-visit labels.
inline std::vector<std::vector<int>> all_chord_words(int c) {
    std::vector<std::vector<int>> out;
    std::vector<int> word(2 * c, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == 2 * c) {
            out.push_back(word);
            return;
        }
        if (word[i] != 0) {
            rec(i + 1, used);
            return;
        }
        int label = used + 1;
        word[i] = label;
        for (int j = i + 1; j < 2 * c; ++j) {
            if (word[j] != 0) continue;
            word[j] = label;
            rec(i + 1, used + 1);
            word[j] = 0;
        }
        word[i] = 0;
    };
    rec(0, 0);
    return out;
}

// Over/under decoration of a plain word: bit j of `mask` makes label j+1's
// first occurrence an over pass; the second occurrence gets the opposite.
inline GaussCode decorate(const std::vector<int>& word, unsigned mask = ~0u) {
    GaussCode code;
    std::map<int, bool> first_over;
    int next_bit = 0;
    for (int label : word) {
        auto it = first_over.find(label);
        if (it == first_over.end()) {
            bool over = mask & (1u << next_bit++);
            first_over[label] = over;
            code.entries.push_back(
                {label, over ? Passage::Over : Passage::Under, 0});
        } else {
            code.entries.push_back(
                {label, it->second ? Passage::Under : Passage::Over, 0});
        }
    }
    return code;
}

} // namespace kmtest
