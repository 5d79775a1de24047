#include "knotmosaic/mosaic.hpp"

#include <sstream>

#include "knotmosaic/error.hpp"

namespace knotmosaic {

std::string Diagnostics::to_string() const {
    std::ostringstream out;
    for (const auto& v : violations) {
        out << "(" << v.row << "," << v.col << ") " << v.message << "\n";
    }
    return out.str();
}

Mosaic::Mosaic(int n, Alphabet alphabet)
    : n_(n), alphabet_(alphabet), tiles_(static_cast<size_t>(n) * n,
                                         TileKind::T0) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "mosaic size must be >= 1");
}

Mosaic::Mosaic(int n, std::vector<TileKind> tiles, Alphabet alphabet)
    : n_(n), alphabet_(alphabet), tiles_(std::move(tiles)) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "mosaic size must be >= 1");
    if (tiles_.size() != static_cast<size_t>(n) * n)
        throw Error(ErrorCode::InvalidArgument, "tile array size mismatch");
    if (alphabet_ == Alphabet::Classical) {
        for (TileKind k : tiles_)
            if (k == TileKind::TV)
                throw Error(ErrorCode::InvalidArgument,
                            "virtual tile in a classical mosaic");
    }
}

Mosaic Mosaic::with_tile(int row, int col, TileKind k) const {
    std::vector<TileKind> t = tiles_;
    t[row * n_ + col] = k;
    return Mosaic(n_, std::move(t), alphabet_);
}

Mosaic Mosaic::with_alphabet(Alphabet a) const {
    return Mosaic(n_, tiles_, a);
}

Diagnostics is_suitably_connected(const Mosaic& m) {
    Diagnostics d;
    const int n = m.size();
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            std::uint8_t conn = connections(m.at(r, c));
            // Outer boundary must be free of connection points.
            if (r == 0 && (conn & side_bit(Side::North)))
                d.violations.push_back({r, c, Side::North,
                                        "connection point on top boundary"});
            if (r == n - 1 && (conn & side_bit(Side::South)))
                d.violations.push_back({r, c, Side::South,
                                        "connection point on bottom boundary"});
            if (c == 0 && (conn & side_bit(Side::West)))
                d.violations.push_back({r, c, Side::West,
                                        "connection point on left boundary"});
            if (c == n - 1 && (conn & side_bit(Side::East)))
                d.violations.push_back({r, c, Side::East,
                                        "connection point on right boundary"});
            // Interior edges: compare with the east and south neighbours.
            if (c + 1 < n) {
                bool a = conn & side_bit(Side::East);
                bool b = connections(m.at(r, c + 1)) & side_bit(Side::West);
                if (a != b)
                    d.violations.push_back({r, c, Side::East,
                                            "mismatched connection with east neighbour"});
            }
            if (r + 1 < n) {
                bool a = conn & side_bit(Side::South);
                bool b = connections(m.at(r + 1, c)) & side_bit(Side::North);
                if (a != b)
                    d.violations.push_back({r, c, Side::South,
                                            "mismatched connection with south neighbour"});
            }
        }
    }
    return d;
}

void require_suitably_connected(const Mosaic& m) {
    Diagnostics d = is_suitably_connected(m);
    if (!d.ok())
        throw Error(ErrorCode::NotSuitablyConnected,
                    "mosaic is not suitably connected: " + d.to_string());
}

Mosaic transform(const Mosaic& m, D4Element g) {
    const int n = m.size();
    std::vector<TileKind> out(static_cast<size_t>(n) * n, TileKind::T0);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            int nr, nc;
            d4_apply_cell(g, n, r, c, nr, nc);
            out[nr * n + nc] = d4_apply_kind(g, m.at(r, c));
        }
    }
    return Mosaic(n, std::move(out), m.alphabet());
}

Mosaic mirror(const Mosaic& m) {
    std::vector<TileKind> out = m.tiles();
    for (TileKind& k : out) k = mirror_kind(k);
    return Mosaic(m.size(), std::move(out), m.alphabet());
}

Mosaic grow(const Mosaic& m) {
    const int n = m.size();
    std::vector<TileKind> out(static_cast<size_t>(n + 1) * (n + 1),
                              TileKind::T0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out[r * (n + 1) + c] = m.at(r, c);
    return Mosaic(n + 1, std::move(out), m.alphabet());
}

Mosaic shrink(const Mosaic& m) {
    const int n = m.size();
    if (n < 2)
        throw Error(ErrorCode::InvalidArgument, "cannot shrink a 1-mosaic");
    for (int c = 0; c < n; ++c)
        if (m.at(n - 1, c) != TileKind::T0)
            throw Error(ErrorCode::NonEmptyBorder,
                        "bottom row is not blank");
    for (int r = 0; r < n; ++r)
        if (m.at(r, n - 1) != TileKind::T0)
            throw Error(ErrorCode::NonEmptyBorder,
                        "right column is not blank");
    std::vector<TileKind> out(static_cast<size_t>(n - 1) * (n - 1));
    for (int r = 0; r < n - 1; ++r)
        for (int c = 0; c < n - 1; ++c) out[r * (n - 1) + c] = m.at(r, c);
    return Mosaic(n - 1, std::move(out), m.alphabet());
}

namespace {

[[noreturn]] void parse_fail(int line, int col, const std::string& msg) {
    std::ostringstream out;
    out << "line " << line << ", column " << col << ": " << msg;
    throw Error(ErrorCode::ParseError, out.str());
}

} // namespace

Mosaic parse_mosaic(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    Alphabet alphabet = Alphabet::Classical;

    if (!std::getline(in, line)) parse_fail(1, 1, "empty input");
    ++lineno;
    if (line.rfind("#alphabet:", 0) == 0) {
        std::string v = line.substr(10);
        size_t p = v.find_first_not_of(" \t");
        v = (p == std::string::npos) ? "" : v.substr(p);
        if (v == "virtual")
            alphabet = Alphabet::Virtual;
        else if (v != "classical")
            parse_fail(lineno, 1, "unknown alphabet '" + v + "'");
        if (!std::getline(in, line)) parse_fail(lineno + 1, 1, "missing size line");
        ++lineno;
    }

    int n = 0;
    {
        std::istringstream ls(line);
        if (!(ls >> n) || n < 1) parse_fail(lineno, 1, "bad mosaic size");
        std::string extra;
        if (ls >> extra) parse_fail(lineno, 1, "trailing tokens on size line");
    }

    std::vector<TileKind> tiles;
    tiles.reserve(static_cast<size_t>(n) * n);
    for (int r = 0; r < n; ++r) {
        if (!std::getline(in, line))
            parse_fail(lineno + 1, 1, "expected " + std::to_string(n) +
                                          " rows, got " + std::to_string(r));
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        int col = 0;
        while (ls >> tok) {
            ++col;
            if (col > n) parse_fail(lineno, col, "ragged row: too many tokens");
            auto k = kind_from_token(tok);
            if (!k) parse_fail(lineno, col, "bad tile token '" + tok + "'");
            if (*k == TileKind::TV && alphabet == Alphabet::Classical)
                parse_fail(lineno, col,
                           "virtual tile in a mosaic declared classical");
            tiles.push_back(*k);
        }
        if (col < n) parse_fail(lineno, col + 1, "ragged row: too few tokens");
    }
    {
        std::string tok;
        while (std::getline(in, line)) {
            ++lineno;
            std::istringstream ls(line);
            if (ls >> tok) parse_fail(lineno, 1, "trailing content after grid");
        }
    }
    return Mosaic(n, std::move(tiles), alphabet);
}

std::string serialize_mosaic(const Mosaic& m) {
    std::ostringstream out;
    if (m.alphabet() == Alphabet::Virtual) out << "#alphabet: virtual\n";
    out << m.size() << "\n";
    for (int r = 0; r < m.size(); ++r) {
        for (int c = 0; c < m.size(); ++c) {
            if (c) out << ' ';
            out << kind_token(m.at(r, c));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace knotmosaic
