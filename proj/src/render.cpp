#include "knotmosaic/render.hpp"

#include <array>
#include <sstream>
#include <vector>

#include "knotmosaic/error.hpp"

namespace knotmosaic {

namespace {

const std::array<const char*, kTileKindCount> kGlyphs = {
    ".", "┐", "┌", "└", "┘", "│",
    "─", "/", "\\", "╂", "┿", "v"};

} // namespace

std::string render_ascii(const Mosaic& m) {
    std::ostringstream out;
    for (int r = 0; r < m.size(); ++r) {
        for (int c = 0; c < m.size(); ++c)
            out << kGlyphs[static_cast<int>(m.at(r, c))];
        out << '\n';
    }
    return out.str();
}

Mosaic parse_ascii(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(line);
    if (rows.empty())
        throw Error(ErrorCode::ParseError, "empty ascii rendering");
    const int n = static_cast<int>(rows.size());

    std::vector<TileKind> tiles;
    bool has_virtual = false;
    for (int r = 0; r < n; ++r) {
        size_t i = 0;
        int c = 0;
        while (i < rows[r].size()) {
            bool matched = false;
            for (int k = 0; k < kTileKindCount; ++k) {
                size_t len = std::char_traits<char>::length(kGlyphs[k]);
                if (rows[r].compare(i, len, kGlyphs[k]) == 0) {
                    tiles.push_back(static_cast<TileKind>(k));
                    if (static_cast<TileKind>(k) == TileKind::TV)
                        has_virtual = true;
                    i += len;
                    matched = true;
                    break;
                }
            }
            if (!matched)
                throw Error(ErrorCode::ParseError,
                            "unknown glyph at row " + std::to_string(r + 1) +
                                ", column " + std::to_string(c + 1));
            ++c;
        }
        if (c != n)
            throw Error(ErrorCode::ParseError,
                        "row " + std::to_string(r + 1) + " has " +
                            std::to_string(c) + " glyphs, expected " +
                            std::to_string(n));
    }
    return Mosaic(n, std::move(tiles),
                  has_virtual ? Alphabet::Virtual : Alphabet::Classical);
}

namespace {

constexpr int kCell = 40;
constexpr int kGap = 7; // under-strand gap half-width at a crossing

// Quarter-circle arc between two side midpoints, centred on the shared
// corner.
void svg_arc(std::ostringstream& out, int x, int y, Side a, Side b) {
    auto midpoint = [&](Side s, int& px, int& py) {
        switch (s) {
            case Side::North: px = x + kCell / 2; py = y; break;
            case Side::East: px = x + kCell; py = y + kCell / 2; break;
            case Side::South: px = x + kCell / 2; py = y + kCell; break;
            case Side::West: px = x; py = y + kCell / 2; break;
        }
    };
    int ax, ay, bx, by;
    midpoint(a, ax, ay);
    midpoint(b, bx, by);
    // sweep chosen so the arc bulges toward the shared corner
    int sweep = 0;
    auto id = [](Side s) { return static_cast<int>(s); };
    if ((id(a) + 1) % 4 == id(b)) sweep = 0;
    else sweep = 1;
    out << "<path d=\"M " << ax << ' ' << ay << " A " << kCell / 2 << ' '
        << kCell / 2 << " 0 0 " << sweep << ' ' << bx << ' ' << by
        << "\" class=\"s\"/>\n";
}

void svg_line(std::ostringstream& out, int x1, int y1, int x2, int y2) {
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
        << "\" y2=\"" << y2 << "\" class=\"s\"/>\n";
}

void svg_tile(std::ostringstream& out, TileKind k, int x, int y) {
    const int half = kCell / 2;
    switch (k) {
        case TileKind::T0: break;
        case TileKind::T1: svg_arc(out, x, y, Side::South, Side::West); break;
        case TileKind::T2: svg_arc(out, x, y, Side::East, Side::South); break;
        case TileKind::T3: svg_arc(out, x, y, Side::North, Side::East); break;
        case TileKind::T4: svg_arc(out, x, y, Side::West, Side::North); break;
        case TileKind::T5:
            svg_line(out, x + half, y, x + half, y + kCell);
            break;
        case TileKind::T6:
            svg_line(out, x, y + half, x + kCell, y + half);
            break;
        case TileKind::T7:
            svg_arc(out, x, y, Side::North, Side::East);
            svg_arc(out, x, y, Side::South, Side::West);
            break;
        case TileKind::T8:
            svg_arc(out, x, y, Side::West, Side::North);
            svg_arc(out, x, y, Side::East, Side::South);
            break;
        case TileKind::T9:
            svg_line(out, x + half, y, x + half, y + kCell);
            svg_line(out, x, y + half, x + half - kGap, y + half);
            svg_line(out, x + half + kGap, y + half, x + kCell, y + half);
            break;
        case TileKind::T10:
            svg_line(out, x, y + half, x + kCell, y + half);
            svg_line(out, x + half, y, x + half, y + half - kGap);
            svg_line(out, x + half, y + half + kGap, x + half, y + kCell);
            break;
        case TileKind::TV:
            svg_line(out, x + half, y, x + half, y + kCell);
            svg_line(out, x, y + half, x + kCell, y + half);
            out << "<circle cx=\"" << x + half << "\" cy=\"" << y + half
                << "\" r=\"" << kGap << "\" class=\"v\"/>\n";
            break;
    }
}

} // namespace

std::string render_svg(const Mosaic& m) {
    const int size = m.size() * kCell;
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
        << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' '
        << size << "\">\n";
    out << "<style>.s{stroke:#000;stroke-width:3;fill:none}"
           ".v{stroke:#000;stroke-width:2;fill:none}"
           ".g{stroke:#ccc;stroke-width:1;fill:none}</style>\n";
    for (int i = 0; i <= m.size(); ++i) {
        out << "<line x1=\"" << i * kCell << "\" y1=\"0\" x2=\"" << i * kCell
            << "\" y2=\"" << size << "\" class=\"g\"/>\n";
        out << "<line x1=\"0\" y1=\"" << i * kCell << "\" x2=\"" << size
            << "\" y2=\"" << i * kCell << "\" class=\"g\"/>\n";
    }
    for (int r = 0; r < m.size(); ++r)
        for (int c = 0; c < m.size(); ++c)
            svg_tile(out, m.at(r, c), c * kCell, r * kCell);
    out << "</svg>\n";
    return out.str();
}

} // namespace knotmosaic
