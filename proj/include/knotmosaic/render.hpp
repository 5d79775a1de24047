#pragma once

#include <string>

#include "knotmosaic/mosaic.hpp"

namespace knotmosaic {

/// One glyph per tile, n lines of n glyphs:
///   T0 `.`   T1 `┐`  T2 `┌`  T3 `└`  T4 `┘`  T5 `│`  T6 `─`
///   T7 `/`   T8 `\`  T9 `╂` (vertical strand over)
///   T10 `┿` (horizontal strand over)   TV `v`
std::string render_ascii(const Mosaic& m);

/// Inverse of render_ascii: recover the mosaic from the glyph grid.
Mosaic parse_ascii(const std::string& text);

/// One fixed-geometry square per tile; crossings draw the under strand with
/// a gap, the virtual crossing a small circle.
std::string render_svg(const Mosaic& m);

} // namespace knotmosaic
