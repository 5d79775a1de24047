#pragma once

namespace knotmosaic::data {

/// Base move rules (data/moves.catalog), embedded at build time.
const char* moves_catalog();

/// Golden witness mosaics in .mosaic text form.
const char* trefoil_mosaic();
const char* fig8_mosaic();
const char* oddsharp_mosaic();

} // namespace knotmosaic::data
