#pragma once

#include <string>
#include <vector>

#include "tilecount/oracle.hpp"

namespace tilecount {

// Gallery of orbit representatives, one panel per tiling, laid out in a
// square-ish grid. Deterministic: identical inputs give identical bytes.
// SVG output is self-contained. Truchet corner designs get triangle glyphs,
// black/white get solid fills, everything else a labeled square.
std::string render_gallery_svg(const std::vector<TilingAssignment>& tilings,
                               const TileDesignSet& ts);

// ASCII gallery: one character per cell (design initial), panels separated by
// blank lines, top row printed first.
std::string render_gallery_ascii(const std::vector<TilingAssignment>& tilings,
                                 const TileDesignSet& ts);

}  // namespace tilecount
