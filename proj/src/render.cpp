#include "tilecount/render.hpp"

#include <cmath>
#include <sstream>

namespace tilecount {
namespace {

constexpr int kCellPx = 24;
constexpr int kPanelGapPx = 12;

enum class Glyph { TriangleNW, TriangleNE, TriangleSE, TriangleSW, Fill, Label };

struct GlyphSpec {
    Glyph kind;
    std::string fill;   // for Fill
    std::string label;  // for Label
};

GlyphSpec glyph_for(const std::string& design) {
    if (design == "nw") return {Glyph::TriangleNW, "", ""};
    if (design == "ne") return {Glyph::TriangleNE, "", ""};
    if (design == "se") return {Glyph::TriangleSE, "", ""};
    if (design == "sw") return {Glyph::TriangleSW, "", ""};
    if (design == "black") return {Glyph::Fill, "#222222", ""};
    if (design == "white") return {Glyph::Fill, "#ffffff", ""};
    return {Glyph::Label, "", design.substr(0, 2)};
}

void emit_cell(std::ostringstream& out, long px, long py, const GlyphSpec& glyph) {
    const long x0 = px, y0 = py, x1 = px + kCellPx, y1 = py + kCellPx;
    out << "<rect x=\"" << x0 << "\" y=\"" << y0 << "\" width=\"" << kCellPx
        << "\" height=\"" << kCellPx << "\" fill=\""
        << (glyph.kind == Glyph::Fill ? glyph.fill : "#ffffff")
        << "\" stroke=\"#999999\"/>";
    switch (glyph.kind) {
        case Glyph::TriangleNW:
            out << "<path d=\"M" << x0 << " " << y0 << " L" << x1 << " " << y0
                << " L" << x0 << " " << y1 << " Z\" fill=\"#222222\"/>";
            break;
        case Glyph::TriangleNE:
            out << "<path d=\"M" << x0 << " " << y0 << " L" << x1 << " " << y0
                << " L" << x1 << " " << y1 << " Z\" fill=\"#222222\"/>";
            break;
        case Glyph::TriangleSE:
            out << "<path d=\"M" << x1 << " " << y0 << " L" << x1 << " " << y1
                << " L" << x0 << " " << y1 << " Z\" fill=\"#222222\"/>";
            break;
        case Glyph::TriangleSW:
            out << "<path d=\"M" << x0 << " " << y0 << " L" << x1 << " " << y1
                << " L" << x0 << " " << y1 << " Z\" fill=\"#222222\"/>";
            break;
        case Glyph::Label:
            out << "<text x=\"" << (x0 + kCellPx / 2) << "\" y=\""
                << (y0 + kCellPx / 2 + 4)
                << "\" font-size=\"10\" font-family=\"monospace\" "
                   "text-anchor=\"middle\">"
                << glyph.label << "</text>";
            break;
        case Glyph::Fill:
            break;
    }
    out << "\n";
}

}  // namespace

std::string render_gallery_svg(const std::vector<TilingAssignment>& tilings,
                               const TileDesignSet& ts) {
    const long count = static_cast<long>(tilings.size());
    const long cols = count == 0
                          ? 1
                          : static_cast<long>(std::ceil(std::sqrt(static_cast<double>(count))));
    const long rows = count == 0 ? 1 : (count + cols - 1) / cols;
    const long n = tilings.empty() ? 1 : tilings[0].shape.n;
    const long m = tilings.empty() ? 1 : tilings[0].shape.m;
    const long panel_w = n * kCellPx, panel_h = m * kCellPx;
    const long width = cols * (panel_w + kPanelGapPx) + kPanelGapPx;
    const long height = rows * (panel_h + kPanelGapPx) + kPanelGapPx;

    std::vector<GlyphSpec> glyphs;
    for (const auto& name : ts.designs()) glyphs.push_back(glyph_for(name));

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
        << height << "\">\n";
    for (long k = 0; k < count; ++k) {
        const long ox = kPanelGapPx + (k % cols) * (panel_w + kPanelGapPx);
        const long oy = kPanelGapPx + (k / cols) * (panel_h + kPanelGapPx);
        const auto& tiling = tilings[static_cast<size_t>(k)];
        for (long y = 0; y < m; ++y) {
            for (long x = 0; x < n; ++x) {
                // (0,0) is the lower-left cell; SVG y grows downward.
                const long px = ox + x * kCellPx;
                const long py = oy + (m - 1 - y) * kCellPx;
                emit_cell(out, px, py,
                          glyphs[tiling.cells[static_cast<size_t>(y * n + x)]]);
            }
        }
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_gallery_ascii(const std::vector<TilingAssignment>& tilings,
                                 const TileDesignSet& ts) {
    // One character per design: its initial if unique, otherwise a letter by
    // index.
    std::vector<char> chars(static_cast<size_t>(ts.size()));
    bool initials_unique = true;
    for (int d = 0; d < ts.size(); ++d) {
        chars[static_cast<size_t>(d)] = ts.designs()[static_cast<size_t>(d)][0];
        for (int e = 0; e < d; ++e) {
            initials_unique = initials_unique &&
                              chars[static_cast<size_t>(e)] != chars[static_cast<size_t>(d)];
        }
    }
    if (!initials_unique) {
        for (int d = 0; d < ts.size(); ++d) {
            chars[static_cast<size_t>(d)] = static_cast<char>('a' + d % 26);
        }
    }

    std::ostringstream out;
    for (size_t k = 0; k < tilings.size(); ++k) {
        const auto& tiling = tilings[k];
        const long n = tiling.shape.n, m = tiling.shape.m;
        out << "# " << (k + 1) << "\n";
        for (long y = m - 1; y >= 0; --y) {
            for (long x = 0; x < n; ++x) {
                out << chars[tiling.cells[static_cast<size_t>(y * n + x)]];
            }
            out << "\n";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace tilecount
