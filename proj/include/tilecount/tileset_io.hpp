#pragma once

#include <iosfwd>
#include <string>

#include "tilecount/tileset.hpp"

namespace tilecount {

// Tile-set config files, JSON with order-insensitive keys. Two kinds:
//   {"kind":"explicit", "R":"r2,f", "designs":[...],
//    "action":{design:{g:design, ...}, ...}}
//   {"kind":"orbit-spec", "R":"D8", "counts":{subgroup-name:count, ...}}
// Unknown designs or dihedral elements in an action table are errors.
TileDesignSet load_tileset(std::istream& in);
TileDesignSet load_tileset_file(const std::string& path);

// Resolves a built-in name or a config-file path.
TileDesignSet resolve_tileset(const std::string& name_or_path, const DihGroup& R);

std::string orbit_spec_to_string(const OrbitSpec& spec);
std::string table_to_string(const FixedDesignTable& t);

}  // namespace tilecount
