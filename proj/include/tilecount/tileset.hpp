#pragma once

#include <map>
#include <string>
#include <vector>

#include "tilecount/group.hpp"

namespace tilecount {

// t_g for every g in R: the number of designs fixed by g.
struct FixedDesignTable {
    DihGroup R;
    std::array<long, kDihCount> t{};  // indexed by Dih, valid for g in R

    long at(Dih g) const;
};

// A finite R-set with an explicit right-action table.
class TileDesignSet {
public:
    // action[d][g] is the index of d.g; entries for g outside R are ignored
    // by callers and must be set to d itself by the factory helpers below.
    // The right-action law is checked exhaustively at construction.
    TileDesignSet(std::vector<std::string> designs, DihGroup ambient,
                  std::vector<std::array<int, kDihCount>> action);

    int size() const { return static_cast<int>(designs_.size()); }
    const std::vector<std::string>& designs() const { return designs_; }
    const DihGroup& ambient() const { return ambient_; }
    int act(int design, Dih g) const;
    int index_of(const std::string& design) const;  // throws on unknown design

private:
    std::vector<std::string> designs_;
    DihGroup ambient_;
    std::vector<std::array<int, kDihCount>> action_;
};

// Orbit census by stabilizer conjugacy class (the tuple O^R_S).
struct OrbitSpec {
    DihGroup R;
    // One entry per class of subgroup_classes(R), in that order.
    std::vector<std::pair<DihGroup, long>> counts;

    long total_designs() const;
    bool operator==(const OrbitSpec&) const = default;
};

// {g in R : d.g = d}.
DihGroup stabilizer(int design, const TileDesignSet& ts);

OrbitSpec classify_orbits(const TileDesignSet& ts);

long fixed_design_count(const TileDesignSet& ts, Dih g);
// Coset-counting path: sum over classes of count * |{cosets Sx : x g x^-1 in S}|.
long fixed_design_count(const OrbitSpec& spec, Dih g);

// Canonical explicit witness: right cosets S\R with the natural action.
TileDesignSet realize_orbit_spec(const OrbitSpec& spec);

FixedDesignTable fixed_design_table(const TileDesignSet& ts);
FixedDesignTable fixed_design_table(const OrbitSpec& spec);

// Built-in libraries.
TileDesignSet builtin_two_color(const DihGroup& R);      // black/white, all fixed
TileDesignSet builtin_truchet_diagonal();                // 4 quarter-turns, R = D8
TileDesignSet builtin_d4_twelve();                       // the 12-design D4 set
// Resolves "two-color", "truchet-diagonal", "d4-twelve"; R is the group the
// set will be used with (two-color adapts, the others fix their ambient R).
TileDesignSet builtin_tileset(const std::string& name, const DihGroup& R);
std::vector<std::string> builtin_tileset_names();

}  // namespace tilecount
