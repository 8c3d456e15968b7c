#pragma once

#include <stdexcept>
#include <vector>

#include "tilecount/bigint.hpp"
#include "tilecount/group.hpp"
#include "tilecount/tileset.hpp"

namespace tilecount {

// A concrete tiling: design index per cell, row-major from the bottom row
// (cell (x,y) at index y*n + x).
struct TilingAssignment {
    GridShape shape;
    std::vector<uint8_t> cells;

    bool operator==(const TilingAssignment& other) const {
        return cells == other.cells;
    }
};

struct OracleBudget {
    unsigned long max_states = 10'000'000;  // direct scan
    unsigned long max_flood = 1'000'000;    // flood fill (stores visited set)
    bool override_limits = false;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |T|^(nm) if it fits the budget check, otherwise a huge sentinel.
unsigned long state_count(const GridShape& shape, const TileDesignSet& ts);

// Brute force over every assignment: counts tilings with
// design(c . s) = design(c) . g for all cells c.
BigInt fixed_count_direct(const SymmetryElement& s, const GridShape& shape,
                          const TileDesignSet& ts, const OracleBudget& budget = {});

// The orbit-product identity: product over cell orbits of t_{g^|orbit|}.
// Cheap; needs no enumeration. Kept independent of fixed_count_direct so each
// can falsify the other.
BigInt fixed_count_orbit_formula(const SymmetryElement& s, const GridShape& shape,
                                 const TileDesignSet& ts);
BigInt fixed_count_orbit_formula(const SymmetryElement& s, const GridShape& shape,
                                 const FixedDesignTable& t);

// Burnside average over an explicitly listed group (closure is verified).
// Uses the direct scan at tiny scale and the orbit product otherwise.
BigInt count_orbits_direct(const std::vector<SymmetryElement>& group,
                           const GridShape& shape, const TileDesignSet& ts,
                           const OracleBudget& budget = {});

// Orbit count by explicit flood fill over the full tiling space.
BigInt count_orbits_flood(const std::vector<SymmetryElement>& group,
                          const GridShape& shape, const TileDesignSet& ts,
                          const OracleBudget& budget = {});

// The image tiling f.s, with (f.s)(c.s) = f(c).g.
TilingAssignment act_tiling(const TilingAssignment& f, const SymmetryElement& s,
                            const TileDesignSet& ts);

// One lexicographically-least representative per orbit, sorted.
std::vector<TilingAssignment> orbit_representatives(
    const std::vector<SymmetryElement>& group, const GridShape& shape,
    const TileDesignSet& ts, const OracleBudget& budget = {});

}  // namespace tilecount
