#pragma once

#include "tilecount/bigint.hpp"
#include "tilecount/group.hpp"
#include "tilecount/tileset.hpp"

namespace tilecount {

// Closed-form fixed-point counts, element by element. Each function returns
// the number of tilings fixed by g (grid), or the sum over all shifts of the
// tilings fixed by (shift, g) (cylinder and torus).

BigInt fxpt_grid(Dih g, long n, long m, const FixedDesignTable& t);
BigInt fxpt_cylinder(Dih g, long n, long m, const FixedDesignTable& t);
BigInt fxpt_torus(Dih g, long n, long m, const FixedDesignTable& t);

// Burnside totals. Divisibility of the sum by the group order is asserted,
// never rounded.
BigInt count_grid(long n, long m, const DihGroup& R, const FixedDesignTable& t);
BigInt count_cylinder(long n, long m, const DihGroup& R, const FixedDesignTable& t);
BigInt count_torus(long n, long m, const DihGroup& R, const FixedDesignTable& t);

// Dispatch on surface.
BigInt count_tilings(const GridShape& shape, const DihGroup& R,
                     const FixedDesignTable& t);
BigInt fxpt_surface(Surface surface, Dih g, long n, long m,
                    const FixedDesignTable& t);

}  // namespace tilecount
