#include "tilecount/oracle.hpp"

#include <algorithm>
#include <limits>

namespace tilecount {
namespace {

constexpr unsigned long kHuge = std::numeric_limits<unsigned long>::max();

bool odometer_next(std::vector<uint8_t>& cells, int radix) {
    // Last cell fastest, so ascending enumeration is ascending lexicographic
    // order on the row-major array.
    for (size_t i = cells.size(); i-- > 0;) {
        if (++cells[i] < radix) return true;
        cells[i] = 0;
    }
    return false;
}

size_t cell_index(const Cell& c, const GridShape& shape) {
    return static_cast<size_t>(c.y * shape.n + c.x);
}

// Permutation of cell indices induced by s, and the design relabeling by g.
struct ActionTables {
    std::vector<size_t> cell_perm;    // index of c.s for each cell index of c
    std::vector<uint8_t> design_map;  // d.g
};

ActionTables action_tables(const SymmetryElement& s, const GridShape& shape,
                           const TileDesignSet& ts) {
    ActionTables out;
    out.cell_perm.resize(static_cast<size_t>(shape.n * shape.m));
    for (long y = 0; y < shape.m; ++y) {
        for (long x = 0; x < shape.n; ++x) {
            Cell c{x, y};
            out.cell_perm[cell_index(c, shape)] =
                cell_index(act_cell_sym(c, s, shape), shape);
        }
    }
    out.design_map.resize(static_cast<size_t>(ts.size()));
    for (int d = 0; d < ts.size(); ++d) {
        out.design_map[static_cast<size_t>(d)] =
            static_cast<uint8_t>(ts.act(d, s.g));
    }
    return out;
}

void check_budget(unsigned long states, unsigned long limit,
                  const OracleBudget& budget, const char* what) {
    if (states > limit && !budget.override_limits) {
        throw BudgetExceeded(std::string(what) + ": state space too large (" +
                             std::to_string(states) + " states)");
    }
}

void verify_closed(const std::vector<SymmetryElement>& group,
                   const GridShape& shape) {
    bool has_id = false;
    for (const auto& s : group) has_id = has_id || s == SymmetryElement{0, 0, Dih::Id};
    if (!has_id) {
        throw std::invalid_argument("oracle: element list lacks the identity");
    }
    for (const auto& s1 : group) {
        for (const auto& s2 : group) {
            SymmetryElement prod = semidirect_mul(s1, s2, shape);
            if (std::find(group.begin(), group.end(), prod) == group.end()) {
                throw std::invalid_argument(
                    "oracle: element list is not closed under multiplication");
            }
        }
    }
}

}  // namespace

unsigned long state_count(const GridShape& shape, const TileDesignSet& ts) {
    unsigned long states = 1;
    const unsigned long base = static_cast<unsigned long>(ts.size());
    for (long i = 0; i < shape.n * shape.m; ++i) {
        if (states > kHuge / base) return kHuge;
        states *= base;
    }
    return states;
}

BigInt fixed_count_direct(const SymmetryElement& s, const GridShape& shape,
                          const TileDesignSet& ts, const OracleBudget& budget) {
    const unsigned long states = state_count(shape, ts);
    check_budget(states, budget.max_states, budget, "fixed_count_direct");
    const ActionTables tab = action_tables(s, shape, ts);
    const size_t ncells = tab.cell_perm.size();

    std::vector<uint8_t> cells(ncells, 0);
    BigInt fixed = 0;
    do {
        bool ok = true;
        for (size_t i = 0; i < ncells && ok; ++i) {
            ok = cells[tab.cell_perm[i]] == tab.design_map[cells[i]];
        }
        if (ok) ++fixed;
    } while (odometer_next(cells, ts.size()));
    return fixed;
}

BigInt fixed_count_orbit_formula(const SymmetryElement& s, const GridShape& shape,
                                 const FixedDesignTable& t) {
    BigInt product = 1;
    for (const auto& orbit : cell_orbits(s, shape)) {
        product *= t.at(dihedral_pow(s.g, static_cast<long>(orbit.size())));
    }
    return product;
}

BigInt fixed_count_orbit_formula(const SymmetryElement& s, const GridShape& shape,
                                 const TileDesignSet& ts) {
    return fixed_count_orbit_formula(s, shape, fixed_design_table(ts));
}

BigInt count_orbits_direct(const std::vector<SymmetryElement>& group,
                           const GridShape& shape, const TileDesignSet& ts,
                           const OracleBudget& budget) {
    verify_closed(group, shape);
    const unsigned long states = state_count(shape, ts);
    const bool tiny = states <= 200'000 && states <= budget.max_states;
    BigInt sum = 0;
    for (const auto& s : group) {
        sum += tiny ? fixed_count_direct(s, shape, ts, budget)
                    : fixed_count_orbit_formula(s, shape, ts);
    }
    return exact_div(sum, BigInt(group.size()), "oracle Burnside average");
}

TilingAssignment act_tiling(const TilingAssignment& f, const SymmetryElement& s,
                            const TileDesignSet& ts) {
    const ActionTables tab = action_tables(s, f.shape, ts);
    TilingAssignment out{f.shape, std::vector<uint8_t>(f.cells.size())};
    for (size_t i = 0; i < f.cells.size(); ++i) {
        out.cells[tab.cell_perm[i]] = tab.design_map[f.cells[i]];
    }
    return out;
}

namespace {

unsigned long encode(const std::vector<uint8_t>& cells, int radix) {
    unsigned long code = 0;
    for (uint8_t v : cells) code = code * static_cast<unsigned long>(radix) + v;
    return code;
}

// Shared walk for flood fill: calls sink(representative) per orbit.
template <typename Sink>
void flood_orbits(const std::vector<SymmetryElement>& group,
                  const GridShape& shape, const TileDesignSet& ts,
                  const OracleBudget& budget, Sink&& sink) {
    verify_closed(group, shape);
    const unsigned long states = state_count(shape, ts);
    check_budget(states, budget.max_flood, budget, "flood fill");

    std::vector<ActionTables> tabs;
    tabs.reserve(group.size());
    for (const auto& s : group) tabs.push_back(action_tables(s, shape, ts));

    const size_t ncells = static_cast<size_t>(shape.n * shape.m);
    std::vector<bool> visited(states, false);
    std::vector<uint8_t> cells(ncells, 0);
    std::vector<uint8_t> image(ncells);
    unsigned long code = 0;
    do {
        if (!visited[code]) {
            // First unvisited in ascending order is the lexicographic least
            // of its orbit.
            for (const auto& tab : tabs) {
                for (size_t i = 0; i < ncells; ++i) {
                    image[tab.cell_perm[i]] = tab.design_map[cells[i]];
                }
                visited[encode(image, ts.size())] = true;
            }
            sink(cells);
        }
        ++code;
    } while (odometer_next(cells, ts.size()));
}

}  // namespace

BigInt count_orbits_flood(const std::vector<SymmetryElement>& group,
                          const GridShape& shape, const TileDesignSet& ts,
                          const OracleBudget& budget) {
    BigInt orbits = 0;
    flood_orbits(group, shape, ts, budget, [&](const std::vector<uint8_t>&) {
        ++orbits;
    });
    return orbits;
}

std::vector<TilingAssignment> orbit_representatives(
    const std::vector<SymmetryElement>& group, const GridShape& shape,
    const TileDesignSet& ts, const OracleBudget& budget) {
    std::vector<TilingAssignment> reps;
    flood_orbits(group, shape, ts, budget, [&](const std::vector<uint8_t>& cells) {
        reps.push_back({shape, cells});
    });
    // Already in ascending order by construction.
    return reps;
}

}  // namespace tilecount
