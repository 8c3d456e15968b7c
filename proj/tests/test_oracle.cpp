#include <doctest.h>

#include "tilecount/count.hpp"
#include "tilecount/oracle.hpp"

using namespace tilecount;

TEST_CASE("fixed_count_direct") {
    GridShape grid{2, 2, Surface::Grid};
    TileDesignSet two = builtin_two_color(DihGroup::d8());
    CHECK(fixed_count_direct(make_symmetry(0, 0, Dih::Id, grid), grid, two) == 16);
    CHECK(fixed_count_direct(make_symmetry(0, 0, Dih::RF, grid), grid, two) == 8);

    GridShape torus{2, 2, Surface::Torus};
    CHECK(fixed_count_direct(make_symmetry(1, 1, Dih::Id, torus), torus, two) == 4);
}

TEST_CASE("budget refusal") {
    GridShape big{4, 4, Surface::Grid};
    TileDesignSet truchet = builtin_truchet_diagonal();
    OracleBudget tiny{100, 100, false};
    CHECK_THROWS_AS(
        fixed_count_direct(make_symmetry(0, 0, Dih::Id, big), big, truchet, tiny),
        BudgetExceeded);
    tiny.override_limits = true;
    CHECK_NOTHROW(
        fixed_count_direct(make_symmetry(0, 0, Dih::R2, big), big, truchet, tiny));
}

TEST_CASE("orbit formula equals direct count") {
    // The central counting identity, checked element by element.
    TileDesignSet truchet = builtin_truchet_diagonal();
    TileDesignSet twelve = builtin_d4_twelve();
    TileDesignSet two = builtin_two_color(DihGroup::d8());

    GridShape t33{3, 3, Surface::Grid};
    CHECK(fixed_count_orbit_formula(make_symmetry(0, 0, Dih::Id, t33), t33, two) ==
          big_pow(2, 9));
    CHECK(fixed_count_orbit_formula(make_symmetry(0, 0, Dih::R2, t33), t33, two) == 32);

    for (Surface surface : {Surface::Grid, Surface::Cylinder, Surface::Torus}) {
        for (long n = 1; n <= 3; ++n) {
            for (long m = 1; m <= 3; ++m) {
                GridShape shape{n, m, surface};
                DihGroup R = (n == m && surface != Surface::Cylinder)
                                 ? DihGroup::d8()
                                 : DihGroup::d4();
                for (const TileDesignSet* ts : {&truchet, &twelve, &two}) {
                    DihGroup Rts = R.is_subgroup_of(ts->ambient()) ? R : DihGroup::d4();
                    if (!Rts.is_subgroup_of(ts->ambient())) continue;
                    if (state_count(shape, *ts) > OracleBudget{}.max_states) continue;
                    for (const auto& s : full_symmetry_group(Rts, shape)) {
                        CHECK(fixed_count_direct(s, shape, *ts) ==
                              fixed_count_orbit_formula(s, shape, *ts));
                    }
                }
            }
        }
    }
}

TEST_CASE("count_orbits_direct matches the known anchors") {
    TileDesignSet truchet = builtin_truchet_diagonal();
    GridShape grid{2, 2, Surface::Grid};
    CHECK(count_orbits_direct(full_symmetry_group(DihGroup::d8(), grid), grid,
                              truchet) == 43);

    GridShape torus{2, 2, Surface::Torus};
    auto group = full_symmetry_group(DihGroup::d8(), torus);
    CHECK(group.size() == 32);
    CHECK(count_orbits_direct(group, torus, truchet) == 17);

    GridShape single{1, 1, Surface::Grid};
    CHECK(count_orbits_direct(full_symmetry_group(DihGroup::trivial(), single),
                              single, truchet) == 4);

    // Non-closed element list is rejected.
    GridShape t22{2, 2, Surface::Torus};
    // (1,0,r) squares to ((1,1), r2), which is missing from the list.
    std::vector<SymmetryElement> bad = {make_symmetry(0, 0, Dih::Id, t22),
                                        make_symmetry(1, 0, Dih::R, t22)};
    CHECK_THROWS_AS(count_orbits_direct(bad, t22, truchet), std::invalid_argument);
}

TEST_CASE("flood fill agrees with Burnside at tiny scale") {
    TileDesignSet two = builtin_two_color(DihGroup::d8());
    TileDesignSet truchet = builtin_truchet_diagonal();
    for (Surface surface : {Surface::Grid, Surface::Cylinder, Surface::Torus}) {
        for (long n = 1; n <= 3; ++n) {
            for (long m = 1; m <= 2; ++m) {
                if (n * m > 6) continue;
                GridShape shape{n, m, surface};
                DihGroup R = (n == m && surface != Surface::Cylinder)
                                 ? DihGroup::d8()
                                 : DihGroup::d4();
                auto group = full_symmetry_group(R, shape);
                CHECK(count_orbits_flood(group, shape, two) ==
                      count_orbits_direct(group, shape, two));
            }
        }
    }
    GridShape t22{2, 2, Surface::Torus};
    auto group = full_symmetry_group(DihGroup::d8(), t22);
    CHECK(count_orbits_flood(group, t22, truchet) == 17);
}

TEST_CASE("orbit representatives") {
    TileDesignSet truchet = builtin_truchet_diagonal();
    GridShape grid{2, 2, Surface::Grid};
    auto group = full_symmetry_group(DihGroup::d8(), grid);
    auto reps = orbit_representatives(group, grid, truchet);
    CHECK(reps.size() == 43);

    // Canonicity: acting and re-canonicalizing returns the same tiling.
    for (const auto& rep : reps) {
        for (const auto& s : group) {
            TilingAssignment moved = act_tiling(rep, s, truchet);
            TilingAssignment least = moved;
            for (const auto& g : group) {
                TilingAssignment candidate = act_tiling(moved, g, truchet);
                if (candidate.cells < least.cells) least = candidate;
            }
            CHECK(least == rep);
        }
    }

    GridShape single{1, 1, Surface::Grid};
    auto trivial_reps = orbit_representatives(
        full_symmetry_group(DihGroup::trivial(), single), single, truchet);
    CHECK(trivial_reps.size() == 4);
}
