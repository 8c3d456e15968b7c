#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "tilecount/tileset.hpp"

using namespace tilecount;

namespace {

// Random orbit spec over R with up to max_orbits orbits in total.
OrbitSpec random_spec(const DihGroup& R, std::mt19937& rng, int max_orbits) {
    auto classes = subgroup_classes(R);
    OrbitSpec spec{R, {}};
    for (const auto& cls : classes) spec.counts.emplace_back(cls.representative, 0);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(classes.size()) - 1);
    std::uniform_int_distribution<int> how_many(1, max_orbits);
    int orbits = how_many(rng);
    for (int i = 0; i < orbits; ++i) ++spec.counts[static_cast<size_t>(pick(rng))].second;
    return spec;
}

DihGroup subgroup_named(const char* name) { return DihGroup::parse(name).value(); }

}  // namespace

TEST_CASE("action law validation rejects bad tables") {
    // f and r2 images swapped on one design: breaks (d.f).f = d.
    std::vector<std::array<int, kDihCount>> action(2);
    action[0].fill(0);
    action[1].fill(1);
    action[0][static_cast<size_t>(Dih::F)] = 1;  // black.f = white
    CHECK_THROWS_AS(TileDesignSet({"black", "white"}, DihGroup::d4(), action),
                    std::invalid_argument);
}

TEST_CASE("stabilizers in the twelve-design D4 set") {
    TileDesignSet ts = builtin_d4_twelve();
    CHECK(stabilizer(ts.index_of("black"), ts) == ts.ambient());
    CHECK(stabilizer(ts.index_of("u"), ts) == subgroup_named("f"));
    CHECK(stabilizer(ts.index_of("nw"), ts) == DihGroup::trivial());
    CHECK_THROWS_AS(ts.index_of("nope"), std::invalid_argument);
}

TEST_CASE("classify_orbits") {
    SUBCASE("twelve-design D4 example") {
        OrbitSpec spec = classify_orbits(builtin_d4_twelve());
        for (const auto& [sub, count] : spec.counts) {
            if (sub == DihGroup::d4()) CHECK(count == 2);
            else if (sub == subgroup_named("f")) CHECK(count == 1);
            else if (sub == subgroup_named("r2")) CHECK(count == 2);
            else if (sub == subgroup_named("r2f")) CHECK(count == 0);
            else CHECK(count == 1);  // trivial class
        }
        CHECK(spec.total_designs() == 12);
    }
    SUBCASE("two colors are fully symmetric under any R") {
        for (const auto& R : all_subgroups(DihGroup::d8())) {
            OrbitSpec spec = classify_orbits(builtin_two_color(R));
            for (const auto& [sub, count] : spec.counts) {
                CHECK(count == (sub == R ? 2 : 0));
            }
        }
    }
    SUBCASE("truchet quarter-turn family is one orbit, stabilizer order 2") {
        TileDesignSet ts = builtin_truchet_diagonal();
        OrbitSpec spec = classify_orbits(ts);
        long orbits = 0;
        for (const auto& [sub, count] : spec.counts) {
            orbits += count;
            if (count > 0) CHECK(sub.order() == 2);
        }
        CHECK(orbits == 1);
        for (int d = 0; d < ts.size(); ++d) {
            CHECK(4 * stabilizer(d, ts).order() == 8);
        }
    }
}

TEST_CASE("fixed_design_count") {
    TileDesignSet twelve = builtin_d4_twelve();
    CHECK(fixed_design_count(twelve, Dih::Id) == 12);
    CHECK(fixed_design_count(twelve, Dih::F) == 4);
    CHECK(fixed_design_count(twelve, Dih::R2) == 6);
    CHECK(fixed_design_count(twelve, Dih::R2F) == 2);
    CHECK(fixed_design_count(builtin_two_color(DihGroup::d8()), Dih::R2) == 2);
    CHECK_THROWS_AS(fixed_design_count(twelve, Dih::R), std::invalid_argument);

    // Conjugation invariance: t_g = t_{h^-1 g h}.
    TileDesignSet truchet = builtin_truchet_diagonal();
    for (Dih g : kDihElements) {
        for (Dih h : kDihElements) {
            Dih conj = dihedral_mul(dihedral_mul(dihedral_inverse(h), g), h);
            CHECK(fixed_design_count(truchet, g) == fixed_design_count(truchet, conj));
        }
    }
}

TEST_CASE("orbit-stabilizer holds for every design") {
    for (const TileDesignSet& ts :
         {builtin_d4_twelve(), builtin_truchet_diagonal(),
          builtin_two_color(DihGroup::d8())}) {
        for (int d = 0; d < ts.size(); ++d) {
            std::set<int> orbit;
            for (Dih g : ts.ambient().elements()) orbit.insert(ts.act(d, g));
            CHECK(static_cast<int>(orbit.size()) * stabilizer(d, ts).order() ==
                  ts.ambient().order());
        }
    }
}

TEST_CASE("realize_orbit_spec round-trips") {
    SUBCASE("regular orbit under D8") {
        OrbitSpec spec{DihGroup::d8(), {}};
        for (const auto& cls : subgroup_classes(DihGroup::d8())) {
            spec.counts.emplace_back(cls.representative,
                                     cls.representative.order() == 1 ? 1 : 0);
        }
        TileDesignSet ts = realize_orbit_spec(spec);
        CHECK(ts.size() == 8);
        CHECK(classify_orbits(ts) == spec);
    }
    SUBCASE("single fixed design") {
        for (const auto& R : all_subgroups(DihGroup::d8())) {
            OrbitSpec spec{R, {}};
            for (const auto& cls : subgroup_classes(R)) {
                spec.counts.emplace_back(cls.representative,
                                         cls.representative == R ? 1 : 0);
            }
            TileDesignSet ts = realize_orbit_spec(spec);
            CHECK(ts.size() == 1);
            CHECK(classify_orbits(ts) == spec);
        }
    }
    SUBCASE("the twelve-design census round-trips") {
        OrbitSpec spec = classify_orbits(builtin_d4_twelve());
        CHECK(classify_orbits(realize_orbit_spec(spec)) == spec);
    }
}

TEST_CASE("orbit-spec path equals the explicit path") {
    // Every spec with <= 3 orbits over every R <= D8 would be large; cover all
    // single-class choices exhaustively plus random multi-orbit specs.
    for (const auto& R : all_subgroups(DihGroup::d8())) {
        auto classes = subgroup_classes(R);
        for (size_t i = 0; i < classes.size(); ++i) {
            for (long k = 1; k <= 3; ++k) {
                OrbitSpec spec{R, {}};
                for (size_t j = 0; j < classes.size(); ++j) {
                    spec.counts.emplace_back(classes[j].representative,
                                             i == j ? k : 0);
                }
                TileDesignSet ts = realize_orbit_spec(spec);
                for (Dih g : R.elements()) {
                    CHECK(fixed_design_count(spec, g) == fixed_design_count(ts, g));
                }
            }
        }
    }

    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 50; ++trial) {
        for (const auto& R : {DihGroup::d8(), DihGroup::d4(), DihGroup::c4()}) {
            OrbitSpec spec = random_spec(R, rng, 3);
            TileDesignSet ts = realize_orbit_spec(spec);
            CHECK(classify_orbits(ts) == spec);
            for (Dih g : R.elements()) {
                CHECK(fixed_design_count(spec, g) == fixed_design_count(ts, g));
            }
        }
    }
}

TEST_CASE("fixed_design_table") {
    FixedDesignTable t = fixed_design_table(builtin_two_color(DihGroup::d8()));
    for (Dih g : kDihElements) CHECK(t.at(g) == 2);

    FixedDesignTable twelve = fixed_design_table(builtin_d4_twelve());
    CHECK(twelve.at(Dih::Id) == 12);
    CHECK_THROWS_AS(twelve.at(Dih::RF), std::invalid_argument);

    // Spec-path table equals explicit-path table on realized sets.
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        OrbitSpec spec = random_spec(DihGroup::d8(), rng, 4);
        FixedDesignTable a = fixed_design_table(spec);
        FixedDesignTable b = fixed_design_table(realize_orbit_spec(spec));
        for (Dih g : kDihElements) CHECK(a.at(g) == b.at(g));
    }
}

TEST_CASE("tuple lemma: equal censuses give equal tables") {
    // Two explicit sets built differently with the same census.
    TileDesignSet a = builtin_d4_twelve();
    TileDesignSet b = realize_orbit_spec(classify_orbits(a));
    FixedDesignTable ta = fixed_design_table(a);
    FixedDesignTable tb = fixed_design_table(b);
    for (Dih g : a.ambient().elements()) CHECK(ta.at(g) == tb.at(g));
}
