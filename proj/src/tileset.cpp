#include "tilecount/tileset.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tilecount {

long FixedDesignTable::at(Dih g) const {
    if (!R.contains(g)) {
        throw std::invalid_argument(std::string("t_g undefined: ") + dih_name(g) +
                                    " not in " + R.name());
    }
    return t[static_cast<size_t>(g)];
}

TileDesignSet::TileDesignSet(std::vector<std::string> designs, DihGroup ambient,
                             std::vector<std::array<int, kDihCount>> action)
    : designs_(std::move(designs)), ambient_(ambient), action_(std::move(action)) {
    const int n = static_cast<int>(designs_.size());
    if (n == 0) throw std::invalid_argument("TileDesignSet: empty design list");
    if (static_cast<int>(action_.size()) != n) {
        throw std::invalid_argument("TileDesignSet: action table size mismatch");
    }
    std::set<std::string> uniq(designs_.begin(), designs_.end());
    if (static_cast<int>(uniq.size()) != n) {
        throw std::invalid_argument("TileDesignSet: duplicate design identifiers");
    }
    for (int d = 0; d < n; ++d) {
        for (Dih g : ambient_.elements()) {
            int img = action_[d][static_cast<size_t>(g)];
            if (img < 0 || img >= n) {
                throw std::invalid_argument("TileDesignSet: action image out of range");
            }
        }
        if (action_[d][static_cast<size_t>(Dih::Id)] != d) {
            throw std::invalid_argument("TileDesignSet: identity must act trivially");
        }
    }
    // Right-action law: (d.g1).g2 = d.(g1 g2), exhaustively.
    for (int d = 0; d < n; ++d) {
        for (Dih g1 : ambient_.elements()) {
            for (Dih g2 : ambient_.elements()) {
                int lhs = act(act(d, g1), g2);
                int rhs = act(d, dihedral_mul(g1, g2));
                if (lhs != rhs) {
                    throw std::invalid_argument(
                        "TileDesignSet: action table violates the right-action law");
                }
            }
        }
    }
}

int TileDesignSet::act(int design, Dih g) const {
    if (!ambient_.contains(g)) {
        throw std::invalid_argument(std::string("TileDesignSet: element ") +
                                    dih_name(g) + " outside ambient group");
    }
    return action_[static_cast<size_t>(design)][static_cast<size_t>(g)];
}

int TileDesignSet::index_of(const std::string& design) const {
    auto it = std::find(designs_.begin(), designs_.end(), design);
    if (it == designs_.end()) {
        throw std::invalid_argument("unknown design: " + design);
    }
    return static_cast<int>(it - designs_.begin());
}

long OrbitSpec::total_designs() const {
    long total = 0;
    for (const auto& [sub, count] : counts) {
        total += count * (R.order() / sub.order());
    }
    return total;
}

DihGroup stabilizer(int design, const TileDesignSet& ts) {
    if (design < 0 || design >= ts.size()) {
        throw std::invalid_argument("stabilizer: unknown design");
    }
    std::vector<Dih> fixing;
    for (Dih g : ts.ambient().elements()) {
        if (ts.act(design, g) == design) fixing.push_back(g);
    }
    return DihGroup::closure(fixing);
}

OrbitSpec classify_orbits(const TileDesignSet& ts) {
    const DihGroup& R = ts.ambient();
    std::vector<SubgroupClass> classes = subgroup_classes(R);
    OrbitSpec spec{R, {}};
    for (const auto& cls : classes) spec.counts.emplace_back(cls.representative, 0);

    std::vector<bool> seen(static_cast<size_t>(ts.size()), false);
    for (int d = 0; d < ts.size(); ++d) {
        if (seen[static_cast<size_t>(d)]) continue;
        int orbit_size = 0;
        for (Dih g : R.elements()) {
            int img = ts.act(d, g);
            if (!seen[static_cast<size_t>(img)]) {
                seen[static_cast<size_t>(img)] = true;
                ++orbit_size;
            }
        }
        DihGroup stab = stabilizer(d, ts);
        if (orbit_size * stab.order() != R.order()) {
            throw std::logic_error("classify_orbits: orbit-stabilizer violation");
        }
        bool matched = false;
        for (size_t i = 0; i < classes.size(); ++i) {
            const auto& conj = classes[i].conjugates;
            if (std::find(conj.begin(), conj.end(), stab) != conj.end()) {
                ++spec.counts[i].second;
                matched = true;
                break;
            }
        }
        if (!matched) throw std::logic_error("classify_orbits: stabilizer class not found");
    }
    return spec;
}

long fixed_design_count(const TileDesignSet& ts, Dih g) {
    if (!ts.ambient().contains(g)) {
        throw std::invalid_argument("fixed_design_count: element outside ambient group");
    }
    long count = 0;
    for (int d = 0; d < ts.size(); ++d) {
        if (ts.act(d, g) == d) ++count;
    }
    return count;
}

long fixed_design_count(const OrbitSpec& spec, Dih g) {
    if (!spec.R.contains(g)) {
        throw std::invalid_argument("fixed_design_count: element outside R");
    }
    long total = 0;
    for (const auto& [sub, count] : spec.counts) {
        if (count == 0) continue;
        // Right cosets Sx; x g x^-1 in S is coset-invariant.
        std::set<uint8_t> seen_cosets;
        long fixed_cosets = 0;
        for (Dih x : spec.R.elements()) {
            uint8_t coset_key = 0;
            for (Dih s : sub.elements()) {
                coset_key |= 1u << static_cast<int>(dihedral_mul(s, x));
            }
            if (!seen_cosets.insert(coset_key).second) continue;
            Dih conj = dihedral_mul(dihedral_mul(x, g), dihedral_inverse(x));
            if (sub.contains(conj)) ++fixed_cosets;
        }
        total += count * fixed_cosets;
    }
    return total;
}

TileDesignSet realize_orbit_spec(const OrbitSpec& spec) {
    const DihGroup& R = spec.R;
    std::vector<std::string> names;
    std::vector<std::array<int, kDihCount>> action;

    // Designs are right cosets Sx, one orbit per requested count; the coset
    // is keyed by its least element so identifiers are deterministic.
    struct Coset {
        uint8_t mask;
        Dih least;
    };
    for (size_t ci = 0; ci < spec.counts.size(); ++ci) {
        const auto& [sub, count] = spec.counts[ci];
        std::vector<Coset> cosets;
        for (Dih x : R.elements()) {
            uint8_t mask = 0;
            for (Dih s : sub.elements()) {
                mask |= 1u << static_cast<int>(dihedral_mul(s, x));
            }
            bool known = false;
            for (const auto& c : cosets) known = known || c.mask == mask;
            if (!known) {
                Dih least = Dih::Id;
                for (int i = 0; i < kDihCount; ++i) {
                    if (mask & (1u << i)) {
                        least = static_cast<Dih>(i);
                        break;
                    }
                }
                cosets.push_back({mask, least});
            }
        }
        for (long orbit = 0; orbit < count; ++orbit) {
            int base = static_cast<int>(names.size());
            for (const auto& c : cosets) {
                names.push_back("s" + std::to_string(ci) + "o" +
                                std::to_string(orbit) + "x" + dih_name(c.least));
            }
            for (size_t k = 0; k < cosets.size(); ++k) {
                std::array<int, kDihCount> row{};
                for (int i = 0; i < kDihCount; ++i) row[static_cast<size_t>(i)] = base + static_cast<int>(k);
                for (Dih g : R.elements()) {
                    uint8_t img_mask = 0;
                    for (int i = 0; i < kDihCount; ++i) {
                        if (cosets[k].mask & (1u << i)) {
                            img_mask |= 1u << static_cast<int>(
                                            dihedral_mul(static_cast<Dih>(i), g));
                        }
                    }
                    int img = -1;
                    for (size_t j = 0; j < cosets.size(); ++j) {
                        if (cosets[j].mask == img_mask) img = base + static_cast<int>(j);
                    }
                    if (img < 0) throw std::logic_error("realize_orbit_spec: coset action escaped");
                    row[static_cast<size_t>(g)] = img;
                }
                action.push_back(row);
            }
        }
    }
    if (names.empty()) {
        throw std::invalid_argument("realize_orbit_spec: spec has no orbits");
    }
    return TileDesignSet(std::move(names), R, std::move(action));
}

FixedDesignTable fixed_design_table(const TileDesignSet& ts) {
    FixedDesignTable out{ts.ambient(), {}};
    for (Dih g : ts.ambient().elements()) {
        out.t[static_cast<size_t>(g)] = fixed_design_count(ts, g);
    }
    return out;
}

FixedDesignTable fixed_design_table(const OrbitSpec& spec) {
    FixedDesignTable out{spec.R, {}};
    for (Dih g : spec.R.elements()) {
        out.t[static_cast<size_t>(g)] = fixed_design_count(spec, g);
    }
    return out;
}

namespace {

// Helper: derive a design's full action row from its image under the action
// of R on a reference grid of cells, used by the built-in sets.
std::array<int, kDihCount> identity_row(int d) {
    std::array<int, kDihCount> row{};
    row.fill(d);
    return row;
}

}  // namespace

TileDesignSet builtin_two_color(const DihGroup& R) {
    return TileDesignSet({"black", "white"}, R, {identity_row(0), identity_row(1)});
}

TileDesignSet builtin_truchet_diagonal() {
    // Quarter-turn family of the diagonal half-square tile; each design is
    // identified with the corner cell of a 2x2 grid its triangle occupies,
    // so the D8 action on designs is the cell action on corners.
    const GridShape square{2, 2, Surface::Grid};
    const std::vector<Cell> corners = {{0, 1}, {1, 1}, {1, 0}, {0, 0}};  // nw ne se sw
    const std::vector<std::string> names = {"nw", "ne", "se", "sw"};
    std::vector<std::array<int, kDihCount>> action;
    for (size_t d = 0; d < corners.size(); ++d) {
        std::array<int, kDihCount> row{};
        for (Dih g : kDihElements) {
            Cell img = act_cell(corners[d], g, square);
            int idx = -1;
            for (size_t j = 0; j < corners.size(); ++j) {
                if (corners[j] == img) idx = static_cast<int>(j);
            }
            row[static_cast<size_t>(g)] = idx;
        }
        action.push_back(row);
    }
    return TileDesignSet(names, DihGroup::d8(), std::move(action));
}

TileDesignSet builtin_d4_twelve() {
    // The 12-design D4 set: two fully symmetric designs, one <f> orbit,
    // two <r2> orbits, and one free orbit (the four corner designs).
    const DihGroup R = DihGroup::d4();
    std::vector<std::string> names = {"black", "vstripe", "u",   "d",
                                      "rr1",   "rr2",     "rr3", "rr0",
                                      "nw",    "ne",      "se",  "sw"};
    auto row = [](int id_img, int r2_img, int f_img, int r2f_img) {
        std::array<int, kDihCount> out{};
        out.fill(-1);
        out[static_cast<size_t>(Dih::Id)] = id_img;
        out[static_cast<size_t>(Dih::R2)] = r2_img;
        out[static_cast<size_t>(Dih::F)] = f_img;
        out[static_cast<size_t>(Dih::R2F)] = r2f_img;
        // pad unused (square-only) slots with the design itself
        for (auto& v : out) {
            if (v < 0) v = id_img;
        }
        return out;
    };
    std::vector<std::array<int, kDihCount>> action = {
        row(0, 0, 0, 0),    // black: fixed by everything
        row(1, 1, 1, 1),    // vstripe
        row(2, 3, 2, 3),    // u: fixed by f, flipped to d by r2
        row(3, 2, 3, 2),    // d
        row(4, 4, 5, 5),    // rr1: fixed by r2, mirrored by f
        row(5, 5, 4, 4),    // rr2
        row(6, 6, 7, 7),    // rr3
        row(7, 7, 6, 6),    // rr0
        row(8, 10, 9, 11),  // nw -> se under r2, ne under f, sw under r2f
        row(9, 11, 8, 10),  // ne
        row(10, 8, 11, 9),  // se
        row(11, 9, 10, 8),  // sw
    };
    return TileDesignSet(std::move(names), R, std::move(action));
}

TileDesignSet builtin_tileset(const std::string& name, const DihGroup& R) {
    if (name == "two-color") return builtin_two_color(R);
    if (name == "truchet-diagonal") {
        TileDesignSet ts = builtin_truchet_diagonal();
        if (!R.is_subgroup_of(ts.ambient())) {
            throw std::invalid_argument("truchet-diagonal: group exceeds D8");
        }
        return ts;
    }
    if (name == "d4-twelve") {
        TileDesignSet ts = builtin_d4_twelve();
        if (!R.is_subgroup_of(ts.ambient())) {
            throw std::invalid_argument("d4-twelve is a D4 set; group must be within D4");
        }
        return ts;
    }
    throw std::invalid_argument("unknown built-in tile set: " + name);
}

std::vector<std::string> builtin_tileset_names() {
    return {"two-color", "truchet-diagonal", "d4-twelve"};
}

}  // namespace tilecount
