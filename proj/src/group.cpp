#include "tilecount/group.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tilecount {
namespace {

constexpr std::array<const char*, 8> kNames = {"id", "r",  "r2",  "r3",
                                               "f",  "rf", "r2f", "r3f"};

// Each element as a signed 2x2 matrix acting on centered coordinates by
// row-vector multiplication: (u,v) . g = (u,v) M_g. Composition of actions is
// then matrix multiplication, which yields the group table.
struct Mat2 {
    int a, b, c, d;  // rows (a b) (c d)
    bool operator==(const Mat2&) const = default;
};

constexpr std::array<Mat2, 8> kMats = {{
    {1, 0, 0, 1},    // id
    {0, 1, -1, 0},   // r:   (u,v) -> (-v, u)
    {-1, 0, 0, -1},  // r2
    {0, -1, 1, 0},   // r3
    {-1, 0, 0, 1},   // f:   (u,v) -> (-u, v)
    {0, 1, 1, 0},    // rf:  swap
    {1, 0, 0, -1},   // r2f
    {0, -1, -1, 0},  // r3f
}};

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

struct MulTable {
    std::array<std::array<uint8_t, 8>, 8> mul;
    std::array<uint8_t, 8> inv;
    MulTable() {
        for (int i = 0; i < 8; ++i) {
            for (int j = 0; j < 8; ++j) {
                Mat2 prod = mat_mul(kMats[i], kMats[j]);
                int k = 0;
                while (!(kMats[k] == prod)) ++k;
                mul[i][j] = static_cast<uint8_t>(k);
                if (k == 0) inv[i] = static_cast<uint8_t>(j);
            }
        }
    }
};

const MulTable& table() {
    static const MulTable t;
    return t;
}

long mod(long v, long n) { return ((v % n) + n) % n; }

// The coordinate automorphism phi_g used by the semidirect products; psi on
// the cylinder is its restriction to the first coordinate.
std::pair<long, long> phi(Dih g, long x, long y) {
    switch (g) {
        case Dih::Id:  return {x, y};
        case Dih::R:   return {y, -x};
        case Dih::R2:  return {-x, -y};
        case Dih::R3:  return {-y, x};
        case Dih::F:   return {-x, y};
        case Dih::RF:  return {y, x};
        case Dih::R2F: return {x, -y};
        case Dih::R3F: return {-y, -x};
    }
    throw std::logic_error("phi: bad element");
}

}  // namespace

const char* dih_name(Dih g) { return kNames[static_cast<int>(g)]; }

std::optional<Dih> parse_dih(std::string_view name) {
    for (int i = 0; i < 8; ++i) {
        if (name == kNames[i]) return static_cast<Dih>(i);
    }
    return std::nullopt;
}

Dih dihedral_mul(Dih g1, Dih g2) {
    return static_cast<Dih>(table().mul[static_cast<int>(g1)][static_cast<int>(g2)]);
}

Dih dihedral_inverse(Dih g) {
    return static_cast<Dih>(table().inv[static_cast<int>(g)]);
}

Dih dihedral_pow(Dih g, long k) {
    if (k < 0) return dihedral_pow(dihedral_inverse(g), -k);
    Dih out = Dih::Id;
    for (long i = 0; i < k % 4; ++i) out = dihedral_mul(out, g);
    // Every element has order dividing 4, so k mod 4 suffices.
    return out;
}

bool is_square_only(Dih g) {
    return g == Dih::R || g == Dih::R3 || g == Dih::RF || g == Dih::R3F;
}

DihGroup DihGroup::closure(const std::vector<Dih>& generators) {
    uint8_t mask = 1;  // id
    bool grew = true;
    for (Dih g : generators) mask |= 1u << static_cast<int>(g);
    while (grew) {
        grew = false;
        for (int i = 0; i < 8; ++i) {
            if (!(mask & (1u << i))) continue;
            for (int j = 0; j < 8; ++j) {
                if (!(mask & (1u << j))) continue;
                int k = table().mul[i][j];
                if (!(mask & (1u << k))) {
                    mask |= 1u << k;
                    grew = true;
                }
            }
        }
    }
    return DihGroup(mask);
}

DihGroup DihGroup::from_mask(uint8_t mask) {
    if (!(mask & 1)) throw std::invalid_argument("DihGroup: missing identity");
    for (int i = 0; i < 8; ++i) {
        if (!(mask & (1u << i))) continue;
        for (int j = 0; j < 8; ++j) {
            if (!(mask & (1u << j))) continue;
            if (!(mask & (1u << table().mul[i][j]))) {
                throw std::invalid_argument("DihGroup: not closed under multiplication");
            }
        }
    }
    return DihGroup(mask);
}

DihGroup DihGroup::d4() { return closure({Dih::R2, Dih::F}); }
DihGroup DihGroup::c4() { return closure({Dih::R}); }

std::optional<DihGroup> DihGroup::parse(std::string_view name) {
    if (name == "D8") return d8();
    if (name == "D4") return d4();
    if (name == "C4") return c4();
    if (name == "trivial" || name == "id" || name.empty()) return trivial();
    std::vector<Dih> gens;
    size_t pos = 0;
    while (pos <= name.size()) {
        size_t comma = name.find(',', pos);
        std::string_view tok = name.substr(
            pos, comma == std::string_view::npos ? name.size() - pos : comma - pos);
        auto g = parse_dih(tok);
        if (!g) return std::nullopt;
        gens.push_back(*g);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return closure(gens);
}

int DihGroup::order() const { return __builtin_popcount(mask_); }

std::vector<Dih> DihGroup::elements() const {
    std::vector<Dih> out;
    for (int i = 0; i < 8; ++i) {
        if (mask_ & (1u << i)) out.push_back(static_cast<Dih>(i));
    }
    return out;
}

bool DihGroup::rectangle_ok() const {
    for (Dih g : elements()) {
        if (is_square_only(g)) return false;
    }
    return true;
}

DihGroup DihGroup::conjugated_by(Dih h) const {
    uint8_t out = 0;
    Dih hinv = dihedral_inverse(h);
    for (Dih g : elements()) {
        Dih c = dihedral_mul(dihedral_mul(hinv, g), h);
        out |= 1u << static_cast<int>(c);
    }
    return DihGroup(out);
}

std::vector<std::string> DihGroup::sorted_element_names() const {
    std::vector<std::string> names;
    for (Dih g : elements()) names.emplace_back(dih_name(g));
    std::sort(names.begin(), names.end());
    return names;
}

std::string DihGroup::name() const {
    if (*this == d8()) return "D8";
    if (*this == d4()) return "D4";
    if (*this == c4()) return "C4";
    if (*this == trivial()) return "trivial";
    // Minimal generating set, chosen deterministically in name order.
    std::vector<Dih> by_name = elements();
    std::sort(by_name.begin(), by_name.end(), [](Dih a, Dih b) {
        return std::string_view(dih_name(a)) < dih_name(b);
    });
    for (Dih g : by_name) {
        if (closure({g}) == *this) return dih_name(g);
    }
    for (Dih g1 : by_name) {
        for (Dih g2 : by_name) {
            if (closure({g1, g2}) == *this) {
                return std::string(dih_name(g1)) + "," + dih_name(g2);
            }
        }
    }
    // Two generators always suffice for subgroups of D8.
    throw std::logic_error("DihGroup::name: no generating pair found");
}

std::vector<DihGroup> all_subgroups(const DihGroup& R) {
    std::vector<DihGroup> subs;
    for (int mask = 1; mask < 256; ++mask) {
        if (!(mask & 1)) continue;
        if (static_cast<uint8_t>(mask) & ~R.mask()) continue;
        try {
            subs.push_back(DihGroup::from_mask(static_cast<uint8_t>(mask)));
        } catch (const std::invalid_argument&) {
        }
    }
    std::sort(subs.begin(), subs.end(), [](const DihGroup& a, const DihGroup& b) {
        return a.sorted_element_names() < b.sorted_element_names();
    });
    return subs;
}

std::vector<SubgroupClass> subgroup_classes(const DihGroup& R) {
    std::vector<DihGroup> subs = all_subgroups(R);
    std::vector<SubgroupClass> classes;
    std::vector<bool> used(subs.size(), false);
    for (size_t i = 0; i < subs.size(); ++i) {
        if (used[i]) continue;
        SubgroupClass cls;
        for (Dih h : R.elements()) {
            DihGroup conj = subs[i].conjugated_by(h);
            for (size_t j = 0; j < subs.size(); ++j) {
                if (!used[j] && subs[j] == conj) {
                    used[j] = true;
                    cls.conjugates.push_back(subs[j]);
                }
            }
        }
        std::sort(cls.conjugates.begin(), cls.conjugates.end(),
                  [](const DihGroup& a, const DihGroup& b) {
                      return a.sorted_element_names() < b.sorted_element_names();
                  });
        cls.representative = cls.conjugates.front();
        classes.push_back(std::move(cls));
    }
    return classes;
}

const char* surface_name(Surface s) {
    switch (s) {
        case Surface::Grid: return "grid";
        case Surface::Cylinder: return "cylinder";
        case Surface::Torus: return "torus";
    }
    throw std::logic_error("surface_name: bad surface");
}

std::optional<Surface> parse_surface(std::string_view name) {
    if (name == "grid") return Surface::Grid;
    if (name == "cylinder") return Surface::Cylinder;
    if (name == "torus") return Surface::Torus;
    return std::nullopt;
}

Cell act_cell(Cell c, Dih g, const GridShape& shape) {
    const long n = shape.n, m = shape.m;
    if (is_square_only(g) && n != m) {
        throw std::invalid_argument("act_cell: square-only element on non-square shape");
    }
    switch (g) {
        case Dih::Id:  return {c.x, c.y};
        case Dih::R:   return {n - 1 - c.y, c.x};
        case Dih::R2:  return {n - 1 - c.x, m - 1 - c.y};
        case Dih::R3:  return {c.y, n - 1 - c.x};
        case Dih::F:   return {n - 1 - c.x, c.y};
        case Dih::RF:  return {c.y, c.x};
        case Dih::R2F: return {c.x, m - 1 - c.y};
        case Dih::R3F: return {n - 1 - c.y, n - 1 - c.x};
    }
    throw std::logic_error("act_cell: bad element");
}

SymmetryElement make_symmetry(long shift_x, long shift_y, Dih g,
                              const GridShape& shape) {
    switch (shape.surface) {
        case Surface::Grid:
            if (shift_x != 0 || shift_y != 0) {
                throw std::invalid_argument("make_symmetry: grid admits no shifts");
            }
            break;
        case Surface::Cylinder:
            if (shift_y != 0) {
                throw std::invalid_argument("make_symmetry: cylinder shifts columns only");
            }
            if (is_square_only(g)) {
                throw std::invalid_argument(
                    "make_symmetry: cylinder symmetry is restricted to D4");
            }
            break;
        case Surface::Torus:
            break;
    }
    if (is_square_only(g) && shape.n != shape.m) {
        throw std::invalid_argument("make_symmetry: square-only element needs n = m");
    }
    return {mod(shift_x, shape.n), mod(shift_y, shape.m), g};
}

Cell act_cell_sym(Cell c, const SymmetryElement& s, const GridShape& shape) {
    Cell shifted = {mod(c.x + s.shift_x, shape.n), mod(c.y + s.shift_y, shape.m)};
    return act_cell(shifted, s.g, shape);
}

SymmetryElement semidirect_mul(const SymmetryElement& s1,
                               const SymmetryElement& s2,
                               const GridShape& shape) {
    auto [px, py] = phi(s1.g, s2.shift_x, s2.shift_y);
    return make_symmetry(s1.shift_x + px, s1.shift_y + py,
                         dihedral_mul(s1.g, s2.g), shape);
}

SymmetryElement semidirect_inverse(const SymmetryElement& s,
                                   const GridShape& shape) {
    SymmetryElement acc = s;
    SymmetryElement prev = make_symmetry(0, 0, Dih::Id, shape);
    while (!(acc == SymmetryElement{0, 0, Dih::Id})) {
        prev = acc;
        acc = semidirect_mul(acc, s, shape);
        // reaches the identity since the group is finite
        if (acc == prev) throw std::logic_error("semidirect_inverse: no cycle");
    }
    // prev * s = id, but we need s * x = id; in a finite group both hold for
    // the same x, namely s^(ord-1).
    return prev == SymmetryElement{0, 0, Dih::Id} ? s : prev;
}

long symmetry_order(const SymmetryElement& s, const GridShape& shape) {
    SymmetryElement acc = s;
    long ord = 1;
    while (!(acc == SymmetryElement{0, 0, Dih::Id})) {
        acc = semidirect_mul(acc, s, shape);
        ++ord;
    }
    return ord;
}

std::vector<std::vector<Cell>> cell_orbits(const SymmetryElement& s,
                                           const GridShape& shape) {
    const long n = shape.n, m = shape.m;
    std::vector<bool> seen(static_cast<size_t>(n * m), false);
    std::vector<std::vector<Cell>> orbits;
    for (long y = 0; y < m; ++y) {
        for (long x = 0; x < n; ++x) {
            if (seen[static_cast<size_t>(y * n + x)]) continue;
            std::vector<Cell> orbit;
            Cell c = {x, y};
            do {
                seen[static_cast<size_t>(c.y * n + c.x)] = true;
                orbit.push_back(c);
                c = act_cell_sym(c, s, shape);
            } while (!(c == Cell{x, y}));
            orbits.push_back(std::move(orbit));
        }
    }
    return orbits;
}

std::vector<SymmetryElement> full_symmetry_group(const DihGroup& R,
                                                 const GridShape& shape) {
    check_group_for_surface(R, shape);
    std::vector<SymmetryElement> out;
    const long nx = shape.surface == Surface::Grid ? 1 : shape.n;
    const long ny = shape.surface == Surface::Torus ? shape.m : 1;
    for (long a = 0; a < nx; ++a) {
        for (long b = 0; b < ny; ++b) {
            for (Dih g : R.elements()) {
                out.push_back(make_symmetry(a, b, g, shape));
            }
        }
    }
    return out;
}

void check_group_for_surface(const DihGroup& R, const GridShape& shape) {
    if (shape.n < 1 || shape.m < 1) {
        throw std::invalid_argument("shape dimensions must be positive");
    }
    if (R.rectangle_ok()) return;
    if (shape.surface == Surface::Cylinder) {
        throw std::invalid_argument("cylinder symmetry is restricted to subgroups of D4");
    }
    if (shape.n != shape.m) {
        throw std::invalid_argument("square-only symmetries need n = m");
    }
}

}  // namespace tilecount
