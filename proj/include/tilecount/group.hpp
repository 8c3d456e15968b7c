#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tilecount {

// The eight symmetries of the square, D8 = <r, f | r^4 = f^2 = (rf)^2 = id>.
// r is a +90 degree rotation, f the horizontal reflection; the group acts on
// cells on the right (apply the left factor first).
enum class Dih : uint8_t { Id = 0, R, R2, R3, F, RF, R2F, R3F };

inline constexpr int kDihCount = 8;
inline constexpr std::array<Dih, 8> kDihElements = {
    Dih::Id, Dih::R, Dih::R2, Dih::R3, Dih::F, Dih::RF, Dih::R2F, Dih::R3F};

const char* dih_name(Dih g);
std::optional<Dih> parse_dih(std::string_view name);

// g1 * g2 under the right-action convention: apply g1 first, then g2.
Dih dihedral_mul(Dih g1, Dih g2);
Dih dihedral_inverse(Dih g);
Dih dihedral_pow(Dih g, long k);

// Elements only defined on the square: r, r3, rf, r3f.
bool is_square_only(Dih g);

// A subgroup of D8, stored as a bitmask over the 8 elements.
class DihGroup {
public:
    DihGroup() : mask_(1) {}  // trivial subgroup

    static DihGroup closure(const std::vector<Dih>& generators);
    static DihGroup from_mask(uint8_t mask);  // validates subgroup property
    // Accepts aliases "D8", "D4", "C4", "trivial" or a comma-separated
    // generator list such as "r2,f".
    static std::optional<DihGroup> parse(std::string_view name);

    static DihGroup d8() { return from_mask(0xff); }
    static DihGroup d4();     // <r2, f>
    static DihGroup c4();     // <r>
    static DihGroup trivial() { return DihGroup(); }

    bool contains(Dih g) const { return mask_ & (1u << static_cast<int>(g)); }
    int order() const;
    uint8_t mask() const { return mask_; }
    std::vector<Dih> elements() const;
    bool is_subgroup_of(const DihGroup& other) const {
        return (mask_ & ~other.mask_) == 0;
    }
    // True iff no square-only element is present (subgroup of D4).
    bool rectangle_ok() const;

    DihGroup conjugated_by(Dih h) const;  // h^-1 * this * h

    // Alias if one applies, otherwise a minimal generator list like "r2,f".
    std::string name() const;
    // Sorted element names, the canonical ordering key for subgroups.
    std::vector<std::string> sorted_element_names() const;

    bool operator==(const DihGroup&) const = default;

private:
    explicit DihGroup(uint8_t mask) : mask_(mask) {}
    uint8_t mask_;
};

// All subgroups of R, ordered by the canonical key.
std::vector<DihGroup> all_subgroups(const DihGroup& R);

struct SubgroupClass {
    DihGroup representative;          // least member by canonical key
    std::vector<DihGroup> conjugates; // the whole class, sorted
};

// Conjugacy classes of subgroups of R under R-conjugation.
std::vector<SubgroupClass> subgroup_classes(const DihGroup& R);

enum class Surface { Grid, Cylinder, Torus };

const char* surface_name(Surface s);
std::optional<Surface> parse_surface(std::string_view name);

struct GridShape {
    long n = 1;  // columns
    long m = 1;  // rows
    Surface surface = Surface::Grid;
};

struct Cell {
    long x = 0;
    long y = 0;
    bool operator==(const Cell&) const = default;
};

// Right dihedral action on a cell; throws for square-only g when n != m.
Cell act_cell(Cell c, Dih g, const GridShape& shape);

struct SymmetryElement {
    long shift_x = 0;
    long shift_y = 0;
    Dih g = Dih::Id;
    bool operator==(const SymmetryElement&) const = default;
};

// Validates the element against the surface: grid allows no shifts, the
// cylinder shifts columns only and never admits square-only elements, and
// square-only elements require n = m.
SymmetryElement make_symmetry(long shift_x, long shift_y, Dih g,
                              const GridShape& shape);

// Shift first, then the dihedral action.
Cell act_cell_sym(Cell c, const SymmetryElement& s, const GridShape& shape);

// (a1, g1)(a2, g2) = (a1 + phi_{g1}(a2), g1 g2).
SymmetryElement semidirect_mul(const SymmetryElement& s1,
                               const SymmetryElement& s2,
                               const GridShape& shape);
SymmetryElement semidirect_inverse(const SymmetryElement& s,
                                   const GridShape& shape);
long symmetry_order(const SymmetryElement& s, const GridShape& shape);

// Partition of all cells into <s>-orbits; each orbit is the trajectory of its
// least cell in row-major order.
std::vector<std::vector<Cell>> cell_orbits(const SymmetryElement& s,
                                           const GridShape& shape);

// Every valid (shift, g) for g in R on the given surface.
std::vector<SymmetryElement> full_symmetry_group(const DihGroup& R,
                                                 const GridShape& shape);

// Throws if R contains elements invalid for the surface/dimensions.
void check_group_for_surface(const DihGroup& R, const GridShape& shape);

}  // namespace tilecount
