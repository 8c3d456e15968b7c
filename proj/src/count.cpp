#include "tilecount/count.hpp"

#include <numeric>
#include <stdexcept>

#include "tilecount/arith.hpp"

namespace tilecount {
namespace {

unsigned long as_exp(long v, const char* context) {
    if (v < 0) throw std::logic_error(std::string("negative exponent in ") + context);
    return static_cast<unsigned long>(v);
}

long exact(long num, long den, const char* context) {
    if (num % den != 0) {
        throw std::logic_error(std::string("exponent not divisible in ") + context);
    }
    return num / den;
}

void require_square(Dih g, long n, long m) {
    if (is_square_only(g) && n != m) {
        throw std::invalid_argument(std::string(dih_name(g)) +
                                    " is only defined on square shapes");
    }
}

BigInt burnside(const BigInt& sum, const BigInt& order) {
    return exact_div(sum, order, "Burnside average");
}

}  // namespace

BigInt fxpt_grid(Dih g, long n, long m, const FixedDesignTable& t) {
    require_square(g, n, m);
    const long nm = n * m;
    const BigInt tid = t.at(Dih::Id);
    switch (g) {
        case Dih::Id:
            return big_pow(tid, as_exp(nm, "fxpt_grid id"));
        case Dih::R2:
            if (nm % 2 == 0) return big_pow(tid, as_exp(nm / 2, "fxpt_grid r2"));
            return big_pow(tid, as_exp((nm - 1) / 2, "fxpt_grid r2")) * t.at(Dih::R2);
        case Dih::F:
            if (n % 2 == 0) return big_pow(tid, as_exp(exact(nm, 2, "fxpt_grid f"), "f"));
            return big_pow(tid, as_exp(exact(m * (n - 1), 2, "fxpt_grid f"), "f")) *
                   big_pow(t.at(Dih::F), as_exp(m, "fxpt_grid f"));
        case Dih::R2F:
            if (m % 2 == 0) return big_pow(tid, as_exp(exact(nm, 2, "fxpt_grid r2f"), "r2f"));
            return big_pow(tid, as_exp(exact(n * (m - 1), 2, "fxpt_grid r2f"), "r2f")) *
                   big_pow(t.at(Dih::R2F), as_exp(n, "fxpt_grid r2f"));
        case Dih::R:
        case Dih::R3:
            if (n % 2 == 0) return big_pow(tid, as_exp(exact(n * n, 4, "fxpt_grid r"), "r"));
            return big_pow(tid, as_exp(exact(n * n - 1, 4, "fxpt_grid r"), "r")) * t.at(g);
        case Dih::RF:
        case Dih::R3F:
            return big_pow(tid, as_exp(exact(n * n - n, 2, "fxpt_grid rf"), "rf")) *
                   big_pow(t.at(g), as_exp(n, "fxpt_grid rf"));
    }
    throw std::logic_error("fxpt_grid: bad element");
}

BigInt fxpt_cylinder(Dih g, long n, long m, const FixedDesignTable& t) {
    if (is_square_only(g)) {
        throw std::invalid_argument("cylinder fixed points are defined for D4 only");
    }
    const long nm = n * m;
    const BigInt tid = t.at(Dih::Id);
    switch (g) {
        case Dih::Id: {
            BigInt sum = 0;
            for (long d : divisors(n)) {
                sum += euler_phi(d) * big_pow(tid, as_exp(exact(nm, d, "fxpt_C id"), "id"));
            }
            return sum;
        }
        case Dih::R2: {
            if (m % 2 == 0) {
                return n * big_pow(tid, as_exp(exact(nm, 2, "fxpt_C r2"), "r2"));
            }
            if (n % 2 == 0) {
                // Half the shifts give no fixed cell, half give two.
                return (n / 2) *
                       (big_pow(tid, as_exp(nm / 2, "fxpt_C r2")) +
                        big_pow(tid, as_exp((nm - 2) / 2, "fxpt_C r2")) *
                            big_pow(t.at(Dih::R2), 2));
            }
            return n * big_pow(tid, as_exp((nm - 1) / 2, "fxpt_C r2")) * t.at(Dih::R2);
        }
        case Dih::F: {
            if (n % 2 == 0) {
                return (n / 2) *
                       (big_pow(tid, as_exp(exact(nm, 2, "fxpt_C f"), "f")) +
                        big_pow(tid, as_exp(exact((n - 2) * m, 2, "fxpt_C f"), "f")) *
                            big_pow(t.at(Dih::F), as_exp(2 * m, "fxpt_C f")));
            }
            return n * big_pow(tid, as_exp(exact((n - 1) * m, 2, "fxpt_C f"), "f")) *
                   big_pow(t.at(Dih::F), as_exp(m, "fxpt_C f"));
        }
        case Dih::R2F: {
            BigInt sum = 0;
            for (long d : divisors(n)) {
                const long l = std::lcm(d, 2L);
                if (m % 2 == 0) {
                    sum += euler_phi(d) *
                           big_pow(tid, as_exp(exact(nm, l, "fxpt_C r2f"), "r2f"));
                } else {
                    Dih gd = dihedral_pow(Dih::R2F, d);  // r2f for odd d, id for even
                    sum += euler_phi(d) *
                           big_pow(tid, as_exp(exact(nm - n, l, "fxpt_C r2f"), "r2f")) *
                           big_pow(t.at(gd), as_exp(exact(n, d, "fxpt_C r2f"), "r2f"));
                }
            }
            return sum;
        }
        default:
            throw std::logic_error("fxpt_cylinder: bad element");
    }
}

BigInt fxpt_torus(Dih g, long n, long m, const FixedDesignTable& t) {
    require_square(g, n, m);
    const long nm = n * m;
    const BigInt tid = t.at(Dih::Id);
    switch (g) {
        case Dih::Id: {
            BigInt sum = 0;
            for (long c : divisors(m)) {
                for (long d : divisors(n)) {
                    sum += euler_phi(c) * euler_phi(d) *
                           big_pow(tid, as_exp(exact(nm, std::lcm(c, d), "fxpt_T id"), "id"));
                }
            }
            return sum;
        }
        case Dih::R2: {
            if (n % 2 == 0 && m % 2 == 0) {
                // A quarter of the shift pairs yield exactly 4 fixed cells.
                return (nm / 4) *
                       (3 * big_pow(tid, as_exp(nm / 2, "fxpt_T r2")) +
                        big_pow(tid, as_exp(nm / 2 - 2, "fxpt_T r2")) *
                            big_pow(t.at(Dih::R2), 4));
            }
            if (n % 2 == 1 && m % 2 == 1) {
                return nm * big_pow(tid, as_exp((nm - 1) / 2, "fxpt_T r2")) * t.at(Dih::R2);
            }
            return (nm / 2) * (big_pow(tid, as_exp(nm / 2, "fxpt_T r2")) +
                               big_pow(tid, as_exp(nm / 2 - 1, "fxpt_T r2")) *
                                   big_pow(t.at(Dih::R2), 2));
        }
        case Dih::F: {
            BigInt sum = 0;
            for (long c : divisors(m)) {
                const long l = std::lcm(2L, c);
                Dih fc = dihedral_pow(Dih::F, c);  // f for odd c, id for even
                if (n % 2 == 0) {
                    sum += euler_phi(c) *
                           (big_pow(tid, as_exp(exact(nm, l, "fxpt_T f"), "f")) +
                            big_pow(tid, as_exp(exact((n - 2) * m, l, "fxpt_T f"), "f")) *
                                big_pow(t.at(fc), as_exp(exact(2 * m, c, "fxpt_T f"), "f")));
                } else {
                    sum += euler_phi(c) *
                           big_pow(tid, as_exp(exact((n - 1) * m, l, "fxpt_T f"), "f")) *
                           big_pow(t.at(fc), as_exp(exact(m, c, "fxpt_T f"), "f"));
                }
            }
            return (n % 2 == 0 ? BigInt(n) / 2 : BigInt(n)) * sum;
        }
        case Dih::R2F: {
            // Mirror of the f case with the roles of rows and columns swapped.
            BigInt sum = 0;
            for (long d : divisors(n)) {
                const long l = std::lcm(d, 2L);
                Dih gd = dihedral_pow(Dih::R2F, d);
                if (m % 2 == 0) {
                    sum += euler_phi(d) *
                           (big_pow(tid, as_exp(exact(nm, l, "fxpt_T r2f"), "r2f")) +
                            big_pow(tid, as_exp(exact(n * (m - 2), l, "fxpt_T r2f"), "r2f")) *
                                big_pow(t.at(gd), as_exp(exact(2 * n, d, "fxpt_T r2f"), "r2f")));
                } else {
                    sum += euler_phi(d) *
                           big_pow(tid, as_exp(exact(n * (m - 1), l, "fxpt_T r2f"), "r2f")) *
                           big_pow(t.at(gd), as_exp(exact(n, d, "fxpt_T r2f"), "r2f"));
                }
            }
            return (m % 2 == 0 ? BigInt(m) / 2 : BigInt(m)) * sum;
        }
        case Dih::R:
        case Dih::R3: {
            const long n2 = n * n;
            if (n % 2 == 1) {
                return BigInt(n2) * big_pow(tid, as_exp(exact(n2 - 1, 4, "fxpt_T r"), "r")) *
                       t.at(g);
            }
            // Even n: 2 fixed cells, one 2-cycle, the rest 4-cycles, for half
            // the shift pairs (a + b odd).
            return (BigInt(n2) / 2) *
                   (big_pow(tid, as_exp(exact(n2, 4, "fxpt_T r"), "r")) +
                    big_pow(tid, as_exp(exact(n2 - 4, 4, "fxpt_T r"), "r")) *
                        big_pow(t.at(g), 2) * t.at(Dih::R2));
        }
        case Dih::RF:
        case Dih::R3F: {
            const long n2 = n * n;
            BigInt sum = 0;
            for (long d : divisors(n)) {
                if (d % 2 == 1) {
                    sum += euler_phi(d) *
                           big_pow(tid, as_exp(exact(n2 - n, 2 * d, "fxpt_T rf"), "rf")) *
                           big_pow(t.at(g), as_exp(exact(n, d, "fxpt_T rf"), "rf"));
                } else {
                    sum += euler_phi(d) *
                           big_pow(tid, as_exp(exact(n2, 2 * d, "fxpt_T rf"), "rf"));
                }
            }
            return n * sum;
        }
    }
    throw std::logic_error("fxpt_torus: bad element");
}

BigInt count_grid(long n, long m, const DihGroup& R, const FixedDesignTable& t) {
    check_group_for_surface(R, {n, m, Surface::Grid});
    BigInt sum = 0;
    for (Dih g : R.elements()) sum += fxpt_grid(g, n, m, t);
    return burnside(sum, R.order());
}

BigInt count_cylinder(long n, long m, const DihGroup& R, const FixedDesignTable& t) {
    check_group_for_surface(R, {n, m, Surface::Cylinder});
    BigInt sum = 0;
    for (Dih g : R.elements()) sum += fxpt_cylinder(g, n, m, t);
    return burnside(sum, BigInt(n) * R.order());
}

BigInt count_torus(long n, long m, const DihGroup& R, const FixedDesignTable& t) {
    check_group_for_surface(R, {n, m, Surface::Torus});
    BigInt sum = 0;
    for (Dih g : R.elements()) sum += fxpt_torus(g, n, m, t);
    return burnside(sum, BigInt(n) * m * R.order());
}

BigInt fxpt_surface(Surface surface, Dih g, long n, long m,
                    const FixedDesignTable& t) {
    switch (surface) {
        case Surface::Grid: return fxpt_grid(g, n, m, t);
        case Surface::Cylinder: return fxpt_cylinder(g, n, m, t);
        case Surface::Torus: return fxpt_torus(g, n, m, t);
    }
    throw std::logic_error("fxpt_surface: bad surface");
}

BigInt count_tilings(const GridShape& shape, const DihGroup& R,
                     const FixedDesignTable& t) {
    switch (shape.surface) {
        case Surface::Grid: return count_grid(shape.n, shape.m, R, t);
        case Surface::Cylinder: return count_cylinder(shape.n, shape.m, R, t);
        case Surface::Torus: return count_torus(shape.n, shape.m, R, t);
    }
    throw std::logic_error("count_tilings: bad surface");
}

}  // namespace tilecount
