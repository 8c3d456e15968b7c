#include <doctest.h>

#include <numeric>
#include <set>
#include <stdexcept>

#include "tilecount/arith.hpp"

using namespace tilecount;

namespace {

// Independent oracles, deliberately dumber than the implementation.
std::vector<long> divisors_trial(long n) {
    std::vector<long> out;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

long phi_gcd_count(long n) {
    long count = 0;
    for (long k = 1; k <= n; ++k) {
        if (std::gcd(k, n) == 1) ++count;
    }
    return count;
}

std::vector<long> flip_brute(long n, long a) {
    std::vector<long> out;
    for (long x = 0; x < n; ++x) {
        if ((2 * x) % n == (((-1 - a) % n) + n) % n) out.push_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<long>{1});
    CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(7) == std::vector<long>{1, 7});
    CHECK_THROWS_AS(divisors(0), std::invalid_argument);
    for (long n = 1; n <= 200; ++n) {
        CHECK(divisors(n) == divisors_trial(n));
    }
}

TEST_CASE("euler_phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK_THROWS_AS(euler_phi(0), std::invalid_argument);

    long total = 0;
    for (long d : divisors(30)) total += euler_phi(d);
    CHECK(total == 30);

    for (long n = 1; n <= 500; ++n) {
        CHECK(euler_phi(n) == phi_gcd_count(n));
        long sum = 0;
        for (long d : divisors(n)) sum += euler_phi(d);
        CHECK(sum == n);
    }
}

TEST_CASE("flip_solutions") {
    CHECK(flip_solutions(5, 0) == std::vector<long>{2});
    CHECK(flip_solutions(4, 1) == std::vector<long>{1, 3});
    CHECK(flip_solutions(4, 0).empty());

    for (long n = 1; n <= 64; ++n) {
        for (long a = 0; a < n; ++a) {
            auto got = flip_solutions(n, a);
            CHECK(got == flip_brute(n, a));
            // Parity table of the lemma.
            if (n % 2 == 1) {
                CHECK(got.size() == 1);
            } else if (a % 2 == 1) {
                CHECK(got.size() == 2);
            } else {
                CHECK(got.empty());
            }
        }
    }
}

TEST_CASE("minimal_order") {
    CHECK(minimal_order(0, 6) == 1);
    CHECK(minimal_order(4, 6) == 3);

    // Iterating multiples agrees with n/gcd.
    for (long n = 1; n <= 64; ++n) {
        for (long a = 0; a < n; ++a) {
            long d = 1;
            while ((d * a) % n != 0) ++d;
            CHECK(minimal_order(a, n) == d);
        }
    }

    // For each d | n there are phi(d) shifts of that order.
    for (long n : {12L, 30L, 64L}) {
        for (long d : divisors(n)) {
            long count = 0;
            for (long a = 0; a < n; ++a) {
                if (minimal_order(a, n) == d) ++count;
            }
            CHECK(count == euler_phi(d));
        }
    }
}
