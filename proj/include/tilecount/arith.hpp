#pragma once

#include <cstdint>
#include <vector>

namespace tilecount {

// Ascending list of the positive divisors of n. Rejects n = 0.
std::vector<long> divisors(long n);

// Euler's totient: |{k in [1..n] : gcd(k,n) = 1}|. Rejects n = 0.
long euler_phi(long n);

// Solution set of x = -1 - x - a (mod n), i.e. 2x = -1 - a (mod n).
// One solution for odd n; two for even n with odd a; none for even n, even a.
std::vector<long> flip_solutions(long n, long a);

// Least d >= 1 with d*a = 0 (mod n); equals n / gcd(a, n).
long minimal_order(long a, long n);

}  // namespace tilecount
