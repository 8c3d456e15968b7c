#include "tilecount/arith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tilecount {

std::vector<long> divisors(long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be positive");
    std::vector<long> low, high;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            low.push_back(d);
            if (d != n / d) high.push_back(n / d);
        }
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

long euler_phi(long n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    long result = n;
    long rem = n;
    for (long p = 2; p * p <= rem; ++p) {
        if (rem % p == 0) {
            result -= result / p;
            while (rem % p == 0) rem /= p;
        }
    }
    if (rem > 1) result -= result / rem;
    return result;
}

std::vector<long> flip_solutions(long n, long a) {
    if (n < 1) throw std::invalid_argument("flip_solutions: n must be positive");
    if (a < 0 || a >= n) throw std::invalid_argument("flip_solutions: a out of range");
    std::vector<long> sols;
    if (n % 2 == 1) {
        // 2 is invertible mod n with inverse (n+1)/2.
        long x = ((n + 1) / 2) % n * ((-1 - a) % n + n) % n;
        sols.push_back(x % n);
    } else if (a % 2 == 1) {
        long half = (((-1 - a) / 2) % n + n) % n;
        sols.push_back(half);
        sols.push_back((half + n / 2) % n);
        std::sort(sols.begin(), sols.end());
    }
    return sols;
}

long minimal_order(long a, long n) {
    if (n < 1) throw std::invalid_argument("minimal_order: n must be positive");
    long aa = ((a % n) + n) % n;
    return n / std::gcd(aa, n);
}

}  // namespace tilecount
