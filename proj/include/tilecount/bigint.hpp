#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace tilecount {

// Exact fixed-point counts; t_id^(nm) overflows machine words immediately.
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt big_pow(long base, unsigned long exp) {
    return big_pow(BigInt(base), exp);
}

// Division that must be exact; a remainder here means a formula bug.
inline BigInt exact_div(const BigInt& num, const BigInt& den, const char* context) {
    if (den == 0 || num % den != 0) {
        throw std::logic_error(std::string("non-exact division in ") + context);
    }
    return num / den;
}

}  // namespace tilecount
