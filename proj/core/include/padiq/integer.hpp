#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace padiq {

using Int = mpz_class;

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline bool fits_u64(const Int& n) {
    return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Int& n) {
    std::uint64_t lo = mpz_getlimbn(n.get_mpz_t(), 0);
    return mpz_size(n.get_mpz_t()) == 0 ? 0 : lo;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace padiq
