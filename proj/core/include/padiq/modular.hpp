#pragma once

#include "padiq/error.hpp"
#include "padiq/integer.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace padiq {

// base^exp mod m, exp >= 0
Int mod_pow(const Int& base, const Int& exp, const Int& m);

// inverse of a mod m; throws if gcd(a, m) != 1
Int mod_inverse(const Int& a, const Int& m);

// smallest n >= 1 with a^n = 1 mod m; requires gcd(a, m) = 1, m >= 2.
// Factors phi(m) and strips prime factors from the exponent.
Int multiplicative_order(const Int& a, const Int& m);

// true iff g generates (Z/mZ)^x. Throws no_primitive_roots_error when the
// modulus is not 2, 4, p^k or 2p^k (no primitive roots exist at all there).
bool is_primitive_root(const Int& g, const Int& m);

// Euler-criterion Legendre symbol, p an odd prime
int legendre_symbol(const Int& a, const Int& p);

// ----- uint64_t fast path (moduli < 2^63), used by the pair search -----
namespace fast {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t x = 1;
    a %= m;
    while (e) {
        if (e & 1) x = mulmod(x, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return x;
}

// order of a mod m given phi(m) = group order and its distinct prime factors
std::uint64_t order(std::uint64_t a, std::uint64_t m, std::uint64_t group_order,
                    const std::vector<std::uint64_t>& group_order_primes);

}  // namespace fast

}  // namespace padiq
