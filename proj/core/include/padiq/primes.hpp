#pragma once

#include "padiq/error.hpp"
#include "padiq/integer.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace padiq {

// Deterministic Miller-Rabin, valid for all uint64_t inputs.
bool is_prime_u64(std::uint64_t n);

// Deterministic primality: trial division, then the fixed 12-witness
// Miller-Rabin set (deterministic below 3.317e24; larger inputs throw).
bool is_prime(const Int& n);

// All primes <= n, simple sieve. n capped at ~1e9 by memory.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

// smallest prime strictly greater than n
std::uint64_t next_prime_u64(std::uint64_t n);

// Calls fn(p) for every prime in [lo, hi], in increasing order,
// sieving segment by segment.
void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn);

// Prime factorization, (prime, exponent) pairs in increasing prime order.
// Trial division plus Brent-Pollard rho; intended for inputs up to ~1e12
// or smooth beyond that.
std::vector<std::pair<Int, unsigned>> factorize(Int n);
std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n);

Int euler_phi(const Int& n);

// A validated prime power p^r.
struct PrimePower {
    Int p;
    unsigned r;
    Int modulus;  // p^r, cached

    PrimePower(Int prime, unsigned exponent) : p(std::move(prime)), r(exponent) {
        if (r < 1) throw domain_error("PrimePower: exponent must be >= 1");
        if (!is_prime(p)) throw domain_error("PrimePower: " + p.get_str() + " is not prime");
        modulus = int_pow(p, r);
    }
};

}  // namespace padiq
