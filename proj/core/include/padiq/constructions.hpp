#pragma once

#include "padiq/rational.hpp"
#include "padiq/sample.hpp"

#include <cstdint>
#include <vector>

namespace padiq {

// Enumerates every pair (q, rem) with q a prime power and 0 <= rem < q,
// each exactly once: prime powers ascending (2,3,4,5,7,8,9,11,...),
// residues ascending within each q. Greedy construction output depends on
// this order, so it is fixed here.
class PrimePowerEnumeration {
public:
    std::pair<std::uint64_t, std::uint64_t> next();

private:
    std::uint64_t q_ = 2;   // current prime power
    std::uint64_t rem_ = 0; // next residue to emit; == q_ means advance
};

// First k elements of the greedy 3-AP-free set: stage n picks the least
// a_n > a_{n-1} with a_n = rem_n mod q_n that closes no 3-term progression
// with the elements chosen so far.
SetSample greedy_no3ap_set(std::size_t k);

struct ThreeAPWitness {
    bool found;
    Int x, y, z;  // x + z = 2y, x < y < z, set when found
};
ThreeAPWitness contains_3ap(const SetSample& sample);

// Block construction: add q_n consecutive integers, skip q_n! of them, for
// the prime powers q_n = 2,3,4,5,7,...; keeps elements <= bound. Contains
// arbitrarily long runs, yet has natural density zero.
SetSample zero_density_dense_set(const Int& bound);

// Membership in { a : nu_q(a) <= 1 for every prime q <= qbound outside P }.
bool selective_prime_set_member(const Int& n, const std::vector<Int>& P, const Int& qbound);

// Membership in { a : nu_{p_k}(a) <= r_k for every k } where r_k is minimal
// with 2^k <= (1 - alpha) p_k^{r_k}; alpha in [0, 1). Only the finitely many
// primes with p_k^{r_k} <= n can fail.
bool threshold_set_member(const Int& n, const Rational& alpha);

enum class ParityClass { A, B };  // A: even nu_p(n), B: odd

ParityClass partition_by_valuation_parity(const Int& n, const Int& p);

}  // namespace padiq
