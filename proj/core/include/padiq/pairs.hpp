#pragma once

#include "padiq/integer.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace padiq {

// The four primitive-root relations of a pair of odd primes p < q.
// A primitive root mod p^2 is automatically one mod p, so
// p_pr_q2 implies p_pr_q and q_pr_p2 implies q_pr_p.
struct PrimitiveRootProfile {
    std::uint64_t p, q;
    bool p_pr_q;    // p generates (Z/qZ)^x
    bool q_pr_p;
    bool p_pr_q2;   // p generates (Z/q^2 Z)^x
    bool q_pr_p2;

    std::array<bool, 4> flags() const { return {p_pr_q, q_pr_p, p_pr_q2, q_pr_p2}; }
};

PrimitiveRootProfile profile(std::uint64_t p, std::uint64_t q);

// T/F/wildcard per relation, e.g. "TTF*"
struct PatternQuery {
    std::array<std::optional<bool>, 4> want;

    static PatternQuery parse(const std::string& pattern);
    bool matches(const PrimitiveRootProfile& pr) const;
    std::string str() const;
};

// All pairs p < q <= limit of odd primes matching the pattern, ordered
// lexicographically. Deterministic for any worker count; an optional
// checkpoint file records the last fully scanned q so long runs can resume.
std::vector<PrimitiveRootProfile> search_pattern(const PatternQuery& pattern,
                                                 std::uint64_t limit, unsigned workers = 1,
                                                 const std::string& checkpoint_path = "");

inline constexpr std::uint64_t kSieveResidue = 2951;
inline constexpr std::uint64_t kSieveModulus = 70224;  // 16 * 3 * 7 * 11 * 19
inline constexpr std::array<std::uint64_t, 3> kSieveBases = {7, 11, 19};

// smallest prime = kSieveResidue mod kSieveModulus
std::uint64_t smallest_sieve_prime();

// A verified pair: ell = q + 4hp is prime, p does not divide h,
// ell is a primitive root mod p^2 and p is not one mod ell.
struct SieveWitness {
    std::uint64_t p, q, h, ell;
};

// For every prime p = kSieveResidue mod kSieveModulus up to p_bound and
// q in kSieveBases, emits the witnesses with h <= h_bound. Every candidate
// is re-verified by direct order computation, not the congruence argument.
std::vector<SieveWitness> sieve_witnesses(std::uint64_t p_bound, std::uint64_t h_bound,
                                          unsigned workers = 1);

// The binomial congruence behind the witness construction:
// (q + 4hp)^(p-1) = q^(p-1) + 4h(p-1) q^(p-2) p  (mod p^2),
// an identity whenever p does not divide q (h = 0 is Fermat's theorem).
bool verify_sieve_identity(const Int& p, const Int& q, const Int& h);

}  // namespace padiq
