#pragma once

#include "padiq/primes.hpp"
#include "padiq/sample.hpp"
#include "padiq/valuation.hpp"
#include "padiq/verdict.hpp"

#include <cstdint>
#include <optional>

namespace padiq {

// Recurrence x_{n+2} = r x_{n+1} + s x_n with discriminant r^2 + 4s.
// Non-degenerate: s != 0 and the root ratio is not a root of unity, which
// (from (a/b) + (b/a) = (r^2 + 2s)/(-s) landing in [-2, 2]) is exactly
// r^2 outside {0, -s, -2s, -3s, -4s}.
struct LucasParams {
    Int r;
    Int s;
    Int delta;
};

LucasParams lucas_params(Int r, Int s);

enum class LucasKind { First, Second };  // seeds (0, 1) and (2, r)

// exact a_n / b_n, iterative
Int lucas_term(const LucasParams& params, LucasKind kind, std::uint64_t n);
// same, with all arithmetic reduced mod m
Int lucas_term_mod(const LucasParams& params, LucasKind kind, std::uint64_t n, const Int& m);

struct RankOfAppearance {
    Int p;
    std::uint64_t tau;
};

// smallest k >= 1 with p | a_k; requires p coprime to s. Scans the pair
// state (a_n, a_{n+1}) mod p, which is purely periodic with period < p^2.
RankOfAppearance rank_of_appearance(const LucasParams& params, const Int& p);

// The constants the valuation formula needs, computed once per (params, p):
// vp(a_p) when p | delta, else tau, vp(a_tau) and vp(a_{p tau}).
struct LucasValuationConstants {
    std::optional<std::uint64_t> tau;
    std::optional<long> vp_ap;
    std::optional<long> vp_atau;
    std::optional<long> vp_aptau;
};
LucasValuationConstants lucas_valuation_constants(const LucasParams& params, const Int& p);

// Exact vp(a_n) from the five-case closed form, branching on p | delta,
// tau | n and p | n. Requires p coprime to s, n >= 1.
Valuation vp_first_kind(const LucasParams& params, const Int& p, std::uint64_t n);

// p coprime to s -> Dense; p | s, p coprime to r -> NotDense (every a_n is a
// unit mod p); p | s and p | r -> undecided by the theory here.
DensityVerdict decide_first_kind(const LucasParams& params, const Int& p);

// Odd p coprime to s: Dense iff p divides some b_n (scan one period mod p).
// p = 2 is undecided except (r, s) = (1, 1), where the Lucas numbers stay in
// {1,2,3,4,5,7} mod 8, so nu_2 never exceeds 2.
DensityVerdict decide_second_kind(const LucasParams& params, const Int& p);

// a_n = b^n - 1 as the first-kind sequence of (r, s) = (b+1, -b); |b| >= 2
LucasParams power_minus_one_family(const Int& b);

// |a_n| mod p^K for n = 1..n_max (zero residues dropped), as an oracle
// sample: valuations below K and unit parts mod p^r survive the reduction.
SetSample lucas_residue_sample(const LucasParams& params, LucasKind kind, const Int& p,
                               unsigned K, std::uint64_t n_max);

}  // namespace padiq
