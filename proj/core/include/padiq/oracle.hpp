#pragma once

#include "padiq/padic.hpp"
#include "padiq/sample.hpp"
#include "padiq/verdict.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace padiq {

// one (valuation difference, unit residue) coverage target
using OracleTarget = std::pair<long, Int>;

// Result of a finite residue-coverage sweep over sample quotients.
// `attained` and `missing` partition [-V, V] x (Z/p^rZ)^x; each attained
// target carries one witness pair (a, a') with vp(a/a') = v and
// unit_part(a/a') = u mod p^r. Full coverage is evidence for density,
// never proof; a miss is a counterexample candidate.
struct OracleReport {
    Int p;
    unsigned r;
    long window;
    std::map<OracleTarget, std::pair<Int, Int>> witnesses;  // attained -> (a, a')
    std::vector<OracleTarget> missing;

    bool fully_covered() const { return missing.empty(); }
    std::size_t attained_count() const { return witnesses.size(); }
};

// { vp(a) : a in sample }
std::set<long> valuation_spectrum(const SetSample& sample, const Int& p);

// Sweeps all pairs (grouped by valuation class, so the v-grid fills without
// an O(n^2) pass) and records which (v, u) targets the quotients attain.
// Deterministic for any worker count: element decomposition is partitioned,
// assembly picks the lexicographically smallest witness.
OracleReport coverage_check(const SetSample& sample, const PrimePower& pp, long V,
                            unsigned workers = 1);

struct CertificateCheck {
    bool ok;
    std::string violation;  // first violation, empty when ok
};

// Empirically validates the obstruction a decider claims, spending at most
// `budget` element or pair checks.
CertificateCheck verify_certificate(const Certificate& cert, const SetSample& sample,
                                    std::uint64_t budget);

struct DenseInNCheck {
    bool dense;
    std::vector<Int> missing;  // residues mod p^r the sample never hits
};

// true iff the sample hits every residue class mod p^r
DenseInNCheck dense_in_N_check(const SetSample& sample, const PrimePower& pp);

}  // namespace padiq
