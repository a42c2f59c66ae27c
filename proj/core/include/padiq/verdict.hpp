#pragma once

#include "padiq/error.hpp"
#include "padiq/integer.hpp"
#include "padiq/rational.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace padiq {

// Claim: nu_p(a) == residue for every element a (period 0), or
// nu_p(a) ≡ residue (mod period) when period >= 2. Rules out the
// valuations outside that class appearing in quotients.
struct ValuationObstruction {
    Int p;
    unsigned period;  // 0 means "exactly residue"
    long residue;
};

// Claim: every element is congruent, mod `modulus`, to one of `allowed`.
struct ResidueObstruction {
    Int modulus;
    std::vector<Int> allowed;  // sorted
};

// Claim: nu_p(a/a' - target) < radius_exponent for every pair, i.e. the
// quotient set stays p-adically away from `target`.
struct BoundedAwayFrom {
    Int p;
    Rational target;
    unsigned radius_exponent;
};

using Certificate = std::variant<ValuationObstruction, ResidueObstruction, BoundedAwayFrom>;

enum class DensityStatus { Dense, NotDense, UndecidedByTheory };

std::string to_string(DensityStatus s);

// Outcome of a density decision. NotDense always carries a certificate,
// Dense never does, and the theorem tag names the criterion applied.
struct DensityVerdict {
    DensityStatus status;
    std::optional<Certificate> certificate;
    std::string theorem_tag;

    static DensityVerdict dense(std::string tag);
    static DensityVerdict not_dense(Certificate cert, std::string tag);
    static DensityVerdict undecided(std::string note = "");
};

}  // namespace padiq
