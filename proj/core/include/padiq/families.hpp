#pragma once

#include "padiq/oracle.hpp"
#include "padiq/sample.hpp"
#include "padiq/verdict.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <variant>

namespace padiq {

// { a n + b : n >= 0 } intersected with the positive integers; a >= 1, b >= 0
struct ArithmeticProgression {
    Int a;
    Int b;
};

// { c * ratio^n : n >= 0 }; c != 0, ratio not in {0, 1, -1}
struct GeometricProgression {
    Int c;
    Int ratio;
};

// sums of m squares (resp. cubes), zero summands permitted, m >= 1
struct SumOfSquares {
    unsigned m;
};
struct SumOfCubes {
    unsigned m;
};

// { p^j : j >= 0 } union { b^j : j >= 0 } for an odd prime p, gcd(b, p) = 1
struct PrimePowerUnion {
    Int p;
    Int b;
};

using FamilySpec =
    std::variant<ArithmeticProgression, GeometricProgression, SumOfSquares, SumOfCubes,
                 PrimePowerUnion>;

std::string family_label(const FamilySpec& spec);

// Density verdict for R(A) in Q_p by the applicable criterion.
// For PrimePowerUnion the decision prime is spec.p itself and `p` must match.
DensityVerdict decide(const FamilySpec& spec, const Int& p);

// Legendre three-square criterion: n is a sum of three squares
// iff it is not of the form 4^i (8j + 7).
bool is_sum_of_three_squares(const Int& n);

// Solves x^2 + y^2 = n mod p^r with p not dividing x, for p = 1 mod 4.
// Base case by exhaustive search mod p (smallest x, then y), then Hensel
// steps x += i p^k with i = -(2x)^{-1} m mod p.
std::pair<Int, Int> lift_two_squares(const Int& n, const Int& p, unsigned r);

// Solves x^3 + y^3 = m mod 7^r with 7 not dividing x;
// requires m mod 7 in {0, 1, 2, 5, 6} (cubes mod 7 are 0, 1, 6).
std::pair<Int, Int> lift_two_cubes_mod7(const Int& m, unsigned r);

// Solves x^3 + y^3 + z^3 = m mod 3^r with 3 not dividing x, r >= 2;
// requires m mod 9 in {0, 1, 2, 3, 6, 7, 8}. The correction step works at
// 3^(r-1) because the cube derivative carries an extra factor 3.
std::array<Int, 3> lift_three_cubes_mod3(const Int& m, unsigned r);

// All n <= bound expressible as a sum of m e-th powers (e = 2 or 3) of
// non-negative integers, zero excluded from the output.
SetSample enumerate_power_sums(unsigned m, unsigned exponent, std::uint64_t bound);

// The finite sample the oracle uses to cross-check a verdict for `spec`.
// Value-enumerable families are cut at `bound`; PrimePowerUnion uses reduced
// powers b^j mod p^r (j below the order) plus small p-powers, since the
// needed exponents are far beyond any value bound.
SetSample family_sample(const FamilySpec& spec, const PrimePower& pp, long V,
                        std::uint64_t bound);

}  // namespace padiq
