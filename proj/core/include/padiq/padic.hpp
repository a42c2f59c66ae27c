#pragma once

#include "padiq/primes.hpp"
#include "padiq/rational.hpp"
#include "padiq/valuation.hpp"

namespace padiq {

// nu_p of a nonzero integer without the primality re-check; p must be prime.
long vp_unchecked(const Int& x, const Int& p);

// p-adic valuation; infinity for x = 0. Throws on non-prime p.
Valuation vp(const Int& x, const Int& p);
Valuation vp(const Rational& x, const Int& p);

// p^(-vp(x)) as an exact rational; 0 for x = 0
Rational padic_abs(const Rational& x, const Int& p);

// (x * p^(-vp(x))) mod p^r, a unit modulo p^r; x must be nonzero.
// Negative x and denominators go through modular inversion.
Int unit_part(const Int& x, const PrimePower& pp);
Int unit_part(const Rational& x, const PrimePower& pp);

}  // namespace padiq
