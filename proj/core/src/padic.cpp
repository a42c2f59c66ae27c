#include "padiq/padic.hpp"

#include "padiq/modular.hpp"

namespace padiq {

long vp_unchecked(const Int& x, const Int& p) {
    Int reduced;
    return static_cast<long>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

Valuation vp(const Int& x, const Int& p) {
    if (!is_prime(p)) throw domain_error("vp: " + p.get_str() + " is not prime");
    if (x == 0) return Valuation::infinity();
    return Valuation::finite(vp_unchecked(x, p));
}

Valuation vp(const Rational& x, const Int& p) {
    if (!is_prime(p)) throw domain_error("vp: " + p.get_str() + " is not prime");
    if (x.is_zero()) return Valuation::infinity();
    return Valuation::finite(vp_unchecked(x.numerator(), p) - vp_unchecked(x.denominator(), p));
}

Rational padic_abs(const Rational& x, const Int& p) {
    Valuation v = vp(x, p);
    if (v.is_infinite()) return Rational(0);
    long k = v.value();
    if (k >= 0) return Rational(Int(1), int_pow(p, static_cast<unsigned long>(k)));
    return Rational(int_pow(p, static_cast<unsigned long>(-k)));
}

Int unit_part(const Int& x, const PrimePower& pp) {
    if (x == 0) throw domain_error("unit_part: zero has no unit part");
    Int reduced;
    mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), pp.p.get_mpz_t());
    Int u = reduced % pp.modulus;
    if (u < 0) u += pp.modulus;
    return u;
}

Int unit_part(const Rational& x, const PrimePower& pp) {
    if (x.is_zero()) throw domain_error("unit_part: zero has no unit part");
    Int num;
    mpz_remove(num.get_mpz_t(), x.signed_numerator().get_mpz_t(), pp.p.get_mpz_t());
    Int den;
    mpz_remove(den.get_mpz_t(), x.denominator().get_mpz_t(), pp.p.get_mpz_t());
    Int u = num % pp.modulus;
    if (u < 0) u += pp.modulus;
    return u * mod_inverse(den, pp.modulus) % pp.modulus;
}

}  // namespace padiq
