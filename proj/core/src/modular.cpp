#include "padiq/modular.hpp"

#include "padiq/primes.hpp"

namespace padiq {

Int mod_pow(const Int& base, const Int& exp, const Int& m) {
    if (m <= 0) throw domain_error("mod_pow: modulus must be positive");
    if (exp < 0) throw domain_error("mod_pow: negative exponent");
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), m.get_mpz_t());
    return r;
}

Int mod_inverse(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw domain_error("mod_inverse: " + a.get_str() + " is not invertible mod " + m.get_str());
    return r;
}

Int multiplicative_order(const Int& a, const Int& m) {
    if (m < 2) throw domain_error("multiplicative_order: modulus must be >= 2");
    if (gcd(a, m) != 1)
        throw domain_error("multiplicative_order: gcd(" + a.get_str() + ", " + m.get_str() + ") != 1");
    const Int phi = euler_phi(m);
    Int order = phi;
    for (const auto& [p, e] : factorize(phi)) {
        for (unsigned i = 0; i < e; ++i) {
            Int cand = order / p;
            if (mod_pow(a, cand, m) == 1)
                order = cand;
            else
                break;
        }
    }
    return order;
}

namespace {

// m in {2, 4, p^k, 2p^k} for odd prime p (the only moduli with primitive roots)
bool cyclic_unit_group(const Int& m) {
    if (m == 2 || m == 4) return true;
    Int odd = m;
    if (odd % 2 == 0) {
        odd /= 2;
        if (odd % 2 == 0) return false;
    }
    if (odd < 3) return false;
    auto fs = factorize(odd);
    return fs.size() == 1 && fs[0].first % 2 == 1;
}

}  // namespace

bool is_primitive_root(const Int& g, const Int& m) {
    if (m < 2) throw domain_error("is_primitive_root: modulus must be >= 2");
    if (!cyclic_unit_group(m))
        throw no_primitive_roots_error("is_primitive_root: no primitive roots exist mod " +
                                       m.get_str());
    if (gcd(g, m) != 1) return false;
    return multiplicative_order(g, m) == euler_phi(m);
}

int legendre_symbol(const Int& a, const Int& p) {
    if (p == 2 || !is_prime(p)) throw domain_error("legendre_symbol: p must be an odd prime");
    Int r = mod_pow(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

namespace fast {

std::uint64_t order(std::uint64_t a, std::uint64_t m, std::uint64_t group_order,
                    const std::vector<std::uint64_t>& group_order_primes) {
    std::uint64_t ord = group_order;
    for (std::uint64_t p : group_order_primes) {
        while (ord % p == 0 && powmod(a, ord / p, m) == 1) ord /= p;
    }
    return ord;
}

}  // namespace fast

}  // namespace padiq
