#include "padiq/primes.hpp"

#include "padiq/modular.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace padiq {

namespace {

constexpr std::array<std::uint64_t, 12> kMillerRabinWitnesses = {2,  3,  5,  7,  11, 13,
                                                                 17, 19, 23, 29, 31, 37};

// deterministic for n < 3.317e24, covers all of uint64_t
bool miller_rabin_u64(std::uint64_t n) {
    const int s = __builtin_ctzll(n - 1);
    const std::uint64_t d = (n - 1) >> s;
    for (std::uint64_t a : kMillerRabinWitnesses) {
        if (a % n == 0) continue;
        std::uint64_t x = fast::powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = fast::mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// largest n for which the 12-witness set is proven deterministic
const Int kDeterministicLimit = Int("3317044064679887385961980");

bool miller_rabin_mpz(const Int& n) {
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    for (std::uint64_t a : kMillerRabinWitnesses) {
        Int x = mod_pow(Int(static_cast<unsigned long>(a)), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned long i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t isqrt_u64(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

// returns a nontrivial factor, or 0 when every attempt stalled
std::uint64_t pollard_brent_u64(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    std::uint64_t x0 = 2, c = 1;
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::uint64_t x = x0, y = x0, d = 1;
        std::uint64_t q = 1;
        int steps = 0;
        while (d == 1) {
            x = fast::mulmod(x, x, n) + c;
            if (x >= n) x -= n;
            std::uint64_t diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            q = fast::mulmod(q, diff, n);
            if (++steps % 64 == 0) {
                d = std::gcd(q, n);
                if (d != 1) break;
            }
            if (steps % 1024 == 0) y = x;
        }
        if (d == 1) d = std::gcd(q, n);
        if (d != 1 && d != n) return d;
        ++c;
        ++x0;
    }
    return 0;
}

void factor_u64_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        out.push_back(n);
        return;
    }
    // rho stalls on squares (the cycle mod p^2 collapses with the one mod p),
    // so peel them first
    const std::uint64_t root = isqrt_u64(n);
    if (root * root == n) {
        factor_u64_into(root, out);
        factor_u64_into(root, out);
        return;
    }
    std::uint64_t d = pollard_brent_u64(n);
    if (d == 0) {
        // guaranteed fallback; composites surviving rho at this size are rare
        for (std::uint64_t f = 3; f <= root; f += 2) {
            if (n % f == 0) {
                d = f;
                break;
            }
        }
    }
    factor_u64_into(d, out);
    factor_u64_into(n / d, out);
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    return miller_rabin_u64(n);
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime_u64(to_u64(n));
    for (std::uint64_t p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    if (n >= kDeterministicLimit)
        throw domain_error("is_prime: input exceeds the deterministic witness range");
    return miller_rabin_mpz(n);
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<bool> composite(n + 1, false);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (!composite[i]) {
            out.push_back(i);
            for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = true;
        }
        if (i * i > n) break;
    }
    // finish the scan past sqrt(n)
    for (std::uint64_t i = out.empty() ? 2 : out.back() + 1; i <= n; ++i)
        if (!composite[i]) out.push_back(i);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
    std::uint64_t c = n + 1;
    if (c <= 2) return 2;
    if (c % 2 == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

void for_each_prime(std::uint64_t lo, std::uint64_t hi,
                    const std::function<void(std::uint64_t)>& fn) {
    if (hi < 2 || hi < lo) return;
    lo = std::max<std::uint64_t>(lo, 2);
    std::uint64_t root = 2;
    while (root * root < hi) ++root;
    const auto base = primes_up_to(root);
    constexpr std::uint64_t kSegment = 1 << 18;
    std::vector<bool> comp;
    for (std::uint64_t start = lo; start <= hi; start += kSegment) {
        const std::uint64_t end = std::min(hi, start + kSegment - 1);
        comp.assign(end - start + 1, false);
        for (std::uint64_t p : base) {
            if (p * p > end) break;
            std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
            for (std::uint64_t j = first; j <= end; j += p) comp[j - start] = true;
        }
        for (std::uint64_t v = start; v <= end; ++v)
            if (v >= 2 && !comp[v - start]) fn(v);
        if (end == hi) break;
    }
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    if (n <= 1) return out;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                            41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull}) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
        }
    }
    if (n > 1) {
        std::vector<std::uint64_t> rest;
        factor_u64_into(n, rest);
        std::sort(rest.begin(), rest.end());
        for (std::size_t i = 0; i < rest.size();) {
            std::size_t j = i;
            while (j < rest.size() && rest[j] == rest[i]) ++j;
            out.emplace_back(rest[i], static_cast<unsigned>(j - i));
            i = j;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Int, unsigned>> factorize(Int n) {
    std::vector<std::pair<Int, unsigned>> out;
    if (n <= 1) return out;
    if (fits_u64(n)) {
        for (auto& [p, e] : factorize_u64(to_u64(n)))
            out.emplace_back(Int(static_cast<unsigned long>(p)), e);
        return out;
    }
    // trial division first, then peel with rho once the cofactor fits u64
    for (std::uint64_t p = 2; p < 100000 && n > 1; p = (p == 2 ? 3 : p + 2)) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            unsigned e = 0;
            while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
                mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
                ++e;
            }
            out.emplace_back(Int(static_cast<unsigned long>(p)), e);
        }
        if (fits_u64(n)) break;
    }
    if (n > 1) {
        if (!fits_u64(n)) {
            if (is_prime(n)) {
                out.emplace_back(n, 1);
            } else {
                throw domain_error("factorize: composite cofactor too large: " + n.get_str());
            }
        } else {
            for (auto& [p, e] : factorize_u64(to_u64(n)))
                out.emplace_back(Int(static_cast<unsigned long>(p)), e);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int euler_phi(const Int& n) {
    if (n < 1) throw domain_error("euler_phi: n must be positive");
    Int phi = 1;
    for (const auto& [p, e] : factorize(n)) phi *= int_pow(p, e - 1) * (p - 1);
    return phi;
}

}  // namespace padiq
