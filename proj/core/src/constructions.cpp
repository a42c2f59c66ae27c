#include "padiq/constructions.hpp"

#include "padiq/error.hpp"
#include "padiq/padic.hpp"
#include "padiq/primes.hpp"

#include <set>
#include <unordered_set>

namespace padiq {

namespace {

bool is_prime_power_u64(std::uint64_t n) {
    if (n < 2) return false;
    return factorize_u64(n).size() == 1;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> PrimePowerEnumeration::next() {
    if (rem_ >= q_) {
        do {
            ++q_;
        } while (!is_prime_power_u64(q_));
        rem_ = 0;
    }
    return {q_, rem_++};
}

SetSample greedy_no3ap_set(std::size_t k) {
    if (k < 1) throw domain_error("greedy_no3ap_set: k must be >= 1");
    constexpr std::uint64_t kSearchCap = 1'000'000;
    PrimePowerEnumeration enumeration;
    std::vector<std::uint64_t> chosen;
    std::unordered_set<std::uint64_t> in_set;
    chosen.reserve(k);
    for (std::size_t n = 0; n < k; ++n) {
        const auto [q, rem] = enumeration.next();
        std::uint64_t a = chosen.empty() ? 1 : chosen.back() + 1;
        // jump to the first candidate in the right residue class
        a += (rem + q - a % q) % q;
        const std::uint64_t start = a;
        for (;; a += q) {
            if (a - start > kSearchCap)
                throw precision_error("greedy_no3ap_set: no candidate within the search cap");
            // a is the largest element of any new progression, so only
            // x = 2y - a with y already chosen can close one
            bool closes = false;
            for (std::uint64_t y : chosen) {
                if (2 * y > a && in_set.count(2 * y - a)) {
                    closes = true;
                    break;
                }
            }
            if (!closes) break;
        }
        chosen.push_back(a);
        in_set.insert(a);
    }
    std::vector<Int> elems;
    elems.reserve(chosen.size());
    for (std::uint64_t v : chosen) elems.emplace_back(static_cast<unsigned long>(v));
    return SetSample::make(std::move(elems), "greedy 3-AP-free, k=" + std::to_string(k),
                           Int(static_cast<unsigned long>(chosen.back())));
}

ThreeAPWitness contains_3ap(const SetSample& sample) {
    std::set<Int> in_set(sample.elements.begin(), sample.elements.end());
    const auto& e = sample.elements;  // sorted ascending
    for (std::size_t j = 0; j < e.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Int z = 2 * e[j] - e[i];
            if (z > e[j] && in_set.count(z)) return {true, e[i], e[j], z};
        }
    }
    return {false, 0, 0, 0};
}

SetSample zero_density_dense_set(const Int& bound) {
    if (bound < 1) throw domain_error("zero_density_dense_set: bound must be >= 1");
    std::vector<Int> elems;
    Int pos = 1;
    for (std::uint64_t q = 2; pos <= bound; ++q) {
        if (!is_prime_power_u64(q)) continue;
        for (std::uint64_t i = 0; i < q && pos <= bound; ++i, ++pos) elems.push_back(pos);
        Int gap;
        mpz_fac_ui(gap.get_mpz_t(), q);
        pos += gap;
    }
    if (elems.empty()) throw domain_error("zero_density_dense_set: empty below bound");
    return SetSample::make(std::move(elems), "zero-density block construction", bound);
}

bool selective_prime_set_member(const Int& n, const std::vector<Int>& P, const Int& qbound) {
    if (n < 1) throw domain_error("selective_prime_set_member: n must be positive");
    std::set<Int> keep(P.begin(), P.end());
    for (const auto& [q, e] : factorize(n)) {
        if (q > qbound) continue;
        if (e > 1 && !keep.count(q)) return false;
    }
    return true;
}

bool threshold_set_member(const Int& n, const Rational& alpha) {
    if (n < 1) throw domain_error("threshold_set_member: n must be positive");
    if (alpha.sign() < 0 || alpha >= Rational(1))
        throw domain_error("threshold_set_member: alpha must lie in [0, 1)");
    // 2^k <= (1 - alpha) p^r  <=>  2^k * d <= (d - a) * p^r  with alpha = a/d
    const Int a = alpha.numerator(), d = alpha.denominator();
    Int two_k = 2;
    std::uint64_t p = 2;
    while (true) {
        // p^{r_k} >= 2^k d/(d-a), so once that bound passes n every later
        // prime is automatically within its allowance
        if (two_k * d > (d - a) * n) break;
        const Int pz(static_cast<unsigned long>(p));
        Int pr = pz;
        long r = 1;
        while (two_k * d > (d - a) * pr) {
            pr *= pz;
            ++r;
        }
        if (pr <= n && vp_unchecked(n, pz) > r) return false;
        two_k *= 2;
        p = next_prime_u64(p);
    }
    return true;
}

ParityClass partition_by_valuation_parity(const Int& n, const Int& p) {
    if (n < 1) throw domain_error("partition_by_valuation_parity: n must be positive");
    if (!is_prime(p)) throw domain_error("partition_by_valuation_parity: p must be prime");
    return vp_unchecked(n, p) % 2 == 0 ? ParityClass::A : ParityClass::B;
}

}  // namespace padiq
