#include "padiq/lucas.hpp"

#include "padiq/modular.hpp"
#include "padiq/padic.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace padiq {

LucasParams lucas_params(Int r, Int s) {
    if (s == 0) throw domain_error("lucas_params: s must be nonzero (roots would vanish)");
    const Int r2 = r * r;
    for (int k = 0; k <= 4; ++k) {
        if (r2 == -k * s)
            throw domain_error("lucas_params: degenerate recurrence (root ratio is a root of unity)");
    }
    Int delta = r2 + 4 * s;
    return LucasParams{std::move(r), std::move(s), std::move(delta)};
}

Int lucas_term(const LucasParams& params, LucasKind kind, std::uint64_t n) {
    Int a = kind == LucasKind::First ? 0 : 2;
    Int b = kind == LucasKind::First ? 1 : params.r;
    if (n == 0) return a;
    for (std::uint64_t i = 1; i < n; ++i) {
        Int next = params.r * b + params.s * a;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

Int lucas_term_mod(const LucasParams& params, LucasKind kind, std::uint64_t n, const Int& m) {
    if (m < 2) throw domain_error("lucas_term_mod: modulus must be >= 2");
    const Int rm = ((params.r % m) + m) % m;
    const Int sm = ((params.s % m) + m) % m;
    Int a = kind == LucasKind::First ? Int(0) : Int(2 % m);
    Int b = kind == LucasKind::First ? Int(1 % m) : rm;
    if (n == 0) return a;
    for (std::uint64_t i = 1; i < n; ++i) {
        Int next = (rm * b + sm * a) % m;
        a = std::move(b);
        b = std::move(next);
    }
    return b;
}

RankOfAppearance rank_of_appearance(const LucasParams& params, const Int& p) {
    if (!is_prime(p)) throw domain_error("rank_of_appearance: p must be prime");
    if (params.s % p == 0)
        throw domain_error("rank_of_appearance: p divides s, rank may not exist");
    // the state map is invertible mod p (s is a unit), so the orbit of the
    // pair (a_n, a_{n+1}) is purely periodic with period below p^2
    if (fits_u64(p) && to_u64(p) < (1u << 31)) {
        const std::uint64_t pl = to_u64(p);
        const std::uint64_t rm = to_u64(Int(((params.r % p) + p) % p));
        const std::uint64_t sm = to_u64(Int(((params.s % p) + p) % p));
        std::uint64_t a = 0, b = 1 % pl;
        const std::uint64_t cap = pl * pl + 2;
        for (std::uint64_t n = 1; n <= cap; ++n) {
            const std::uint64_t next = (rm * b + sm * a) % pl;
            a = b;
            b = next;
            if (a == 0) return RankOfAppearance{p, n};
        }
        throw precision_error("rank_of_appearance: no zero within one period (unexpected)");
    }
    const Int rm = ((params.r % p) + p) % p;
    const Int sm = ((params.s % p) + p) % p;
    Int a = 0, b = 1 % p;
    const Int cap = p * p + 2;
    std::uint64_t n = 0;
    for (Int i = 1; i <= cap; ++i) {
        Int next = (rm * b + sm * a) % p;
        a = b;
        b = next;
        ++n;  // a now holds a_n mod p
        if (a == 0) return RankOfAppearance{p, n};
    }
    throw precision_error("rank_of_appearance: no zero within one period (unexpected)");
}

namespace {

// vp(a_idx) by evaluating the single term: exact for small indices, else
// mod p^8, aborting if the valuation reaches the precision.
long vp_of_term(const LucasParams& params, const Int& p, std::uint64_t idx) {
    constexpr std::uint64_t kExactIndexCap = 20000;
    if (idx <= kExactIndexCap) {
        Int t = lucas_term(params, LucasKind::First, idx);
        if (t == 0) throw domain_error("vp_of_term: zero term in non-degenerate sequence");
        return vp_unchecked(t, p);
    }
    constexpr unsigned kPrecision = 8;
    const Int mod = int_pow(p, kPrecision);
    Int t = lucas_term_mod(params, LucasKind::First, idx, mod);
    if (t == 0) throw precision_error("vp_of_term: valuation >= 8, raise the precision");
    return vp_unchecked(t, p);
}

LucasValuationConstants compute_constants(const LucasParams& params, const Int& p) {
    LucasValuationConstants c;
    if (params.delta % p == 0) {
        c.vp_ap = vp_of_term(params, p, static_cast<std::uint64_t>(p.get_ui()));
        return c;
    }
    const auto rank = rank_of_appearance(params, p);
    c.tau = rank.tau;
    c.vp_atau = vp_of_term(params, p, rank.tau);
    c.vp_aptau = vp_of_term(params, p, static_cast<std::uint64_t>(p.get_ui()) * rank.tau);
    return c;
}

// read-only after first computation; guarded for concurrent callers
std::map<std::tuple<Int, Int, Int>, LucasValuationConstants>& constants_cache() {
    static std::map<std::tuple<Int, Int, Int>, LucasValuationConstants> cache;
    return cache;
}
std::mutex constants_mutex;

}  // namespace

LucasValuationConstants lucas_valuation_constants(const LucasParams& params, const Int& p) {
    if (!is_prime(p)) throw domain_error("lucas_valuation_constants: p must be prime");
    if (params.s % p == 0) throw domain_error("lucas_valuation_constants: p divides s");
    const auto key = std::make_tuple(params.r, params.s, p);
    {
        std::lock_guard<std::mutex> lock(constants_mutex);
        auto it = constants_cache().find(key);
        if (it != constants_cache().end()) return it->second;
    }
    LucasValuationConstants c = compute_constants(params, p);
    std::lock_guard<std::mutex> lock(constants_mutex);
    return constants_cache().emplace(key, std::move(c)).first->second;
}

Valuation vp_first_kind(const LucasParams& params, const Int& p, std::uint64_t n) {
    if (!is_prime(p)) throw domain_error("vp_first_kind: p must be prime");
    if (params.s % p == 0) throw domain_error("vp_first_kind: p divides s");
    if (n == 0) return Valuation::infinity();
    const auto c = lucas_valuation_constants(params, p);
    const Int np(static_cast<unsigned long>(n));
    const long vpn = vp_unchecked(np, p);
    if (params.delta % p == 0) {
        if (np % p == 0) return Valuation::finite(vpn + *c.vp_ap - 1);
        return Valuation::finite(0);
    }
    if (n % *c.tau != 0) return Valuation::finite(0);
    if (np % p == 0) return Valuation::finite(vpn + *c.vp_aptau - 1);
    return Valuation::finite(*c.vp_atau);
}

DensityVerdict decide_first_kind(const LucasParams& params, const Int& p) {
    if (!is_prime(p)) throw domain_error("decide_first_kind: p must be prime");
    if (params.s % p != 0) return DensityVerdict::dense("Thm Recurrence(b)");
    if (params.r % p != 0) {
        // a_n = r^(n-1) mod p by induction, a unit for every n >= 1
        return DensityVerdict::not_dense(ValuationObstruction{p, 0, 0}, "Thm Recurrence(a)");
    }
    return DensityVerdict::undecided("p divides both r and s");
}

DensityVerdict decide_second_kind(const LucasParams& params, const Int& p) {
    if (!is_prime(p)) throw domain_error("decide_second_kind: p must be prime");
    if (p == 2) {
        if (params.r == 1 && params.s == 1) {
            // Lucas numbers mod 8 cycle through {1,2,3,4,5,7} (period 12, n >= 1):
            // 8 never divides L_n, so quotient valuations stay within [-2, 2]
            return DensityVerdict::not_dense(
                ResidueObstruction{Int(8), {Int(1), Int(2), Int(3), Int(4), Int(5), Int(7)}},
                "Cor Fibonacci(b)");
        }
        return DensityVerdict::undecided("only odd primes are covered");
    }
    if (params.s % p == 0) throw domain_error("decide_second_kind: p divides s");
    // scan b_n mod p over one full period of the state pair
    if (fits_u64(p) && to_u64(p) < (1u << 31)) {
        const std::uint64_t pl = to_u64(p);
        const std::uint64_t rm = to_u64(Int(((params.r % p) + p) % p));
        const std::uint64_t sm = to_u64(Int(((params.s % p) + p) % p));
        std::uint64_t a = 2 % pl, b = rm;
        const std::uint64_t start_a = a, start_b = b;
        const std::uint64_t cap = pl * pl + 2;
        for (std::uint64_t n = 0; n <= cap; ++n) {
            if (n > 0 && a == 0) return DensityVerdict::dense("Thm Recurrence(c)");
            const std::uint64_t next = (rm * b + sm * a) % pl;
            a = b;
            b = next;
            if (a == start_a && b == start_b) break;
        }
        return DensityVerdict::not_dense(ValuationObstruction{p, 0, 0}, "Thm Recurrence(c)");
    }
    const Int rm = ((params.r % p) + p) % p;
    const Int sm = ((params.s % p) + p) % p;
    Int a = 2 % p, b = rm;
    const Int start_a = a, start_b = b;
    const Int cap = p * p + 2;
    for (Int n = 0; n <= cap; ++n) {
        if (n > 0 && a == 0) return DensityVerdict::dense("Thm Recurrence(c)");
        Int next = (rm * b + sm * a) % p;
        a = b;
        b = next;
        if (a == start_a && b == start_b) break;
    }
    return DensityVerdict::not_dense(ValuationObstruction{p, 0, 0}, "Thm Recurrence(c)");
}

LucasParams power_minus_one_family(const Int& b) {
    if (b >= -1 && b <= 1) throw domain_error("power_minus_one_family: |b| must be >= 2");
    return lucas_params(b + 1, -b);
}

SetSample lucas_residue_sample(const LucasParams& params, LucasKind kind, const Int& p,
                               unsigned K, std::uint64_t n_max) {
    if (!is_prime(p)) throw domain_error("lucas_residue_sample: p must be prime");
    if (K < 1 || n_max < 1 || n_max > 20000)
        throw domain_error("lucas_residue_sample: bad parameters");
    const Int mod = int_pow(p, K);
    Int a = kind == LucasKind::First ? 0 : 2;
    Int b = kind == LucasKind::First ? 1 : params.r;
    std::vector<Int> elems;
    // |a_n| mod p^K keeps both vp(a_n) (when below K) and the unit part
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        Int next = params.r * b + params.s * a;
        a = std::move(b);
        b = std::move(next);  // a holds the exact term a_n
        Int residue = abs(a) % mod;
        if (residue != 0) elems.push_back(residue);
    }
    if (elems.empty()) throw precision_error("lucas_residue_sample: all residues vanished");
    return SetSample::make(std::move(elems),
                           "lucas(" + params.r.get_str() + "," + params.s.get_str() + ")" +
                               (kind == LucasKind::First ? " first" : " second") + " mod " +
                               p.get_str() + "^" + std::to_string(K),
                           mod);
}

}  // namespace padiq
