#include "padiq/families.hpp"

#include "padiq/modular.hpp"
#include "padiq/padic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace padiq {

std::string family_label(const FamilySpec& spec) {
    if (const auto* ap = std::get_if<ArithmeticProgression>(&spec))
        return "ap(" + ap->a.get_str() + "n+" + ap->b.get_str() + ")";
    if (const auto* g = std::get_if<GeometricProgression>(&spec))
        return "geometric(" + g->c.get_str() + "*" + g->ratio.get_str() + "^n)";
    if (const auto* s = std::get_if<SumOfSquares>(&spec))
        return "S_" + std::to_string(s->m);
    if (const auto* c = std::get_if<SumOfCubes>(&spec))
        return "C_" + std::to_string(c->m);
    const auto& u = std::get<PrimePowerUnion>(spec);
    return "union(" + u.p.get_str() + "^j," + u.b.get_str() + "^j)";
}

namespace {

void require_prime(const Int& p) {
    if (!is_prime(p)) throw domain_error("decide: " + p.get_str() + " is not prime");
}

DensityVerdict decide_ap(ArithmeticProgression ap, const Int& p) {
    if (ap.a < 1) throw domain_error("decide: AP needs a >= 1");
    if (ap.b < 0) throw domain_error("decide: AP needs b >= 0");
    // quotient sets are scale-invariant: divide out the common p-power
    long t = 0;
    if (ap.b == 0) {
        t = vp_unchecked(ap.a, p);
    } else {
        t = std::min(vp_unchecked(ap.a, p), vp_unchecked(ap.b, p));
    }
    const Int pt = int_pow(p, static_cast<unsigned long>(t));
    Int a = ap.a / pt, b = ap.b / pt;
    if (a % p != 0) return DensityVerdict::dense("Lemma AP(a)");
    // p | a, p coprime to b: every element has the same valuation t
    return DensityVerdict::not_dense(ValuationObstruction{p, 0, t}, "Lemma AP(b)");
}

DensityVerdict decide_geometric(const GeometricProgression& g, const Int& p) {
    if (g.c == 0 || g.ratio == 0 || g.ratio == 1 || g.ratio == -1)
        throw domain_error("decide: geometric progression needs c != 0, ratio outside {0,1,-1}");
    if (g.ratio % p != 0) {
        // every element keeps the valuation of c
        return DensityVerdict::not_dense(ValuationObstruction{p, 0, vp_unchecked(g.c, p)},
                                         "Lemma Geometric");
    }
    // p | ratio: r^k = -1 mod p^2 has no solution, so quotients avoid -1
    return DensityVerdict::not_dense(BoundedAwayFrom{p, Rational(-1), 2}, "Lemma Geometric");
}

DensityVerdict decide_squares(const SumOfSquares& s, const Int& p) {
    if (s.m < 1) throw domain_error("decide: power count must be >= 1");
    if (s.m == 1)
        return DensityVerdict::not_dense(ValuationObstruction{p, 2, 0}, "Thm SOS(a)");
    if (s.m == 2) {
        if (p == 2)
            return DensityVerdict::not_dense(BoundedAwayFrom{p, Rational(3), 2}, "Thm SOS(b)");
        if (p % 4 == 1) return DensityVerdict::dense("Thm SOS(b)");
        // p = 3 mod 4: both valuations in a quotient are even
        return DensityVerdict::not_dense(ValuationObstruction{p, 2, 0}, "Thm SOS(b)");
    }
    return DensityVerdict::dense("Thm SOS(c)");
}

DensityVerdict decide_cubes(const SumOfCubes& c, const Int& p) {
    if (c.m < 1) throw domain_error("decide: power count must be >= 1");
    if (c.m == 1)
        return DensityVerdict::not_dense(ValuationObstruction{p, 3, 0}, "Thm Cubes(a)");
    if (c.m == 2) {
        if (p == 3)
            return DensityVerdict::not_dense(
                ResidueObstruction{Int(9), {Int(0), Int(1), Int(2), Int(7), Int(8)}},
                "Thm Cubes(b)");
        return DensityVerdict::dense("Thm Cubes(b)");
    }
    return DensityVerdict::dense("Thm Cubes(c)");
}

DensityVerdict decide_union(const PrimePowerUnion& u, const Int& p) {
    if (u.p != p)
        throw domain_error("decide: prime-power union is decided at its own prime");
    if (p == 2) return DensityVerdict::undecided("only odd primes are covered");
    if (gcd(u.b, u.p) != 1)
        throw domain_error("decide: union base must be coprime to the prime");
    const Int p2 = u.p * u.p;
    if (is_primitive_root(u.b, p2)) return DensityVerdict::dense("Thm PrimitiveRoot");
    // Either b misses a residue already mod p, or b generates mod p but
    // b^n = p+1 mod p^2 is unreachable.
    if (!is_primitive_root(u.b, u.p)) {
        // m lies in <b> mod p iff m^ord(b) = 1; pick the smallest one outside
        const Int ord = multiplicative_order(u.b, u.p);
        Int m = 2;
        while (m < u.p && mod_pow(m, ord, u.p) == 1) ++m;
        return DensityVerdict::not_dense(BoundedAwayFrom{u.p, Rational(m), 1},
                                         "Thm PrimitiveRoot");
    }
    return DensityVerdict::not_dense(BoundedAwayFrom{u.p, Rational(Int(u.p + 1)), 2},
                                     "Thm PrimitiveRoot");
}

}  // namespace

DensityVerdict decide(const FamilySpec& spec, const Int& p) {
    require_prime(p);
    if (const auto* ap = std::get_if<ArithmeticProgression>(&spec)) return decide_ap(*ap, p);
    if (const auto* g = std::get_if<GeometricProgression>(&spec)) return decide_geometric(*g, p);
    if (const auto* s = std::get_if<SumOfSquares>(&spec)) return decide_squares(*s, p);
    if (const auto* c = std::get_if<SumOfCubes>(&spec)) return decide_cubes(*c, p);
    return decide_union(std::get<PrimePowerUnion>(spec), p);
}

bool is_sum_of_three_squares(const Int& n) {
    if (n < 1) throw domain_error("is_sum_of_three_squares: n must be positive");
    Int m = n;
    while (m % 4 == 0) m /= 4;
    return m % 8 != 7;
}

namespace {

// smallest non-negative square root per quadratic-residue class mod p,
// cached per prime (the exhaustive acceptance sweeps hit this hard)
const std::vector<long>& sqrt_table(unsigned long p) {
    static std::map<unsigned long, std::vector<long>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(p);
    if (it != cache.end()) return it->second;
    std::vector<long> table(p, -1);
    for (unsigned long y = 0; y < p; ++y) {
        unsigned long c = y * y % p;
        if (table[c] < 0) table[c] = static_cast<long>(y);
    }
    return cache.emplace(p, std::move(table)).first->second;
}

}  // namespace

std::pair<Int, Int> lift_two_squares(const Int& n, const Int& p, unsigned r) {
    if (r < 1) throw domain_error("lift_two_squares: r must be >= 1");
    if (p == 2 || !is_prime(p) || p % 4 != 1)
        throw domain_error("lift_two_squares: p must be a prime = 1 mod 4");
    const unsigned long pl = p.get_ui();
    const auto& roots = sqrt_table(pl);
    Int x, y;
    bool found = false;
    if (n % p == 0) {
        x = 1;
        y = roots[pl - 1];  // y^2 = -1 mod p, exists since p = 1 mod 4
        found = y >= 0;
    } else {
        // smallest x with n - x^2 a residue, then the smallest root
        for (unsigned long xc = 1; xc < pl; ++xc) {
            const Int target = ((n - Int(xc) * xc) % p + p) % p;
            const long root = roots[target.get_ui()];
            if (root >= 0) {
                x = xc;
                y = root;
                found = true;
                break;
            }
        }
    }
    if (!found) throw domain_error("lift_two_squares: no base solution (unexpected)");

    Int mod = p;
    const Int inv2 = mod_inverse(Int(2), p);
    for (unsigned k = 1; k < r; ++k) {
        // x^2 + y^2 = n + m * p^k; cancel m with x += i p^k, i = -(2x)^{-1} m mod p
        const Int m = (x * x + y * y - n) / mod;
        const Int i = (-(inv2 * mod_inverse(x, p) % p) * m % p + p) % p;
        x += i * mod;
        mod *= p;
        x %= mod;  // keep the representative small; still a unit mod p
    }
    if ((x * x + y * y - n) % mod != 0 || x % p == 0)
        throw domain_error("lift_two_squares: lift invariant broken (unexpected)");
    return {x, y};
}

std::pair<Int, Int> lift_two_cubes_mod7(const Int& m, unsigned r) {
    if (r < 1) throw domain_error("lift_two_cubes_mod7: r must be >= 1");
    const Int m7 = (m % 7 + 7) % 7;
    if (m7 == 3 || m7 == 4)
        throw domain_error("lift_two_cubes_mod7: " + m7.get_str() +
                           " mod 7 is not a sum of two cubes");
    Int x, y;
    bool found = false;
    for (long xc = 1; !found && xc < 7; ++xc) {
        for (long yc = 0; !found && yc < 7; ++yc) {
            if ((Int(xc * xc * xc + yc * yc * yc) - m) % 7 == 0) {
                x = xc;
                y = yc;
                found = true;
            }
        }
    }
    if (!found) throw domain_error("lift_two_cubes_mod7: no base solution (unexpected)");

    Int mod = 7;
    for (unsigned k = 1; k < r; ++k) {
        // x^3 + y^3 = m + 7^k ell; 3^{-1} = 5 mod 7, so i = -5 ell x^{-2}
        const Int ell = (x * x * x + y * y * y - m) / mod;
        const Int x2inv = mod_inverse(x * x % 7, Int(7));
        const Int i = ((-5 * ell * x2inv) % 7 + 7) % 7;
        x += i * mod;
        mod *= 7;
        x %= mod;
    }
    if ((x * x * x + y * y * y - m) % mod != 0 || x % 7 == 0)
        throw domain_error("lift_two_cubes_mod7: lift invariant broken (unexpected)");
    return {x, y};
}

std::array<Int, 3> lift_three_cubes_mod3(const Int& m, unsigned r) {
    if (r < 2) throw domain_error("lift_three_cubes_mod3: r must be >= 2");
    const Int m9 = (m % 9 + 9) % 9;
    if (m9 == 4 || m9 == 5)
        throw domain_error("lift_three_cubes_mod3: " + m9.get_str() +
                           " mod 9 is not a sum of three cubes");
    Int x, y, z;
    bool found = false;
    for (long xc = 1; !found && xc < 9; ++xc) {
        if (xc % 3 == 0) continue;
        for (long yc = 0; !found && yc < 9; ++yc) {
            for (long zc = 0; !found && zc < 9; ++zc) {
                if ((Int(xc * xc * xc + yc * yc * yc + zc * zc * zc) - m) % 9 == 0) {
                    x = xc;
                    y = yc;
                    z = zc;
                    found = true;
                }
            }
        }
    }
    if (!found) throw domain_error("lift_three_cubes_mod3: no base solution (unexpected)");

    Int mod = 9;  // 3^k, k = 2
    for (unsigned k = 2; k < r; ++k) {
        // x^3 + y^3 + z^3 = m + 3^k ell; correcting at 3^(k-1) since
        // (x + i 3^(k-1))^3 = x^3 + i x^2 3^k mod 3^(k+1) for k >= 2
        const Int ell = (x * x * x + y * y * y + z * z * z - m) / mod;
        const Int x2inv = mod_inverse(x * x % 3, Int(3));
        const Int i = ((-ell * x2inv) % 3 + 3) % 3;
        x += i * (mod / 3);
        mod *= 3;
        x %= mod;
    }
    if ((x * x * x + y * y * y + z * z * z - m) % mod != 0 || x % 3 == 0)
        throw domain_error("lift_three_cubes_mod3: lift invariant broken (unexpected)");
    return {x, y, z};
}

SetSample enumerate_power_sums(unsigned m, unsigned exponent, std::uint64_t bound) {
    if (m < 1) throw domain_error("enumerate_power_sums: m must be >= 1");
    if (exponent != 2 && exponent != 3)
        throw domain_error("enumerate_power_sums: exponent must be 2 or 3");
    if (bound < 1) throw domain_error("enumerate_power_sums: bound must be >= 1");
    auto pw = [exponent](std::uint64_t x) {
        return exponent == 2 ? x * x : x * x * x;
    };
    std::vector<bool> cur(bound + 1, false);
    cur[0] = true;
    for (unsigned round = 0; round < m; ++round) {
        std::vector<bool> next(bound + 1, false);
        for (std::uint64_t s = 0; s <= bound; ++s) {
            if (!cur[s]) continue;
            for (std::uint64_t x = 0; s + pw(x) <= bound; ++x) next[s + pw(x)] = true;
        }
        cur.swap(next);
    }
    std::vector<Int> elems;
    for (std::uint64_t v = 1; v <= bound; ++v)
        if (cur[v]) elems.emplace_back(static_cast<unsigned long>(v));
    const char* kind = exponent == 2 ? "squares" : "cubes";
    return SetSample::make(std::move(elems),
                           "sums of " + std::to_string(m) + " " + kind,
                           Int(static_cast<unsigned long>(bound)));
}

SetSample family_sample(const FamilySpec& spec, const PrimePower& pp, long V,
                        std::uint64_t bound) {
    const Int big_bound(static_cast<unsigned long>(bound));
    if (const auto* ap = std::get_if<ArithmeticProgression>(&spec)) {
        std::vector<Int> elems;
        for (Int v = ap->b == 0 ? ap->a : ap->b; v <= big_bound; v += ap->a) elems.push_back(v);
        if (elems.empty()) throw domain_error("family_sample: bound too small for this AP");
        return SetSample::make(std::move(elems), family_label(spec), big_bound);
    }
    if (const auto* g = std::get_if<GeometricProgression>(&spec)) {
        // positive representatives; valuations and unit parts are sign-blind
        std::vector<Int> elems;
        for (Int v = abs(g->c); v <= big_bound; v *= abs(g->ratio)) elems.push_back(v);
        if (elems.empty()) throw domain_error("family_sample: bound too small for this progression");
        return SetSample::make(std::move(elems), family_label(spec), big_bound);
    }
    if (const auto* s = std::get_if<SumOfSquares>(&spec))
        return enumerate_power_sums(s->m, 2, bound);
    if (const auto* c = std::get_if<SumOfCubes>(&spec))
        return enumerate_power_sums(c->m, 3, bound);

    // reduced-power sample: {p^i : i <= V} plus the cyclic group generated by
    // b mod p^r; unit residues never collide with the p-power elements
    const auto& u = std::get<PrimePowerUnion>(spec);
    if (gcd(u.b, u.p) != 1)
        throw domain_error("family_sample: union base must be coprime to the prime");
    std::vector<Int> elems;
    Int pi = 1;
    for (long i = 0; i <= std::max<long>(V, 1); ++i) {
        elems.push_back(pi);
        pi *= u.p;
    }
    Int x = ((u.b % pp.modulus) + pp.modulus) % pp.modulus;
    Int start = x;
    do {
        elems.push_back(x);
        x = x * u.b % pp.modulus;
        if (x < 0) x += pp.modulus;
    } while (x != start);
    Int mx = *std::max_element(elems.begin(), elems.end());
    return SetSample::make(std::move(elems), family_label(spec), mx);
}

}  // namespace padiq
