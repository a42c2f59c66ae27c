#include "padiq/oracle.hpp"

#include "padiq/modular.hpp"

#include <algorithm>
#include <cstdint>
#include <thread>

namespace padiq {

std::set<long> valuation_spectrum(const SetSample& sample, const Int& p) {
    if (!is_prime(p)) throw domain_error("valuation_spectrum: p must be prime");
    std::set<long> out;
    for (const Int& a : sample.elements) out.insert(vp_unchecked(a, p));
    return out;
}

namespace {

struct Decomp {
    long v;
    std::uint64_t u;  // unit residue; modulus is capped so this fits
};

constexpr std::uint64_t kMaxModulus = 1u << 24;

std::vector<Decomp> decompose(const SetSample& sample, const PrimePower& pp, unsigned workers) {
    std::vector<Decomp> out(sample.elements.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
        Int reduced, u;
        for (std::size_t i = lo; i < hi; ++i) {
            long v = static_cast<long>(mpz_remove(reduced.get_mpz_t(),
                                                  sample.elements[i].get_mpz_t(),
                                                  pp.p.get_mpz_t()));
            u = reduced % pp.modulus;
            out[i] = Decomp{v, to_u64(u)};
        }
    };
    if (workers <= 1 || sample.elements.size() < 1024) {
        work(0, out.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (out.size() + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            std::size_t lo = std::min(out.size(), w * chunk);
            std::size_t hi = std::min(out.size(), lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& t : pool) t.join();
    }
    return out;
}

}  // namespace

OracleReport coverage_check(const SetSample& sample, const PrimePower& pp, long V,
                            unsigned workers) {
    if (V < 0) throw domain_error("coverage_check: window must be >= 0");
    if (pp.modulus > static_cast<unsigned long>(kMaxModulus))
        throw domain_error("coverage_check: modulus too large for the coverage grid");
    const std::uint64_t mod = to_u64(pp.modulus);
    const std::uint64_t prime = to_u64(pp.p);

    // unit residues mod p^r, their index, and their inverses
    std::vector<std::uint64_t> units;
    std::vector<std::int32_t> index_of(mod, -1);
    for (std::uint64_t u = 1; u < mod; ++u) {
        if (u % prime != 0) {
            index_of[u] = static_cast<std::int32_t>(units.size());
            units.push_back(u);
        }
    }
    std::vector<std::uint64_t> inverse(units.size());
    for (std::size_t i = 0; i < units.size(); ++i)
        inverse[i] = to_u64(mod_inverse(Int(static_cast<unsigned long>(units[i])), pp.modulus));

    const auto decomp = decompose(sample, pp, workers);

    // group element indices: per valuation, the first (smallest) element of each unit class
    std::map<long, std::vector<std::int32_t>> first_by_unit;  // v -> unit index -> element idx
    for (std::size_t i = 0; i < decomp.size(); ++i) {
        auto [it, inserted] = first_by_unit.try_emplace(decomp[i].v);
        if (inserted) it->second.assign(units.size(), -1);
        std::int32_t ui = index_of[decomp[i].u];
        if (it->second[ui] < 0) it->second[ui] = static_cast<std::int32_t>(i);
    }
    struct Cls {
        long v;
        std::vector<std::pair<std::uint64_t, std::int32_t>> members;  // (unit, element idx), unit asc
    };
    std::vector<Cls> classes;
    for (auto& [v, firsts] : first_by_unit) {
        Cls c{v, {}};
        for (std::size_t ui = 0; ui < units.size(); ++ui)
            if (firsts[ui] >= 0) c.members.emplace_back(units[ui], firsts[ui]);
        classes.push_back(std::move(c));
    }

    OracleReport report;
    report.p = pp.p;
    report.r = pp.r;
    report.window = V;

    std::vector<std::int32_t> attained(units.size());
    for (long v = -V; v <= V; ++v) {
        std::fill(attained.begin(), attained.end(), -1);
        std::size_t found = 0;
        for (const Cls& ci : classes) {
            const long vj = ci.v - v;
            auto jt = std::lower_bound(classes.begin(), classes.end(), vj,
                                       [](const Cls& c, long val) { return c.v < val; });
            if (jt == classes.end() || jt->v != vj) continue;
            for (const auto& [u1, e1] : ci.members) {
                for (const auto& [u2, e2] : jt->members) {
                    const std::uint64_t t = u1 * inverse[index_of[u2]] % mod;
                    std::int32_t& slot = attained[index_of[t]];
                    if (slot < 0) {
                        slot = 1;
                        ++found;
                        report.witnesses.emplace(
                            OracleTarget{v, Int(static_cast<unsigned long>(t))},
                            std::make_pair(sample.elements[e1], sample.elements[e2]));
                    }
                }
                if (found == units.size()) break;
            }
            if (found == units.size()) break;
        }
        if (found < units.size()) {
            for (std::size_t ui = 0; ui < units.size(); ++ui)
                if (attained[ui] < 0)
                    report.missing.emplace_back(v, Int(static_cast<unsigned long>(units[ui])));
        }
    }
    return report;
}

CertificateCheck verify_certificate(const Certificate& cert, const SetSample& sample,
                                    std::uint64_t budget) {
    if (budget == 0) throw domain_error("verify_certificate: budget must be positive");

    if (const auto* vo = std::get_if<ValuationObstruction>(&cert)) {
        if (!is_prime(vo->p)) throw domain_error("verify_certificate: certificate prime invalid");
        std::uint64_t used = 0;
        for (const Int& a : sample.elements) {
            if (used++ >= budget) break;
            long v = vp_unchecked(a, vo->p);
            bool ok = vo->period == 0
                          ? v == vo->residue
                          : ((v - vo->residue) % static_cast<long>(vo->period)) == 0;
            if (!ok)
                return {false, "element " + a.get_str() + " has nu_p = " + std::to_string(v)};
        }
        return {true, ""};
    }
    if (const auto* ro = std::get_if<ResidueObstruction>(&cert)) {
        if (ro->allowed.empty() || ro->modulus < 2)
            throw domain_error("verify_certificate: malformed residue obstruction");
        std::uint64_t used = 0;
        for (const Int& a : sample.elements) {
            if (used++ >= budget) break;
            Int r = a % ro->modulus;
            if (!std::binary_search(ro->allowed.begin(), ro->allowed.end(), r))
                return {false, "element " + a.get_str() + " is " + r.get_str() + " mod " +
                                   ro->modulus.get_str()};
        }
        return {true, ""};
    }
    const auto& ba = std::get<BoundedAwayFrom>(cert);
    if (!is_prime(ba.p)) throw domain_error("verify_certificate: certificate prime invalid");
    std::uint64_t used = 0;
    for (const Int& a : sample.elements) {
        for (const Int& b : sample.elements) {
            if (used++ >= budget) return {true, ""};
            Rational diff = Rational(a, b) - ba.target;
            Valuation v = vp(diff, ba.p);
            if (v >= Valuation::finite(static_cast<long>(ba.radius_exponent)))
                return {false, "pair (" + a.get_str() + ", " + b.get_str() + ") lands within p^-" +
                                   std::to_string(ba.radius_exponent) + " of " + ba.target.str()};
        }
    }
    return {true, ""};
}

DenseInNCheck dense_in_N_check(const SetSample& sample, const PrimePower& pp) {
    if (pp.modulus > static_cast<unsigned long>(kMaxModulus))
        throw domain_error("dense_in_N_check: modulus too large to enumerate");
    const std::uint64_t mod = to_u64(pp.modulus);
    std::vector<bool> hit(mod, false);
    for (const Int& a : sample.elements) hit[to_u64(Int(a % pp.modulus))] = true;
    DenseInNCheck out{true, {}};
    for (std::uint64_t r = 0; r < mod; ++r) {
        if (!hit[r]) {
            out.dense = false;
            out.missing.emplace_back(static_cast<unsigned long>(r));
        }
    }
    return out;
}

}  // namespace padiq
