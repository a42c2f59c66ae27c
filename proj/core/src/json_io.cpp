#include "padiq/json_io.hpp"

namespace padiq {

json int_to_json(const Int& n) {
    if (n.fits_slong_p()) return static_cast<std::int64_t>(n.get_si());
    return n.get_str();
}

json to_json(const Valuation& v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

json to_json(const Certificate& cert) {
    json out;
    if (const auto* vo = std::get_if<ValuationObstruction>(&cert)) {
        out["kind"] = "ValuationObstruction";
        out["prime"] = int_to_json(vo->p);
        out["period"] = vo->period;
        out["residue"] = vo->residue;
    } else if (const auto* ro = std::get_if<ResidueObstruction>(&cert)) {
        out["kind"] = "ResidueObstruction";
        out["modulus"] = int_to_json(ro->modulus);
        json allowed = json::array();
        for (const Int& a : ro->allowed) allowed.push_back(int_to_json(a));
        out["allowed"] = allowed;
    } else {
        const auto& ba = std::get<BoundedAwayFrom>(cert);
        out["kind"] = "BoundedAwayFrom";
        out["prime"] = int_to_json(ba.p);
        out["target"] = ba.target.str();
        out["radius_exponent"] = ba.radius_exponent;
    }
    return out;
}

json to_json(const DensityVerdict& verdict) {
    json out;
    out["status"] = to_string(verdict.status);
    if (verdict.certificate) out["certificate"] = to_json(*verdict.certificate);
    out["theorem_tag"] = verdict.theorem_tag;
    return out;
}

json to_json(const OracleReport& report) {
    json out;
    out["prime"] = int_to_json(report.p);
    out["exponent"] = report.r;
    out["window"] = report.window;
    json attained = json::array();
    json witnesses = json::object();
    for (const auto& [target, pair] : report.witnesses) {
        attained.push_back(json::array({target.first, int_to_json(target.second)}));
        const std::string key = std::to_string(target.first) + "," + target.second.get_str();
        witnesses[key] = json::array({int_to_json(pair.first), int_to_json(pair.second)});
    }
    out["attained"] = attained;
    json missing = json::array();
    for (const auto& [v, u] : report.missing) missing.push_back(json::array({v, int_to_json(u)}));
    out["missing"] = missing;
    out["witnesses"] = witnesses;
    return out;
}

json to_json(const PrimitiveRootProfile& profile) {
    json out;
    out["p"] = profile.p;
    out["q"] = profile.q;
    out["p_pr_q"] = profile.p_pr_q;
    out["q_pr_p"] = profile.q_pr_p;
    out["p_pr_q2"] = profile.p_pr_q2;
    out["q_pr_p2"] = profile.q_pr_p2;
    return out;
}

json to_json(const SieveWitness& witness) {
    json out;
    out["p"] = witness.p;
    out["q"] = witness.q;
    out["h"] = witness.h;
    out["ell"] = witness.ell;
    return out;
}

}  // namespace padiq
