// padiq: density of quotient sets R(A) = { a/a' } in the p-adic numbers.
//
// Subcommands map onto the library: decide (theorem-backed verdicts with an
// optional oracle cross-check), oracle (residue-coverage sweeps), lucas
// (second-order recurrences), construct (counterexample set generators),
// pairs (primitive-root profiles and pattern scans), sieve (witness pairs),
// valuation (p-adic valuation of a rational).
//
// Exit codes: 0 success, 1 domain error, 2 cross-check disagreement,
// 64 usage error.

#include "CLI11.hpp"

#include "padiq/constructions.hpp"
#include "padiq/families.hpp"
#include "padiq/json_io.hpp"
#include "padiq/lucas.hpp"
#include "padiq/oracle.hpp"
#include "padiq/padic.hpp"
#include "padiq/pairs.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using padiq::Int;
using padiq::json;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitUsage = 64;

enum class Format { Json, Tsv, Human };

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "tsv") return Format::Tsv;
    if (s == "human") return Format::Human;
    throw padiq::domain_error("--format must be json, tsv or human");
}

json with_schema(json j) {
    j["schema"] = 1;
    return j;
}

void print_json(const json& j) { std::cout << with_schema(j).dump(2) << "\n"; }

struct OracleOptions {
    bool cross_check = false;
    unsigned r = 2;
    long window = 2;
    std::uint64_t bound = 10000;
    unsigned workers = 1;
};

std::string certificate_text(const padiq::Certificate& cert) {
    if (const auto* vo = std::get_if<padiq::ValuationObstruction>(&cert)) {
        if (vo->period == 0)
            return "every element has nu_" + vo->p.get_str() + " = " +
                   std::to_string(vo->residue);
        return "every element has nu_" + vo->p.get_str() + " = " + std::to_string(vo->residue) +
               " mod " + std::to_string(vo->period);
    }
    if (const auto* ro = std::get_if<padiq::ResidueObstruction>(&cert)) {
        std::string s = "every element lies in {";
        for (std::size_t i = 0; i < ro->allowed.size(); ++i)
            s += (i ? "," : "") + ro->allowed[i].get_str();
        return s + "} mod " + ro->modulus.get_str();
    }
    const auto& ba = std::get<padiq::BoundedAwayFrom>(cert);
    return "quotients stay outside the p^-" + std::to_string(ba.radius_exponent) +
           " ball around " + ba.target.str();
}

void print_verdict_human(const std::string& family, const Int& p,
                         const padiq::DensityVerdict& verdict) {
    std::cout << "R(" << family << ") in Q_" << p.get_str() << ": "
              << padiq::to_string(verdict.status);
    if (!verdict.theorem_tag.empty()) std::cout << "   [" << verdict.theorem_tag << "]";
    std::cout << "\n";
    if (verdict.certificate)
        std::cout << "  certificate: " << certificate_text(*verdict.certificate) << "\n";
}

// Dense verdicts must be matched by full coverage; NotDense certificates must
// survive verification. Coverage is one-directional evidence, so a NotDense
// verdict with full finite coverage is reported as a note, not a failure.
int run_cross_check(const padiq::DensityVerdict& verdict, const padiq::SetSample& sample,
                    const padiq::PrimePower& pp, const OracleOptions& opt, json& out) {
    using padiq::DensityStatus;
    json cc;
    cc["sample"] = sample.generator_label;
    cc["sample_size"] = sample.elements.size();
    int exit_code = kExitOk;
    if (verdict.status != DensityStatus::NotDense) {
        auto report = padiq::coverage_check(sample, pp, opt.window, opt.workers);
        cc["coverage"] = report.fully_covered() ? "COVERED" : "MISSING";
        if (!report.fully_covered()) {
            json miss = json::array();
            for (const auto& [v, u] : report.missing)
                miss.push_back(json::array({v, padiq::int_to_json(u)}));
            cc["missing"] = miss;
            if (verdict.status == DensityStatus::Dense) {
                cc["disagreement"] = "Dense verdict but the oracle misses targets";
                exit_code = kExitInconsistent;
            }
        }
    }
    if (verdict.certificate) {
        auto check = padiq::verify_certificate(*verdict.certificate, sample, 1u << 24);
        cc["certificate_check"] = check.ok ? "ok" : check.violation;
        if (!check.ok) {
            cc["disagreement"] = "certificate violated on the sample";
            exit_code = kExitInconsistent;
        } else if (verdict.status == DensityStatus::NotDense) {
            auto report = padiq::coverage_check(sample, pp, opt.window, opt.workers);
            cc["coverage"] = report.fully_covered() ? "COVERED" : "MISSING";
            if (report.fully_covered())
                cc["note"] = "coverage is full at this finite precision; the certificate, "
                             "not the sweep, carries the obstruction";
        }
    }
    out["cross_check"] = cc;
    return exit_code;
}

int emit_verdict(const std::string& family, const Int& p, const padiq::DensityVerdict& verdict,
                 Format format, const std::optional<padiq::SetSample>& sample,
                 const padiq::PrimePower& pp, const OracleOptions& opt) {
    json out;
    out["family"] = family;
    out["p"] = padiq::int_to_json(p);
    json v = padiq::to_json(verdict);
    for (auto& [key, value] : v.items()) out[key] = value;
    int exit_code = kExitOk;
    if (sample) exit_code = run_cross_check(verdict, *sample, pp, opt, out);
    if (format == Format::Human) {
        print_verdict_human(family, p, verdict);
        if (out.contains("cross_check")) {
            const auto& cc = out["cross_check"];
            std::cout << "  cross-check on " << cc["sample"].get<std::string>() << " ("
                      << cc["sample_size"] << " elements)";
            if (cc.contains("coverage")) std::cout << ": " << cc["coverage"].get<std::string>();
            if (cc.contains("certificate_check"))
                std::cout << ", certificate " << cc["certificate_check"].get<std::string>();
            std::cout << "\n";
            if (cc.contains("disagreement"))
                std::cout << "  DISAGREEMENT: " << cc["disagreement"].get<std::string>() << "\n";
        }
    } else {
        print_json(out);
    }
    return exit_code;
}

std::string flag_str(bool b) { return b ? "T" : "F"; }

void print_profiles_tsv(const std::vector<padiq::PrimitiveRootProfile>& profiles) {
    std::cout << "p\tq\tp<q\tq<p\tp<q^2\tq<p^2\n";
    for (const auto& pr : profiles)
        std::cout << pr.p << "\t" << pr.q << "\t" << flag_str(pr.p_pr_q) << "\t"
                  << flag_str(pr.q_pr_p) << "\t" << flag_str(pr.p_pr_q2) << "\t"
                  << flag_str(pr.q_pr_p2) << "\n";
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> parse_pair_list(const std::string& text) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw padiq::domain_error("pairs must look like p:q, got '" + item + "'");
        pairs.emplace_back(std::stoull(item.substr(0, colon)), std::stoull(item.substr(colon + 1)));
    }
    if (pairs.empty()) throw padiq::domain_error("empty pair list");
    return pairs;
}

void write_sample_to(const std::string& path, const padiq::SetSample& sample) {
    if (path.empty() || path == "-") {
        padiq::write_sample(std::cout, sample);
        return;
    }
    std::ofstream out(path);
    if (!out) throw padiq::domain_error("cannot open " + path);
    padiq::write_sample(out, sample);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic quotient set density toolkit"};
    app.set_config("--config", "", "key=value file mirroring the flags; flags win");
    app.require_subcommand(1);
    // global flags like --format may trail the subcommand
    app.fallthrough();

    std::string format_name = "json";
    app.add_option("--format", format_name, "output format: json, tsv or human")
        ->capture_default_str();
    unsigned workers = 1;
    app.add_option("--workers", workers, "worker threads for oracle and searches")
        ->check(CLI::Range(1u, 64u))
        ->capture_default_str();

    // ---- valuation ----
    auto* cmd_val = app.add_subcommand("valuation", "p-adic valuation, norm and unit part");
    std::string val_x;
    std::string val_p;
    unsigned val_r = 2;
    cmd_val->add_option("--x", val_x, "rational, e.g. 45/7 or -12")->required();
    cmd_val->add_option("--p", val_p, "prime")->required();
    cmd_val->add_option("--r", val_r, "exponent for the unit part modulus p^r");

    // ---- decide ----
    auto* cmd_decide = app.add_subcommand("decide", "theorem-backed density verdict for a family");
    cmd_decide->require_subcommand(1);
    OracleOptions oracle_opt;
    std::string decide_p;
    struct {
        std::string a, b;      // ap
        std::string c, ratio;  // geometric
        unsigned m = 2;        // power sums
        std::string up, ub;    // prime power union
    } fam;
    auto add_common = [&](CLI::App* sub, bool needs_p) {
        if (needs_p) sub->add_option("--p", decide_p, "prime")->required();
        sub->add_flag("--cross-check", oracle_opt.cross_check,
                      "run the coverage oracle on a generated sample, fail loudly on disagreement");
        sub->add_option("--bound", oracle_opt.bound, "sample bound for the cross-check");
        sub->add_option("--r", oracle_opt.r, "oracle precision exponent");
        sub->add_option("--window", oracle_opt.window, "oracle valuation window");
    };
    auto* d_ap = cmd_decide->add_subcommand("ap", "arithmetic progression {an+b}");
    d_ap->add_option("--a", fam.a)->required();
    d_ap->add_option("--b", fam.b)->required();
    add_common(d_ap, true);
    auto* d_geo = cmd_decide->add_subcommand("geometric", "geometric progression {c r^n}");
    d_geo->add_option("--c", fam.c)->required();
    d_geo->add_option("--ratio", fam.ratio)->required();
    add_common(d_geo, true);
    auto* d_sq = cmd_decide->add_subcommand("sum-of-squares", "sums of m squares");
    d_sq->add_option("--m", fam.m)->required();
    add_common(d_sq, true);
    auto* d_cu = cmd_decide->add_subcommand("sum-of-cubes", "sums of m cubes");
    d_cu->add_option("--m", fam.m)->required();
    add_common(d_cu, true);
    auto* d_un = cmd_decide->add_subcommand("prime-power-union", "{p^j} u {b^j}");
    d_un->add_option("--p", fam.up, "odd prime (also the decision prime)")->required();
    d_un->add_option("--b", fam.ub, "base")->required();
    add_common(d_un, false);

    // ---- oracle ----
    auto* cmd_oracle = app.add_subcommand("oracle", "residue-coverage sweep over a sample");
    std::string oracle_sample_path;
    std::string oracle_p;
    unsigned oracle_r = 2;
    long oracle_window = 2;
    unsigned oracle_squares = 0, oracle_cubes = 0;
    std::uint64_t oracle_bound = 10000;
    cmd_oracle->add_option("--sample", oracle_sample_path, "sample file (one integer per line)");
    cmd_oracle->add_option("--squares", oracle_squares, "generate sums of m squares instead");
    cmd_oracle->add_option("--cubes", oracle_cubes, "generate sums of m cubes instead");
    cmd_oracle->add_option("--bound", oracle_bound, "generator bound");
    cmd_oracle->add_option("--p", oracle_p, "prime")->required();
    cmd_oracle->add_option("--r", oracle_r, "precision exponent");
    cmd_oracle->add_option("--window", oracle_window, "valuation window");

    // ---- lucas ----
    auto* cmd_lucas = app.add_subcommand("lucas", "second-order recurrence density analysis");
    std::string lucas_r, lucas_s, lucas_p;
    std::string lucas_kind = "first";
    std::uint64_t lucas_nmax = 600;
    bool lucas_cross = false;
    cmd_lucas->add_option("--r", lucas_r)->required();
    cmd_lucas->add_option("--s", lucas_s)->required();
    cmd_lucas->add_option("--p", lucas_p, "prime (required unless --term is given)");
    cmd_lucas->add_option("--kind", lucas_kind, "first or second")->capture_default_str();
    cmd_lucas->add_option("--nmax", lucas_nmax, "terms sampled for the cross-check");
    cmd_lucas->add_flag("--cross-check", lucas_cross);
    std::int64_t lucas_term_index = -1;
    std::string lucas_term_mod;
    cmd_lucas->add_option("--term", lucas_term_index, "print the single term of that index instead");
    cmd_lucas->add_option("--mod", lucas_term_mod, "reduce the printed term mod this value");

    // ---- construct ----
    auto* cmd_con = app.add_subcommand("construct", "generate the counterexample sets");
    cmd_con->require_subcommand(1);
    std::string con_out;
    cmd_con->add_option("--out", con_out, "output file (default stdout)");
    std::size_t con_count = 100;
    auto* c_no3ap = cmd_con->add_subcommand("no3ap", "greedy 3-AP-free set, dense in every Q_p");
    c_no3ap->add_option("--count", con_count, "number of elements")->required();
    std::string con_bound = "10000";
    auto* c_zero = cmd_con->add_subcommand("zero-density", "density-zero set with dense quotients");
    c_zero->add_option("--bound", con_bound)->required();
    auto* c_sel = cmd_con->add_subcommand("selective", "members with nu_q <= 1 outside P");
    std::string sel_primes;
    std::string sel_qbound = "100";
    c_sel->add_option("--primes", sel_primes, "comma-separated P, e.g. 5,7")->required();
    c_sel->add_option("--qbound", sel_qbound);
    c_sel->add_option("--bound", con_bound);
    auto* c_thr = cmd_con->add_subcommand("threshold", "high lower-density set, dense nowhere");
    std::string thr_alpha = "1/2";
    c_thr->add_option("--alpha", thr_alpha, "rational in [0,1)")->required();
    c_thr->add_option("--bound", con_bound);
    auto* c_par = cmd_con->add_subcommand("partition", "valuation-parity class at p");
    std::string par_p = "3";
    std::string par_part = "A";
    c_par->add_option("--p", par_p, "prime")->required();
    c_par->add_option("--part", par_part, "A (even) or B (odd)");
    c_par->add_option("--bound", con_bound);

    // ---- pairs ----
    auto* cmd_pairs = app.add_subcommand("pairs", "primitive-root relation profiles");
    cmd_pairs->require_subcommand(1);
    auto* p_table = cmd_pairs->add_subcommand("table", "profiles for an explicit pair list");
    std::string table_pairs;
    p_table->add_option("--pairs", table_pairs, "comma-separated p:q list")->required();
    auto* p_search = cmd_pairs->add_subcommand("search", "scan all pairs p < q <= limit");
    std::string search_pattern_text;
    std::uint64_t search_limit = 2000;
    std::string search_checkpoint;
    p_search->add_option("--pattern", search_pattern_text, "four of T/F/*, e.g. TTF*")->required();
    p_search->add_option("--limit", search_limit)->required();
    p_search->add_option("--checkpoint", search_checkpoint, "resume-token file for long scans");

    // ---- sieve ----
    auto* cmd_sieve = app.add_subcommand("sieve", "witness pairs (p, ell): ell generates mod p^2, p not mod ell");
    std::uint64_t sieve_p_bound = 213623, sieve_h_bound = 10000;
    cmd_sieve->add_option("--p-bound", sieve_p_bound)->capture_default_str();
    cmd_sieve->add_option("--h-bound", sieve_h_bound)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const Format format = parse_format(format_name);
        oracle_opt.workers = workers;

        if (*cmd_val) {
            const padiq::Rational x = padiq::Rational::parse(val_x);
            const Int p(val_p);
            json out;
            out["x"] = x.str();
            out["p"] = padiq::int_to_json(p);
            auto v = padiq::vp(x, p);
            out["vp"] = padiq::to_json(v);
            out["abs"] = padiq::padic_abs(x, p).str();
            if (!x.is_zero()) {
                padiq::PrimePower pp(p, val_r);
                out["unit_part"] = padiq::int_to_json(padiq::unit_part(x, pp));
                out["unit_modulus"] = padiq::int_to_json(pp.modulus);
            }
            if (format == Format::Human) {
                std::cout << "nu_" << p.get_str() << "(" << x.str() << ") = " << v.str()
                          << ", |x|_p = " << padiq::padic_abs(x, p).str() << "\n";
            } else {
                print_json(out);
            }
            return kExitOk;
        }

        if (*cmd_decide) {
            padiq::FamilySpec spec = padiq::SumOfSquares{2};
            Int p;
            if (*d_ap) {
                spec = padiq::ArithmeticProgression{Int(fam.a), Int(fam.b)};
                p = Int(decide_p);
            } else if (*d_geo) {
                spec = padiq::GeometricProgression{Int(fam.c), Int(fam.ratio)};
                p = Int(decide_p);
            } else if (*d_sq) {
                spec = padiq::SumOfSquares{fam.m};
                p = Int(decide_p);
            } else if (*d_cu) {
                spec = padiq::SumOfCubes{fam.m};
                p = Int(decide_p);
            } else {
                spec = padiq::PrimePowerUnion{Int(fam.up), Int(fam.ub)};
                p = Int(fam.up);
            }
            auto verdict = padiq::decide(spec, p);
            padiq::PrimePower pp(p, oracle_opt.r);
            std::optional<padiq::SetSample> sample;
            if (oracle_opt.cross_check)
                sample = padiq::family_sample(spec, pp, oracle_opt.window, oracle_opt.bound);
            return emit_verdict(padiq::family_label(spec), p, verdict, format, sample, pp,
                                oracle_opt);
        }

        if (*cmd_oracle) {
            padiq::SetSample sample = [&] {
                if (!oracle_sample_path.empty()) {
                    std::ifstream in(oracle_sample_path);
                    if (!in) throw padiq::domain_error("cannot open " + oracle_sample_path);
                    return padiq::read_sample(in);
                }
                if (oracle_squares > 0)
                    return padiq::enumerate_power_sums(oracle_squares, 2, oracle_bound);
                if (oracle_cubes > 0)
                    return padiq::enumerate_power_sums(oracle_cubes, 3, oracle_bound);
                throw padiq::domain_error("oracle needs --sample, --squares or --cubes");
            }();
            padiq::PrimePower pp(Int(oracle_p), oracle_r);
            auto report = padiq::coverage_check(sample, pp, oracle_window, workers);
            if (format == Format::Human) {
                std::cout << "coverage at p=" << oracle_p << " r=" << oracle_r
                          << " V=" << oracle_window << " over " << sample.elements.size()
                          << " elements: "
                          << (report.fully_covered()
                                  ? "COVERED"
                                  : "MISSING " + std::to_string(report.missing.size()) +
                                        " targets")
                          << "\n";
            } else {
                json out = padiq::to_json(report);
                out["verdict"] = report.fully_covered() ? "COVERED" : "MISSING";
                out["sample"] = sample.generator_label;
                print_json(out);
            }
            return kExitOk;
        }

        if (*cmd_lucas) {
            auto params = padiq::lucas_params(Int(lucas_r), Int(lucas_s));
            const bool first = lucas_kind == "first";
            if (!first && lucas_kind != "second")
                throw padiq::domain_error("--kind must be first or second");
            const auto kind = first ? padiq::LucasKind::First : padiq::LucasKind::Second;
            if (lucas_term_index >= 0) {
                const auto n = static_cast<std::uint64_t>(lucas_term_index);
                const Int term = lucas_term_mod.empty()
                                     ? padiq::lucas_term(params, kind, n)
                                     : padiq::lucas_term_mod(params, kind, n, Int(lucas_term_mod));
                if (format == Format::Json) {
                    json out;
                    out["n"] = lucas_term_index;
                    out["term"] = padiq::int_to_json(term);
                    print_json(out);
                } else {
                    std::cout << term.get_str() << "\n";
                }
                return kExitOk;
            }
            if (lucas_p.empty()) throw padiq::domain_error("lucas: --p is required");
            const Int p(lucas_p);
            auto verdict = first ? padiq::decide_first_kind(params, p)
                                 : padiq::decide_second_kind(params, p);
            json out;
            out["r"] = padiq::int_to_json(params.r);
            out["s"] = padiq::int_to_json(params.s);
            out["p"] = padiq::int_to_json(p);
            out["kind"] = lucas_kind;
            json v = padiq::to_json(verdict);
            for (auto& [key, value] : v.items()) out[key] = value;
            if (params.s % p != 0) {
                out["tau"] = padiq::rank_of_appearance(params, p).tau;
                auto c = padiq::lucas_valuation_constants(params, p);
                json constants;
                if (c.vp_ap) constants["vp_ap"] = *c.vp_ap;
                if (c.vp_atau) constants["vp_atau"] = *c.vp_atau;
                if (c.vp_aptau) constants["vp_aptau"] = *c.vp_aptau;
                out["constants"] = constants;
            }
            int exit_code = kExitOk;
            if (lucas_cross) {
                padiq::PrimePower pp(p, oracle_opt.r);
                auto sample =
                    padiq::lucas_residue_sample(params, kind, p, oracle_opt.r + 8, lucas_nmax);
                exit_code = run_cross_check(verdict, sample, pp, oracle_opt, out);
            }
            if (format == Format::Human) {
                print_verdict_human("lucas(" + params.r.get_str() + "," + params.s.get_str() +
                                        ", " + lucas_kind + " kind)",
                                    p, verdict);
            } else {
                print_json(out);
            }
            return exit_code;
        }

        if (*cmd_con) {
            const Int bound(con_bound);
            if (*c_no3ap) {
                write_sample_to(con_out, padiq::greedy_no3ap_set(con_count));
            } else if (*c_zero) {
                write_sample_to(con_out, padiq::zero_density_dense_set(bound));
            } else if (*c_sel) {
                std::vector<Int> P;
                std::stringstream ss(sel_primes);
                std::string item;
                while (std::getline(ss, item, ',')) P.emplace_back(item);
                std::vector<Int> members;
                for (Int n = 1; n <= bound; ++n)
                    if (padiq::selective_prime_set_member(n, P, Int(sel_qbound)))
                        members.push_back(n);
                write_sample_to(con_out,
                                padiq::SetSample::make(std::move(members),
                                                       "selective P={" + sel_primes + "}", bound));
            } else if (*c_thr) {
                const padiq::Rational alpha = padiq::Rational::parse(thr_alpha);
                std::vector<Int> members;
                for (Int n = 1; n <= bound; ++n)
                    if (padiq::threshold_set_member(n, alpha)) members.push_back(n);
                write_sample_to(con_out,
                                padiq::SetSample::make(std::move(members),
                                                       "threshold alpha=" + thr_alpha, bound));
            } else if (*c_par) {
                const Int p(par_p);
                const auto want = par_part == "B" ? padiq::ParityClass::B : padiq::ParityClass::A;
                std::vector<Int> members;
                for (Int n = 1; n <= bound; ++n)
                    if (padiq::partition_by_valuation_parity(n, p) == want) members.push_back(n);
                write_sample_to(con_out, padiq::SetSample::make(
                                             std::move(members),
                                             "valuation parity " + par_part + " at p=" + par_p,
                                             bound));
            }
            return kExitOk;
        }

        if (*cmd_pairs) {
            std::vector<padiq::PrimitiveRootProfile> profiles;
            if (*p_table) {
                for (auto [p, q] : parse_pair_list(table_pairs))
                    profiles.push_back(padiq::profile(p, q));
            } else {
                profiles = padiq::search_pattern(padiq::PatternQuery::parse(search_pattern_text),
                                                 search_limit, workers, search_checkpoint);
            }
            if (format == Format::Json) {
                json arr = json::array();
                for (const auto& pr : profiles) arr.push_back(padiq::to_json(pr));
                json out;
                out["profiles"] = arr;
                print_json(out);
            } else {
                print_profiles_tsv(profiles);
            }
            return kExitOk;
        }

        if (*cmd_sieve) {
            auto witnesses = padiq::sieve_witnesses(sieve_p_bound, sieve_h_bound, workers);
            if (format == Format::Json) {
                json arr = json::array();
                for (const auto& w : witnesses) arr.push_back(padiq::to_json(w));
                json out;
                out["witnesses"] = arr;
                out["count"] = witnesses.size();
                print_json(out);
            } else {
                std::cout << "p\tq\th\tell\n";
                for (const auto& w : witnesses)
                    std::cout << w.p << "\t" << w.q << "\t" << w.h << "\t" << w.ell << "\n";
            }
            return kExitOk;
        }
    } catch (const padiq::precision_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitOk;
}
