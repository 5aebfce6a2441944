#pragma once
// Command-line surface.  Subcommands:
//   invariants  --braid "1 1 1" --n 2 [--cut 1] | --file d.json   [--json]
//   burau       --word "1 -2" --n 3 | --full-twist n [--power k | --limit]
//   chain       --file chain.json | --braid ... --n m [--cut c]
//               [--greens] [--det] [--cartier-foata]
//   family      --file fam.json  --growth-rate | --alexander-limit |
//               --dt t | --report [--tmax N] [--r0 R]
//   verify      [--only id] [--json]  (hidden: --inject-golden-fault)
//
// Exit codes: 0 success, 1 computation error, 2 usage error, 3 verification
// failure.  All JSON output is deterministic (ordered keys, ordered terms).

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "knotwalk/corpus.hpp"
#include "knotwalk/invariants.hpp"
#include "knotwalk/io.hpp"
#include "knotwalk/markov.hpp"
#include "knotwalk/twisting.hpp"
#include "knotwalk/verify.hpp"
#include "vendor/CLI11.hpp"

namespace knotwalk {

namespace cli_detail {

inline BraidWord parse_braid_shorthand(const std::string& text, int n) {
    BraidWord w;
    w.strand_count = n;
    std::istringstream is(text);
    int letter = 0;
    while (is >> letter) w.letters.push_back(letter);
    if (!is.eof())
        throw std::invalid_argument("braid word must be space-separated integers: " + text);
    validate_braid(w);
    return w;
}

inline UprightDiagram diagram_from_file(const std::string& path, int cut) {
    Json j = load_json_file(path);
    const Json& inner = (j.is_object() && j.contains("diagram")) ? j["diagram"] : j;
    if (inner.is_object() && inner.contains("word"))
        return braid_closure_to_long(braid_from_json(inner), cut);
    return diagram_from_json(j);
}

inline Json invariants_report_json(const UprightDiagram& d, const std::optional<BraidWord>& word,
                                   const std::string& name) {
    KnotInvariants inv = compute_invariants(d);
    const bool positive = is_positive_diagram(d);
    bool nonpositive = true;
    for (const auto& [e2, c] : inv.delta1.terms())
        if (c > 0) nonpositive = false;
    Json j = Json::object();
    if (!name.empty()) j["name"] = name;
    if (word) j["presentation"] = braid_to_json(*word);
    j["diagram"] = diagram_to_json(d);
    j["alexander"] = poly_to_json(inv.alexander);
    j["conway"] = poly_to_json(inv.conway);
    j["rho1"] = poly_to_json(inv.rho1);
    j["rho1_reduced"] = poly_to_json(inv.rho1_reduced);
    j["delta1"] = poly_to_json(inv.delta1);
    j["positive_diagram"] = positive;
    j["delta1_nonpositive"] = nonpositive;
    return j;
}

inline void print_invariants_text(std::ostream& out, const UprightDiagram& d,
                                  const std::string& name) {
    KnotInvariants inv = compute_invariants(d);
    if (!name.empty()) out << "name: " << name << "\n";
    out << "alexander: " << poly_to_text(inv.alexander) << "\n";
    out << "conway: " << poly_to_text(inv.conway, "z") << "\n";
    out << "rho1: " << poly_to_text(inv.rho1) << "\n";
    out << "rho1_reduced: " << poly_to_text(inv.rho1_reduced) << "\n";
    out << "delta1: " << poly_to_text(inv.delta1, "z") << "\n";
    bool nonpositive = true;
    for (const auto& [e2, c] : inv.delta1.terms())
        if (c > 0) nonpositive = false;
    out << "positive_diagram: " << (is_positive_diagram(d) ? "true" : "false") << "\n";
    out << "delta1_nonpositive: " << (nonpositive ? "true" : "false") << "\n";
}

inline Json growth_report_json(const TwistedFamily& f, const GrowthReport& rep) {
    Json dvals = Json::array();
    for (const LaurentPoly& p : rep.d_values) dvals.push_back(poly_to_json(p));
    Json rvals = Json::array();
    for (const LaurentPoly& p : rep.rho1_values) rvals.push_back(poly_to_json(p));
    Json depths = Json::array();
    for (long long dep : rep.agreement_depth) depths.push_back(dep);
    return Json{{"family", family_to_json(f)},
                {"growth_rate", ratfun_to_json(rep.limit)},
                {"alexander_limit", ratfun_to_json(rep.alexander_limit_value)},
                {"r0", rep.r0},
                {"d", dvals},
                {"agreement_depth", depths},
                {"depths_nondecreasing", rep.depths_nondecreasing},
                {"rho1", rvals},
                {"rho1_pairwise_distinct", rep.rho1_pairwise_distinct},
                {"alpha", rep.alpha},
                {"tau_det_matches", rep.tau_det_matches}};
}

}  // namespace cli_detail

// Runs the CLI on `args` (program name excluded).  Returns the exit code.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    using cli_detail::parse_braid_shorthand;

    CLI::App app{"Exact invariants of long knots from braid closures and twisted families"};
    app.require_subcommand(1);

    // --- invariants ---
    auto* inv_cmd = app.add_subcommand("invariants", "Alexander, Conway, rho1, and delta1");
    std::string inv_braid, inv_file, inv_name;
    int inv_n = 2, inv_cut = 1;
    bool inv_json = false;
    auto* inv_braid_opt = inv_cmd->add_option("--braid", inv_braid, "braid word, e.g. \"1 1 1\"");
    auto* inv_file_opt = inv_cmd->add_option("--file", inv_file, "diagram or braid JSON file");
    inv_cmd->add_option("--n", inv_n, "braid strand count (with --braid)");
    inv_cmd->add_option("--cut", inv_cut, "closure cut strand (default 1)");
    inv_cmd->add_option("--name", inv_name, "label for the report");
    inv_cmd->add_flag("--json", inv_json, "emit JSON");
    inv_braid_opt->excludes(inv_file_opt);

    // --- burau ---
    auto* bur_cmd = app.add_subcommand("burau", "Burau matrices of braid words and full twists");
    std::string bur_word;
    int bur_n = 2, bur_full = 0, bur_power = 1;
    bool bur_limit = false, bur_json = false;
    auto* bur_word_opt = bur_cmd->add_option("--word", bur_word, "braid word, e.g. \"1 -2\"");
    bur_cmd->add_option("--n", bur_n, "strand count (with --word)");
    auto* bur_full_opt =
        bur_cmd->add_option("--full-twist", bur_full, "strand count of a full twist");
    bur_cmd->add_option("--power", bur_power, "full twist power (default 1)");
    bur_cmd->add_flag("--limit", bur_limit, "stabilized infinite-power limit");
    bur_cmd->add_flag("--json", bur_json, "emit JSON");
    bur_word_opt->excludes(bur_full_opt);

    // --- chain ---
    auto* ch_cmd = app.add_subcommand("chain", "tangle Markov chains and their determinants");
    std::string ch_file, ch_braid;
    int ch_n = 2, ch_cut = 1;
    bool ch_greens = false, ch_det = false, ch_cf = false, ch_json = false;
    auto* ch_file_opt = ch_cmd->add_option("--file", ch_file, "chain JSON file");
    auto* ch_braid_opt =
        ch_cmd->add_option("--braid", ch_braid, "build the chain of a braid closure");
    ch_cmd->add_option("--n", ch_n, "braid strand count (with --braid)");
    ch_cmd->add_option("--cut", ch_cut, "closure cut strand (default 1)");
    ch_cmd->add_flag("--greens", ch_greens, "print the Green's matrix (I-A)^-1");
    ch_cmd->add_flag("--det", ch_det, "print det(I-A)");
    ch_cmd->add_flag("--cartier-foata", ch_cf, "compare the multicycle sum against det(I-A)");
    ch_cmd->add_flag("--json", ch_json, "emit JSON");
    ch_file_opt->excludes(ch_braid_opt);

    // --- family ---
    auto* fam_cmd = app.add_subcommand("family", "twisted-family limits and d_t reports");
    std::string fam_file;
    bool fam_growth = false, fam_alim = false, fam_report = false, fam_json = false;
    int fam_dt = -1, fam_tmax = 4;
    long long fam_r0 = 6;
    fam_cmd->add_option("--file", fam_file, "family JSON file")->required();
    fam_cmd->add_flag("--growth-rate", fam_growth, "asymptotic d_t growth rate");
    fam_cmd->add_flag("--alexander-limit", fam_alim, "limit of normalized Alexander polynomials");
    fam_cmd->add_option("--dt", fam_dt, "print the exact d_t for one t");
    fam_cmd->add_flag("--report", fam_report, "full convergence report");
    fam_cmd->add_option("--tmax", fam_tmax, "report range (default 4)");
    fam_cmd->add_option("--r0", fam_r0, "series cutoff (default 6)");
    fam_cmd->add_flag("--json", fam_json, "emit JSON");

    // --- verify ---
    auto* ver_cmd = app.add_subcommand("verify", "run the acceptance checklist");
    std::string ver_only;
    bool ver_json = false, ver_fault = false;
    ver_cmd->add_option("--only", ver_only, "run a single check by id");
    ver_cmd->add_flag("--json", ver_json, "emit JSON");
    ver_cmd->add_flag("--inject-golden-fault", ver_fault, "self-test: corrupt one golden value")
        ->group("");  // hidden

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help (to out) or the error message (to err) itself.
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }

    try {
        if (inv_cmd->parsed()) {
            UprightDiagram d;
            std::optional<BraidWord> word;
            if (!inv_braid.empty()) {
                word = parse_braid_shorthand(inv_braid, inv_n);
                d = braid_closure_to_long(*word, inv_cut);
            } else if (!inv_file.empty()) {
                d = cli_detail::diagram_from_file(inv_file, inv_cut);
            } else {
                err << "invariants: needs --braid or --file\n";
                return 2;
            }
            if (inv_json)
                out << cli_detail::invariants_report_json(d, word, inv_name).dump(2) << "\n";
            else
                cli_detail::print_invariants_text(out, d, inv_name);
            return 0;
        }

        if (bur_cmd->parsed()) {
            RatMatrix m;
            if (!bur_word.empty()) {
                m = burau(parse_braid_shorthand(bur_word, bur_n));
            } else if (bur_full >= 2) {
                m = bur_limit ? full_twist_limit(bur_full) : full_twist_power(bur_full, bur_power);
            } else {
                err << "burau: needs --word or --full-twist\n";
                return 2;
            }
            if (bur_json)
                out << matrix_to_json(m).dump(2) << "\n";
            else
                out << matrix_to_text(m);
            return 0;
        }

        if (ch_cmd->parsed()) {
            TangleChain m;
            if (!ch_file.empty()) {
                m = chain_from_json(load_json_file(ch_file));
            } else if (!ch_braid.empty()) {
                m = chain_from_diagram(
                    braid_closure_to_long(parse_braid_shorthand(ch_braid, ch_n), ch_cut));
            } else {
                err << "chain: needs --file or --braid\n";
                return 2;
            }
            Json j = Json::object();
            if (ch_greens) {
                RatMatrix g = greens_matrix(m);
                if (ch_json)
                    j["greens"] = matrix_to_json(g);
                else
                    out << "greens:\n" << matrix_to_text(g);
            }
            if (ch_det) {
                RatFun det = mat_det(i_minus_a(m));
                if (ch_json)
                    j["det"] = ratfun_to_json(det);
                else
                    out << "det: " << ratfun_to_text(det) << "\n";
            }
            if (ch_cf) {
                auto [sum, det] = cartier_foata_check(m);
                if (ch_json) {
                    j["multicycle_sum"] = ratfun_to_json(sum);
                    j["det"] = ratfun_to_json(det);
                    j["equal"] = (sum == det);
                } else {
                    out << "multicycle_sum: " << ratfun_to_text(sum) << "\n";
                    out << "det: " << ratfun_to_text(det) << "\n";
                    out << "equal: " << (sum == det ? "true" : "false") << "\n";
                }
            }
            if (!ch_greens && !ch_det && !ch_cf) {
                if (ch_json)
                    j["chain"] = chain_to_json(m);
                else
                    out << "states:" << [&] {
                        std::ostringstream os;
                        for (int s : m.states) os << " " << s;
                        return os.str();
                    }() << "\n"
                        << matrix_to_text(m.transition);
            }
            if (ch_json) out << j.dump(2) << "\n";
            return 0;
        }

        if (fam_cmd->parsed()) {
            TwistedFamily f = family_from_json(load_json_file(fam_file));
            Json j = Json::object();
            bool any = false;
            if (fam_growth) {
                RatFun g = growth_rate(f);
                if (fam_json)
                    j["growth_rate"] = ratfun_to_json(g);
                else
                    out << "growth_rate: " << ratfun_to_text(g) << "\n";
                any = true;
            }
            if (fam_alim) {
                RatFun a = alexander_limit(f);
                if (fam_json)
                    j["alexander_limit"] = ratfun_to_json(a);
                else
                    out << "alexander_limit: " << ratfun_to_text(a) << "\n";
                any = true;
            }
            if (fam_dt >= 0) {
                LaurentPoly dt = d_t_empirical(f, fam_dt);
                if (fam_json)
                    j["d_" + std::to_string(fam_dt)] = poly_to_json(dt);
                else
                    out << "d_" << fam_dt << ": " << poly_to_text(dt) << "\n";
                any = true;
            }
            if (fam_report) {
                GrowthReport rep = convergence_report(f, fam_tmax, fam_r0);
                if (fam_json) {
                    j = cli_detail::growth_report_json(f, rep);
                } else {
                    out << "growth_rate: " << ratfun_to_text(rep.limit) << "\n";
                    out << "alexander_limit: " << ratfun_to_text(rep.alexander_limit_value)
                        << "\n";
                    for (std::size_t t = 0; t < rep.d_values.size(); ++t)
                        out << "d_" << t << ": " << poly_to_text(rep.d_values[t])
                            << "  (agreement depth " << rep.agreement_depth[t] << ")\n";
                    out << "depths_nondecreasing: "
                        << (rep.depths_nondecreasing ? "true" : "false") << "\n";
                    out << "rho1_pairwise_distinct: "
                        << (rep.rho1_pairwise_distinct ? "true" : "false") << "\n";
                    out << "alpha: " << rep.alpha << "\n";
                    out << "tau_det_matches: " << (rep.tau_det_matches ? "true" : "false")
                        << "\n";
                }
                any = true;
            }
            if (!any) {
                if (fam_json)
                    j["family"] = family_to_json(f);
                else
                    out << family_to_json(f).dump(2) << "\n";
            }
            if (fam_json) out << j.dump(2) << "\n";
            return 0;
        }

        if (ver_cmd->parsed()) {
            if (!ver_only.empty()) {
                const std::vector<std::string>& ids = verification_ids();
                if (std::find(ids.begin(), ids.end(), ver_only) == ids.end()) {
                    err << "verify: unknown check id '" << ver_only << "' (see --help)\n";
                    return 2;
                }
            }
            VerifyOptions opt;
            opt.only = ver_only;
            opt.inject_golden_fault = ver_fault;
            std::vector<CheckResult> results = run_verification(opt);
            bool all_pass = true;
            if (ver_json) {
                Json arr = Json::array();
                for (const CheckResult& r : results) {
                    arr.push_back(Json{{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
                    all_pass = all_pass && r.pass;
                }
                out << arr.dump(2) << "\n";
            } else {
                int passed = 0;
                for (const CheckResult& r : results) {
                    out << (r.pass ? "PASS " : "FAIL ") << r.id << ": " << r.detail << "\n";
                    if (r.pass)
                        ++passed;
                    else
                        all_pass = false;
                }
                out << passed << "/" << results.size() << " checks passed\n";
            }
            return all_pass ? 0 : 3;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace knotwalk
