/**
 * @file lcx.cpp
 * @brief Command-line front end: generate, check, analyze, transform,
 *        identity, conjecture.
 *
 * Exit codes: 0 holds / certified, 1 violation / hypothesis failed,
 * 2 usage, parse or applicability error (diagnostic on stderr).
 */

#include "lcx/error.hpp"
#include "lcx/qpolys.hpp"
#include "lcx/recurrence_analysis.hpp"
#include "lcx/report.hpp"
#include "lcx/transforms.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

using lcx::ojson;

struct Globals {
    std::string format = "plain";
    std::optional<long> n;
    long from = 0;

    bool json() const { return format == "json"; }
    long n_or(long fallback) const { return n.value_or(fallback); }
};

void emit(Globals const& g, ojson const& report, std::string const& plain) {
    if (g.json())
        std::cout << report.dump(2) << "\n";
    else
        std::cout << plain;
}

std::string plain_witness(lcx::Violation const& v) {
    std::string idx;
    for (long i : v.indices)
        idx += (idx.empty() ? "" : ",") + std::to_string(i);
    return "witness: indices (" + idx + "), " + v.lhs.get_str() + " vs " + v.rhs.get_str() + " (needed " + v.relation +
           ")\n";
}

std::string plain_certificate(lcx::Certificate const& c) {
    std::string s = "theorem: " + c.theorem + "\ntarget: " + c.target + "\nverdict: " +
                    std::string(lcx::verdict_name(c.verdict)) + "\nrange: " + std::to_string(c.range_lo) + ".." +
                    std::to_string(c.range_hi) + "\n";
    for (auto const& h : c.hypotheses) {
        s += "  [" + std::string(h.holds ? "ok" : "FAIL") + "] " + h.id + ": " + h.statement;
        if (h.witness_index)
            s += " (n = " + std::to_string(*h.witness_index) + ")";
        if (!h.detail.empty())
            s += " -- " + h.detail;
        s += "\n";
    }
    for (auto const& [key, value] : c.data.items())
        s += "  " + key + " = " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    s += "conclusion: " + c.conclusion + "\n";
    return s;
}

int exit_for(lcx::CheckStatus s) { return s == lcx::CheckStatus::fails ? 1 : 0; }

// ------------------------------------------------------------------ generate

int cmd_generate(Globals const& g, std::string const& target) {
    long n = g.n_or(10);
    if (n < 0)
        throw lcx::error(lcx::errc::range_error, "--n must be >= 0");
    lcx::SeqSpec spec = lcx::load_seq_spec(target);
    std::vector<std::string> terms;
    if (auto const* rec = std::get_if<lcx::Recurrence3>(&spec)) {
        for (auto const& v : lcx::gen_from_recurrence3(*rec, n).values)
            terms.push_back(v.get_str());
        terms.resize(static_cast<std::size_t>(n + 1));
    } else {
        for (auto const& v : lcx::spec_terms(spec, n).values)
            terms.push_back(v.get_str());
    }
    if (g.json()) {
        std::cout << ojson(terms).dump() << "\n";
    } else {
        for (auto const& t : terms)
            std::cout << t << "\n";
    }
    return 0;
}

// --------------------------------------------------------------------- check

int cmd_check(Globals const& g, std::string const& target, std::string const& mode) {
    long n = g.n_or(20);
    if (mode == "qlogconvex" || mode == "qlogconcave") {
        lcx::PolySeq ps = lcx::gen_poly_seq(target, n);
        lcx::QCheckReport rep = mode == "qlogconvex" ? lcx::q_log_convex_check(ps) : lcx::q_log_concave_check(ps);
        std::optional<ojson> witness;
        std::string plain = "target: " + target + "\nmode: " + mode + "\nrange: " + std::to_string(rep.range_lo) +
                            ".." + std::to_string(rep.range_hi) + "\nstatus: " +
                            std::string(lcx::status_name(rep.status)) + "\n";
        if (!rep.holds()) {
            witness = ojson{{"n", *rep.n}, {"power", *rep.power}, {"coefficient", rep.coefficient.get_str()}};
            plain += "witness: n = " + std::to_string(*rep.n) + ", coefficient of q^" + std::to_string(*rep.power) +
                     " is " + rep.coefficient.get_str() + "\n";
        }
        emit(g,
             lcx::make_report("check", target, rep.range_lo, rep.range_hi, std::string(lcx::status_name(rep.status)),
                              witness, std::nullopt, n),
             plain);
        return exit_for(rep.status);
    }
    if (mode != "logconvex" && mode != "logconcave")
        throw CLI::ValidationError("--mode", "expected logconvex, logconcave, qlogconvex or qlogconcave");
    lcx::Seq z = lcx::spec_terms(lcx::load_seq_spec(target), n);
    if (g.from > 0)
        z = lcx::tail_from(z, g.from);
    lcx::CheckReport rep = mode == "logconvex" ? lcx::is_log_convex(z) : lcx::is_log_concave(z);
    std::optional<ojson> witness;
    std::string plain = "target: " + target + "\nmode: " + mode + "\nrange: " + std::to_string(rep.range_lo) + ".." +
                        std::to_string(rep.range_hi) + "\nstatus: " + std::string(lcx::status_name(rep.status)) + "\n";
    if (rep.first_violation) {
        witness = lcx::violation_to_json(*rep.first_violation);
        plain += plain_witness(*rep.first_violation);
    }
    emit(g,
         lcx::make_report("check", target, rep.range_lo, rep.range_hi, std::string(lcx::status_name(rep.status)),
                          witness, std::nullopt, n),
         plain);
    return exit_for(rep.status);
}

// ------------------------------------------------------------------- analyze

int cmd_analyze(Globals const& g, std::string const& target, std::string const& theorem,
                std::optional<std::string> const& mu, long anchor) {
    long n = g.n_or(100);
    lcx::Recurrence3 rec = lcx::spec_recurrence(lcx::load_seq_spec(target));
    if (rec.name.empty())
        rec.name = target;
    lcx::Certificate cert;
    if (theorem == "crit_plus") {
        cert = lcx::check_thm_crit_plus(rec, n);
    } else if (theorem == "lc_plus") {
        cert = lcx::check_thm_lc_plus(rec, n);
    } else if (theorem == "interlacing") {
        cert = lcx::check_interlacing(rec, n);
    } else if (theorem == "c_plus") {
        if (!mu)
            throw CLI::ValidationError("--mu", "c_plus needs --mu");
        cert = lcx::check_thm_c_plus(rec, lcx::parse_ratfunc(*mu), n);
    } else if (theorem == "c_minus" || theorem == "c_minus_lc") {
        cert = lcx::check_thm_c_minus(rec, n, anchor,
                                      theorem == "c_minus" ? lcx::ConvexityMode::convex : lcx::ConvexityMode::concave);
    } else if (theorem == "bisection") {
        cert = lcx::bisection_analysis(rec, n);
    } else {
        throw CLI::ValidationError("--theorem", "unknown theorem '" + theorem + "'");
    }
    std::optional<ojson> witness;
    for (auto const& h : cert.hypotheses) {
        if (!h.holds) {
            witness = ojson{{"hypothesis", h.id}, {"index", h.witness_index ? ojson(*h.witness_index) : ojson()},
                            {"detail", h.detail}};
            break;
        }
    }
    emit(g,
         lcx::make_report("analyze", target, cert.range_lo, cert.range_hi, std::string(lcx::verdict_name(cert.verdict)),
                          witness, lcx::certificate_to_json(cert), n),
         plain_certificate(cert));
    return cert.certified() ? 0 : 1;
}

// ----------------------------------------------------------------- transform

int cmd_transform(Globals const& g, std::string const& triangle, std::string const& target) {
    long n = g.n_or(10);
    lcx::Seq x = lcx::spec_terms(lcx::load_seq_spec(target), n);
    lcx::Seq y = lcx::named_transform(triangle, x);
    lcx::CheckReport in_rep = lcx::is_log_convex(x);
    lcx::CheckReport out_rep = lcx::is_log_convex(y);
    std::vector<std::string> terms;
    for (auto const& v : y.values)
        terms.push_back(v.get_str());
    ojson report = lcx::make_report("transform", triangle + "(" + target + ")", 0, n,
                                    std::string(lcx::status_name(out_rep.status)),
                                    out_rep.first_violation ? std::optional<ojson>(lcx::violation_to_json(*out_rep.first_violation))
                                                            : std::nullopt,
                                    std::nullopt, n);
    report["input_log_convex"] = in_rep.holds();
    report["output_log_convex"] = out_rep.holds();
    report["terms"] = terms;
    std::string plain;
    for (auto const& t : terms)
        plain += t + "\n";
    emit(g, report, plain);
    return 0;
}

// ------------------------------------------------------------------ identity

int cmd_identity(Globals const& g, std::string const& name) {
    long n = g.n_or(50);
    std::vector<std::string> names = name == "all" ? lcx::identity_names() : std::vector<std::string>{name};
    ojson results = ojson::array();
    std::string plain;
    bool all_ok = true;
    std::optional<ojson> witness;
    for (auto const& id : names) {
        lcx::IdentityReport rep = lcx::verify_identity(id, n);
        ojson r{{"name", rep.name}, {"statement", rep.statement}, {"n_min", rep.n_min}, {"holds", rep.all_equal}};
        plain += (rep.all_equal ? "holds  " : "FAILS  ") + rep.name + "  [" + std::to_string(rep.n_min) + ".." +
                 std::to_string(n) + "]  " + rep.statement + "\n";
        if (!rep.all_equal) {
            ojson w{{"name", rep.name}, {"n", *rep.first_mismatch}, {"lhs", rep.lhs_at_mismatch},
                    {"rhs", rep.rhs_at_mismatch}};
            r["mismatch"] = w;
            plain += "  n = " + std::to_string(*rep.first_mismatch) + ": " + rep.lhs_at_mismatch +
                     " != " + rep.rhs_at_mismatch + "\n";
            if (!witness)
                witness = w;
            all_ok = false;
        }
        results.push_back(std::move(r));
    }
    ojson report = lcx::make_report("identity", name, 0, n, all_ok ? "holds" : "fails", witness, std::nullopt, n);
    report["identities"] = results;
    emit(g, report, plain);
    return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- conjecture

int cmd_conjecture(Globals const& g, std::string const& name, std::size_t corpus, std::size_t len,
                   std::uint64_t seed) {
    std::optional<ojson> witness;
    std::optional<ojson> cert_json;
    long bound = 0;
    std::string detail;
    if (name == "narayana_qlcx") {
        bound = g.n_or(100);
        lcx::QCheckReport rep = lcx::q_log_convex_check(lcx::gen_poly_seq("narayana", bound));
        if (!rep.holds())
            witness = ojson{{"n", *rep.n}, {"power", *rep.power}, {"coefficient", rep.coefficient.get_str()}};
        detail = "N_{n-1}(q) N_{n+1}(q) - N_n(q)^2 >=_q 0 for 1 <= n <= " + std::to_string(bound - 1);
    } else if (name == "squared_binomial_c1c2") {
        bound = g.n_or(40);
        lcx::Certificate cert = lcx::check_C1_C2(lcx::gen_triangle("squared_binomial", bound + 1), bound);
        for (auto const& h : cert.hypotheses)
            if (!h.holds && !witness)
                witness = ojson{{"hypothesis", h.id}, {"index", h.witness_index ? ojson(*h.witness_index) : ojson()},
                                {"detail", h.detail}};
        cert_json = lcx::certificate_to_json(cert);
        detail = "(C1) and (C2) for binom(n,k)^2 through n = " + std::to_string(bound);
    } else if (name == "narayana_transform" || name == "eulerian_transform") {
        std::string tri = name == "narayana_transform" ? "narayana" : "eulerian";
        lcx::ProbeReport rep = lcx::transform_preserves_lcx_probe(tri, corpus, len, seed);
        bound = static_cast<long>(len) - 1;
        if (rep.failures > 0) {
            ojson input = ojson::array();
            for (auto const& v : rep.first_counterexample_input->values)
                input.push_back(v.get_str());
            witness = ojson{{"input", input}, {"failures", rep.failures}};
            if (rep.first_counterexample_check && rep.first_counterexample_check->first_violation)
                (*witness)["violation"] = lcx::violation_to_json(*rep.first_counterexample_check->first_violation);
        }
        detail = tri + " transform of " + std::to_string(corpus) + " log-convex sequences of length " +
                 std::to_string(len) + " (seed " + std::to_string(seed) + ")";
    } else {
        throw CLI::ValidationError("name", "unknown conjecture '" + name + "'");
    }
    std::string status = witness ? "counterexample" : "no_counterexample";
    ojson report = lcx::make_report("conjecture", name, 0, bound, status, witness, cert_json, bound);
    std::string plain = name + ": " + (witness ? "counterexample found" : "no counterexample") + " (" + detail + ")\n";
    if (witness)
        plain += witness->dump() + "\n";
    emit(g, report, plain);
    return witness ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact log-convexity toolkit for combinatorial sequences"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"plain", "json"}));
    app.add_option("--n", g.n, "Upper index / bound");
    app.add_option("--from", g.from, "First index considered by check")->check(CLI::NonNegativeNumber);

    std::string target, mode = "logconvex", theorem, triangle, name;
    std::optional<std::string> mu;
    long anchor = 0;
    std::size_t corpus = 100, len = 12;
    std::uint64_t seed = 1;

    auto* gen = app.add_subcommand("generate", "Print z_0..z_n of a catalogue sequence or spec file");
    gen->add_option("target", target, "Sequence name")->required(false);
    gen->add_option("--spec", target, "Spec file");
    gen->fallthrough();

    auto* chk = app.add_subcommand("check", "Check log-convexity / log-concavity / q-log-convexity");
    chk->add_option("target", target, "Sequence name, spec file or polynomial family")->required();
    chk->add_option("--mode", mode, "logconvex | logconcave | qlogconvex | qlogconcave")
        ->check(CLI::IsMember({"logconvex", "logconcave", "qlogconvex", "qlogconcave"}));
    chk->fallthrough();

    auto* ana = app.add_subcommand("analyze", "Run a recurrence criterion and print its certificate");
    ana->add_option("target", target, "Spec file or catalogue name")->required();
    ana->add_option("--theorem", theorem, "crit_plus | lc_plus | interlacing | c_plus | c_minus | c_minus_lc | bisection")
        ->required()
        ->check(CLI::IsMember({"crit_plus", "lc_plus", "interlacing", "c_plus", "c_minus", "c_minus_lc", "bisection"}));
    ana->add_option("--mu", mu, "Rational function mu_n for c_plus, e.g. \"(2n+5)/2\"");
    ana->add_option("--anchor", anchor, "Anchor index m for c_minus")->check(CLI::NonNegativeNumber);
    ana->fallthrough();

    auto* tr = app.add_subcommand("transform", "Apply a triangle transform to a sequence");
    tr->add_option("triangle", triangle, "binomial | stirling2 | stirling1 | morgan_voyce | narayana | eulerian | ...")
        ->required();
    tr->add_option("target", target, "Sequence name or spec file")->required();
    tr->fallthrough();

    auto* idn = app.add_subcommand("identity", "Verify a named identity, or 'all'");
    idn->add_option("name", name, "Identity name or 'all'")->required();
    idn->fallthrough();

    auto* conj = app.add_subcommand("conjecture", "Search for counterexamples to an open conjecture");
    conj->add_option("name", name, "narayana_qlcx | narayana_transform | squared_binomial_c1c2 | eulerian_transform")
        ->required();
    conj->add_option("--corpus", corpus, "Number of probe inputs");
    conj->add_option("--len", len, "Length of probe inputs")->check(CLI::Range(3, 1000));
    conj->add_option("--seed", seed, "Probe corpus seed");
    conj->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*gen) {
            if (target.empty())
                throw CLI::ValidationError("target", "generate needs a sequence name or --spec");
            return cmd_generate(g, target);
        }
        if (*chk)
            return cmd_check(g, target, mode);
        if (*ana)
            return cmd_analyze(g, target, theorem, mu, anchor);
        if (*tr)
            return cmd_transform(g, triangle, target);
        if (*idn)
            return cmd_identity(g, name);
        if (*conj)
            return cmd_conjecture(g, name, corpus, len, seed);
    } catch (lcx::error const& e) {
        std::cerr << "lcx: " << lcx::errc_name(e.kind()) << ": " << e.what() << "\n";
        return 2;
    } catch (CLI::Error const& e) {
        std::cerr << "lcx: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
