#include "lcx/report.hpp"

#include "lcx/error.hpp"
#include "lcx/recurrence_analysis.hpp"

namespace lcx {

std::string_view verdict_name(Verdict v) {
    switch (v) {
    case Verdict::certified:
        return "certified";
    case Verdict::hypothesis_failed:
        return "hypothesis_failed";
    case Verdict::inapplicable:
        return "inapplicable";
    }
    return "unknown";
}

namespace {

Verdict verdict_from_name(std::string const& s) {
    if (s == "certified")
        return Verdict::certified;
    if (s == "hypothesis_failed")
        return Verdict::hypothesis_failed;
    if (s == "inapplicable")
        return Verdict::inapplicable;
    throw error(errc::parse_error, "unknown verdict '" + s + "'");
}

template <class T>
T field(ojson const& j, char const* name) {
    if (!j.contains(name))
        throw error(errc::parse_error, std::string("missing field '") + name + "'");
    try {
        return j.at(name).get<T>();
    } catch (nlohmann::json::exception const& e) {
        throw error(errc::parse_error, std::string("field '") + name + "': " + e.what());
    }
}

Recurrence3 params_recurrence(ojson const& params) {
    if (!params.contains("recurrence"))
        throw error(errc::parse_error, "missing field 'recurrence'");
    SeqSpec spec = parse_seq_spec(params.at("recurrence").dump(), false);
    return std::get<Recurrence3>(spec);
}

} // namespace

ojson certificate_to_json(Certificate const& cert) {
    ojson hyps = ojson::array();
    for (auto const& h : cert.hypotheses) {
        ojson hj{{"id", h.id}, {"statement", h.statement}, {"holds", h.holds}};
        hj["witness_index"] = h.witness_index ? ojson(*h.witness_index) : ojson(nullptr);
        hj["detail"] = h.detail;
        hyps.push_back(std::move(hj));
    }
    return ojson{{"theorem", cert.theorem},
                 {"target", cert.target},
                 {"verdict", verdict_name(cert.verdict)},
                 {"conclusion", cert.conclusion},
                 {"range", {cert.range_lo, cert.range_hi}},
                 {"hypotheses", hyps},
                 {"data", cert.data},
                 {"params", cert.params}};
}

Certificate certificate_from_json(ojson const& j) {
    Certificate c;
    c.theorem = field<std::string>(j, "theorem");
    c.target = field<std::string>(j, "target");
    c.verdict = verdict_from_name(field<std::string>(j, "verdict"));
    c.conclusion = field<std::string>(j, "conclusion");
    auto range = field<std::vector<long>>(j, "range");
    if (range.size() != 2)
        throw error(errc::parse_error, "field 'range': expected two integers");
    c.range_lo = range[0];
    c.range_hi = range[1];
    for (auto const& hj : field<ojson>(j, "hypotheses")) {
        HypothesisCheck h;
        h.id = field<std::string>(hj, "id");
        h.statement = field<std::string>(hj, "statement");
        h.holds = field<bool>(hj, "holds");
        if (hj.contains("witness_index") && !hj.at("witness_index").is_null())
            h.witness_index = hj.at("witness_index").get<long>();
        h.detail = hj.value("detail", "");
        c.hypotheses.push_back(std::move(h));
    }
    c.data = j.value("data", ojson::object());
    c.params = field<ojson>(j, "params");
    return c;
}

Certificate replay(ojson const& params) {
    auto theorem = field<std::string>(params, "theorem");
    long n_max = field<long>(params, "n_max");
    if (theorem == "crit_plus")
        return check_thm_crit_plus(params_recurrence(params), n_max);
    if (theorem == "lc_plus")
        return check_thm_lc_plus(params_recurrence(params), n_max);
    if (theorem == "interlacing")
        return check_interlacing(params_recurrence(params), n_max);
    if (theorem == "c_plus")
        return check_thm_c_plus(params_recurrence(params), parse_ratfunc(field<std::string>(params, "mu")), n_max);
    if (theorem == "c_minus" || theorem == "c_minus_lc")
        return check_thm_c_minus(params_recurrence(params), n_max, field<long>(params, "anchor"),
                                 theorem == "c_minus" ? ConvexityMode::convex : ConvexityMode::concave);
    if (theorem == "bisection")
        return bisection_analysis(params_recurrence(params), n_max);
    if (theorem == "thm_T_qlcx") {
        auto co = field<std::vector<std::string>>(params, "coefficients");
        if (co.size() != 6)
            throw error(errc::parse_error, "field 'coefficients': expected six values");
        TriangleRec tr{parse_rat(co[0]), parse_rat(co[1]), parse_rat(co[2]),
                       parse_rat(co[3]), parse_rat(co[4]), parse_rat(co[5])};
        return check_thm_T_qlcx(tr, n_max);
    }
    if (theorem == "C1_C2")
        return check_C1_C2(gen_triangle(field<std::string>(params, "triangle"), n_max + 1), n_max);
    throw error(errc::parse_error, "cannot replay theorem '" + theorem + "'");
}

bool replay_matches(Certificate const& cert) {
    Certificate again = replay(cert.params);
    if (again.verdict != cert.verdict || again.hypotheses.size() != cert.hypotheses.size())
        return false;
    for (std::size_t i = 0; i < cert.hypotheses.size(); ++i) {
        auto const& a = cert.hypotheses[i];
        auto const& b = again.hypotheses[i];
        if (a.id != b.id || a.holds != b.holds || a.witness_index != b.witness_index)
            return false;
    }
    return true;
}

ojson violation_to_json(Violation const& v) {
    return ojson{{"indices", v.indices},
                 {"lhs", v.lhs.get_str()},
                 {"rhs", v.rhs.get_str()},
                 {"relation", v.relation}};
}

ojson make_report(std::string const& command, std::string const& target, long range_lo, long range_hi,
                  std::string const& status, std::optional<ojson> witness, std::optional<ojson> certificate,
                  long bound_checked) {
    ojson r{{"command", command}, {"target", target}, {"range", {range_lo, range_hi}}, {"status", status}};
    if (witness)
        r["witness"] = std::move(*witness);
    if (certificate)
        r["certificate"] = std::move(*certificate);
    r["bound_checked"] = bound_checked;
    return r;
}

} // namespace lcx
