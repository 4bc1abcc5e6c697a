#include "assort/report_json.hpp"

namespace assort {

Json to_json(const Rational& value) {
    return to_fraction_string(value);
}

Json to_json(const MatchingMatrix& m) {
    return Json{{"a", to_fraction_string(m.a())},
                {"b", to_fraction_string(m.b())},
                {"c", to_fraction_string(m.c())},
                {"d", to_fraction_string(m.d())}};
}

Json to_json(const AxiomReport& report) {
    Json witnesses = Json::array();
    for (const MatchingMatrix& witness : report.witnesses) {
        witnesses.push_back(to_json(witness));
    }
    Json out{{"axiom", report.axiom},
             {"index", report.index},
             {"witnesses", std::move(witnesses)},
             {"relation", report.relation},
             {"verdict", std::string(to_string(report.verdict))}};
    out["lhs"] = report.lhs ? Json(to_fraction_string(*report.lhs)) : Json(nullptr);
    out["rhs"] = report.rhs ? Json(to_fraction_string(*report.rhs)) : Json(nullptr);
    if (!report.note.empty()) {
        out["note"] = report.note;
    }
    return out;
}

Json to_json(const AxiomTally& tally) {
    Json out{{"axiom", tally.axiom},
             {"pass", tally.pass},
             {"fail", tally.fail},
             {"skipped", tally.skipped}};
    if (tally.first_failure) {
        out["first_failure"] = to_json(*tally.first_failure);
    }
    return out;
}

Json to_json(const SampleConfig& config) {
    return Json{{"seed", config.seed},
                {"count", config.count},
                {"entry_max", config.entry_max},
                {"denominator_max", config.denominator_max},
                {"positivity",
                 config.positivity == Positivity::required ? "required" : "allow-boundary"}};
}

Json to_json(const SuiteReport& report) {
    Json tallies = Json::array();
    for (const AxiomTally& tally : report.tallies) {
        tallies.push_back(to_json(tally));
    }
    return Json{{"index", report.index},
                {"config", to_json(report.config)},
                {"zero_failures", report.zero_failures()},
                {"tallies", std::move(tallies)}};
}

Json to_json(const CounterexampleCertificate& certificate) {
    return Json{{"kind", std::string(to_string(certificate.kind))},
                {"index1", certificate.index1},
                {"index2", certificate.index2},
                {"m", to_json(certificate.m)},
                {"m_prime", to_json(certificate.m_prime)},
                {"values",
                 Json::array({to_fraction_string(certificate.values[0]),
                              to_fraction_string(certificate.values[1]),
                              to_fraction_string(certificate.values[2]),
                              to_fraction_string(certificate.values[3])})}};
}

Json to_json(const RecoveredParams& params) {
    return Json{{"index", params.index},
                {"alpha_prime", to_fraction_string(params.alpha_prime)},
                {"beta_prime", to_fraction_string(params.beta_prime)},
                {"gamma_prime", to_fraction_string(params.gamma_prime)},
                {"delta_prime", to_fraction_string(params.delta_prime)},
                {"alpha", to_fraction_string(params.alpha)},
                {"beta", to_fraction_string(params.beta)},
                {"max_residual", to_fraction_string(params.max_residual)},
                {"symmetry_ok", params.symmetry_ok},
                {"in_linear_family", params.in_linear_family()}};
}

Json to_json(const CharacterizationReport& report) {
    return Json{{"index", report.index},
                {"verdict", report.verdict},
                {"axioms_pass", report.axioms_pass},
                {"in_linear_family", report.in_linear_family},
                {"consistent", report.consistent},
                {"suite", to_json(report.suite)},
                {"params", to_json(report.params)}};
}

Json to_json(const AffineReplay& replay) {
    return Json{{"case1", to_json(replay.case1)},
                {"case2", to_json(replay.case2)},
                {"witness", to_json(replay.witness)},
                {"trace_at_case1", to_fraction_string(replay.trace_at_case1)},
                {"trace_mod_at_case1", to_fraction_string(replay.trace_mod_at_case1)},
                {"trace_at_case2", to_fraction_string(replay.trace_at_case2)},
                {"trace_mod_at_case2", to_fraction_string(replay.trace_mod_at_case2)},
                {"alpha", to_fraction_string(replay.alpha)},
                {"beta", to_fraction_string(replay.beta)},
                {"certificate", to_json(replay.certificate)}};
}

Json to_json(const ReproReport& report) {
    Json suites = Json::array();
    for (const SuiteReport& suite : report.suites) {
        suites.push_back(to_json(suite));
    }
    Json recoveries = Json::array();
    for (const RecoveredParams& params : report.recoveries) {
        recoveries.push_back(to_json(params));
    }
    return Json{{"ordinal_certificate", to_json(report.ordinal_certificate)},
                {"ordinal_valid", report.ordinal_valid},
                {"affine_impossibility", to_json(report.affine)},
                {"suites", std::move(suites)},
                {"recoveries", std::move(recoveries)},
                {"all_expected", report.all_expected}};
}

} // namespace assort
