// Command-line front end: evaluate assortativeness indices on 2x2 matching
// matrices, run axiom suites, search for counterexamples, recover linear
// parameters and reproduce the published counterexamples.
//
// Exit codes: 0 success/pass, 1 expected-negative result (a failing suite or
// an exhausted search), 2 usage or ingestion error.

#include "assort/csv_ingest.hpp"
#include "assort/errors.hpp"
#include "assort/indices.hpp"
#include "assort/report_json.hpp"
#include "assort/search.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using assort::Json;

constexpr int kExitPass = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

struct CommonOptions {
    std::vector<std::string> indices;
    std::string matrix_text;
    std::string csv_path;
    std::string threshold_text;
    std::string out_path;
    std::uint64_t seed = 1;
    std::uint32_t samples = 1000;
    std::uint32_t budget = 10000;
    std::vector<std::string> axioms;
};

Json exit_semantics() {
    return Json{{"0", "success / all checks passed"},
                {"1", "expected-negative result (failing suite or no certificate)"},
                {"2", "usage or ingestion error"}};
}

void emit(const Json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) {
        throw assort::Error("cannot open output file '" + out_path + "'");
    }
    out << report.dump(2) << "\n";
}

assort::MatchingMatrix load_matrix(const CommonOptions& options) {
    if (!options.matrix_text.empty()) {
        std::vector<assort::Rational> entries;
        std::string_view text = options.matrix_text;
        while (!text.empty()) {
            const auto comma = text.find(',');
            entries.push_back(assort::parse_rational(text.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            text.remove_prefix(comma + 1);
        }
        if (entries.size() != 4) {
            throw assort::ParseError("--matrix expects four comma-separated entries, got " +
                                     std::to_string(entries.size()));
        }
        return {entries[0], entries[1], entries[2], entries[3]};
    }
    if (!options.csv_path.empty()) {
        std::optional<assort::Rational> threshold;
        if (!options.threshold_text.empty()) {
            threshold = assort::parse_rational(options.threshold_text);
        }
        return assort::ingest_csv(options.csv_path, threshold);
    }
    throw assort::ParseError("provide an input matrix with --matrix a,b,c,d or --csv file");
}

std::string domain_flag(const assort::IndexDefinition& index, const assort::MatchingMatrix& m) {
    if (assort::is_positive(m)) {
        return "positive";
    }
    // Outside the positive cone the linear family is an extension of the
    // characterized formula, not itself characterized.
    return index.extension_outside_positive ? "extension, not characterized" : "boundary";
}

std::vector<std::string> resolve_axiom_list(const std::vector<std::string>& requested) {
    if (requested.empty()) {
        return assort::cdmz3_axiom_list();
    }
    std::vector<std::string> out;
    for (const std::string& name : requested) {
        if (name == "cdmz3") {
            for (auto& axiom : assort::cdmz3_axiom_list()) {
                out.push_back(std::move(axiom));
            }
        } else if (name == "cdmz2") {
            for (auto& axiom : assort::cdmz2_axiom_list()) {
                out.push_back(std::move(axiom));
            }
        } else if (assort::is_known_axiom(name)) {
            out.push_back(name);
        } else {
            throw assort::UnknownAxiomError("unknown axiom '" + name + "'");
        }
    }
    return out;
}

Json config_echo(const CommonOptions& options) {
    Json echo;
    if (!options.matrix_text.empty()) {
        echo["matrix"] = options.matrix_text;
    }
    if (!options.csv_path.empty()) {
        echo["csv"] = options.csv_path;
    }
    if (!options.threshold_text.empty()) {
        echo["threshold"] = options.threshold_text;
    }
    if (!options.indices.empty()) {
        echo["indices"] = options.indices;
    }
    if (!options.axioms.empty()) {
        echo["axioms"] = options.axioms;
    }
    echo["seed"] = options.seed;
    echo["samples"] = options.samples;
    echo["budget"] = options.budget;
    return echo;
}

int run_compute(const CommonOptions& options, const assort::IndexRegistry& registry) {
    const assort::MatchingMatrix m = load_matrix(options);
    const std::vector<std::string> names =
        options.indices.empty() ? registry.names() : options.indices;

    Json results = Json::array();
    for (const std::string& name : names) {
        const assort::IndexDefinition index = registry.resolve(name);
        Json entry{{"index", index.name}};
        if (index.in_domain(m)) {
            const assort::Rational value = index.evaluate(m);
            entry["value"] = assort::to_fraction_string(value);
            entry["decimal"] = assort::to_decimal_string(value);
            entry["domain"] = domain_flag(index, m);
        } else {
            entry["error"] = "OutOfDomain";
        }
        results.push_back(std::move(entry));
    }

    Json report{{"command", "compute"},
                {"config_echo", config_echo(options)},
                {"matrix", assort::to_json(m)},
                {"results", std::move(results)},
                {"certificates", Json::array()},
                {"exit_semantics", exit_semantics()}};
    emit(report, options.out_path);
    return kExitPass;
}

int run_check_axioms(const CommonOptions& options, const assort::IndexRegistry& registry) {
    const std::vector<std::string> axioms = resolve_axiom_list(options.axioms);
    const std::vector<std::string> names =
        options.indices.empty() ? std::vector<std::string>{"alr"} : options.indices;

    assort::SampleConfig config;
    config.seed = options.seed;
    config.count = options.samples;

    bool all_passed = true;
    Json results = Json::array();
    for (const std::string& name : names) {
        const assort::IndexDefinition index = registry.resolve(name);
        const assort::SuiteReport suite = assort::axiom_suite(index, axioms, config);
        all_passed = all_passed && suite.zero_failures();
        results.push_back(assort::to_json(suite));
    }

    Json report{{"command", "check-axioms"},
                {"config_echo", config_echo(options)},
                {"results", std::move(results)},
                {"certificates", Json::array()},
                {"all_passed", all_passed},
                {"exit_semantics", exit_semantics()}};
    emit(report, options.out_path);
    return all_passed ? kExitPass : kExitNegative;
}

int run_find_counterexample(const CommonOptions& options, const assort::IndexRegistry& registry,
                            bool heterogamy) {
    assort::SampleConfig config;
    config.seed = options.seed;
    config.count = options.samples;

    std::optional<assort::CounterexampleCertificate> certificate;
    if (heterogamy) {
        if (options.indices.size() != 1) {
            throw assort::UnknownIndexError(
                "--heterogamy expects exactly one --index, got " +
                std::to_string(options.indices.size()));
        }
        certificate = assort::find_heterogamy_violation(registry.resolve(options.indices[0]),
                                                        options.budget);
    } else {
        if (options.indices.size() != 2) {
            throw assort::UnknownIndexError("ordinal search expects exactly two --index options, got " +
                                            std::to_string(options.indices.size()));
        }
        certificate = assort::find_ordinal_disagreement(registry.resolve(options.indices[0]),
                                                        registry.resolve(options.indices[1]),
                                                        options.budget, config);
    }

    Json certificates = Json::array();
    if (certificate) {
        certificates.push_back(assort::to_json(*certificate));
    }
    Json report{{"command", "find-counterexample"},
                {"config_echo", config_echo(options)},
                {"mode", heterogamy ? "heterogamy-violation" : "ordinal-disagreement"},
                {"found", certificate.has_value()},
                {"results", Json::array()},
                {"certificates", std::move(certificates)},
                {"exit_semantics", exit_semantics()}};
    emit(report, options.out_path);
    return certificate ? kExitPass : kExitNegative;
}

int run_recover_params(const CommonOptions& options, const assort::IndexRegistry& registry) {
    assort::SampleConfig config;
    config.seed = options.seed;
    config.count = options.samples;

    const std::vector<std::string> names =
        options.indices.empty() ? std::vector<std::string>{"alr", "alr_mod"} : options.indices;

    bool all_in_family = true;
    Json results = Json::array();
    for (const std::string& name : names) {
        const assort::RecoveredParams params =
            assort::recover_linear_params(registry.resolve(name), config);
        all_in_family = all_in_family && params.in_linear_family();
        results.push_back(assort::to_json(params));
    }

    Json report{{"command", "recover-params"},
                {"config_echo", config_echo(options)},
                {"results", std::move(results)},
                {"certificates", Json::array()},
                {"all_in_linear_family", all_in_family},
                {"exit_semantics", exit_semantics()}};
    emit(report, options.out_path);
    return all_in_family ? kExitPass : kExitNegative;
}

int run_repro(const CommonOptions& options) {
    assort::SampleConfig config;
    config.seed = options.seed;
    config.count = options.samples;

    const assort::ReproReport repro = assort::reproduce_published(config);
    Json report{{"command", "repro"},
                {"config_echo", config_echo(options)},
                {"results", assort::to_json(repro)},
                {"certificates",
                 Json::array({assort::to_json(repro.ordinal_certificate),
                              assort::to_json(repro.affine.certificate)})},
                {"exit_semantics", exit_semantics()}};
    emit(report, options.out_path);
    return repro.all_expected ? kExitPass : kExitNegative;
}

void add_common_flags(CLI::App* cmd, CommonOptions& options, bool with_input) {
    cmd->add_option("--index", options.indices, "Index name (repeatable)");
    cmd->add_option("--seed", options.seed, "Sampling seed");
    cmd->add_option("--samples", options.samples, "Witness count per axiom / residual samples");
    cmd->add_option("--budget", options.budget, "Search budget");
    cmd->add_option("--out", options.out_path, "Write the JSON report to this file");
    if (with_input) {
        cmd->add_option("--matrix", options.matrix_text,
                        "Inline matrix a,b,c,d (entries integer, p/q or decimal)");
        cmd->add_option("--csv", options.csv_path, "Couple-level CSV input");
        cmd->add_option("--threshold", options.threshold_text,
                        "Binning threshold for numeric type columns");
    }
    cmd->set_config("--config", "", "Optional config file (TOML; flags override)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic assortativeness indices on 2x2 matching matrices"};
    app.require_subcommand(1);

    CommonOptions options;
    bool heterogamy = false;

    CLI::App* compute = app.add_subcommand("compute", "Evaluate indices on one matrix");
    add_common_flags(compute, options, true);

    CLI::App* check = app.add_subcommand("check-axioms", "Run randomized axiom suites");
    add_common_flags(check, options, false);
    check->add_option("--axioms", options.axioms,
                      "Axiom names or the presets cdmz3 / cdmz2 (default cdmz3)");

    CLI::App* find = app.add_subcommand("find-counterexample",
                                        "Search for ordinal disagreement between two indices");
    add_common_flags(find, options, false);
    find->add_flag("--heterogamy", heterogamy,
                   "Search heterogamy matrices violating maximum heterogamy for one index");

    CLI::App* recover = app.add_subcommand("recover-params",
                                           "Recover (alpha, beta) from the basis construction");
    add_common_flags(recover, options, false);

    CLI::App* repro = app.add_subcommand("repro", "Reproduce the published counterexamples");
    add_common_flags(repro, options, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        const assort::IndexRegistry registry = assort::IndexRegistry::with_builtins();
        if (compute->parsed()) {
            return run_compute(options, registry);
        }
        if (check->parsed()) {
            return run_check_axioms(options, registry);
        }
        if (find->parsed()) {
            return run_find_counterexample(options, registry, heterogamy);
        }
        if (recover->parsed()) {
            return run_recover_params(options, registry);
        }
        if (repro->parsed()) {
            return run_repro(options);
        }
    } catch (const assort::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
