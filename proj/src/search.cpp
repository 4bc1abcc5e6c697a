#include "assort/search.hpp"

#include "assort/errors.hpp"

#include <algorithm>
#include <utility>

namespace assort {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (char ch : text) {
        hash ^= static_cast<unsigned char>(ch);
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

} // namespace

std::uint64_t Sampler::next() {
    return splitmix64(state_);
}

std::uint64_t Sampler::uniform(std::uint64_t lo, std::uint64_t hi) {
    const std::uint64_t range = hi - lo + 1;
    const std::uint64_t limit = range == 0 ? 0 : UINT64_MAX - UINT64_MAX % range;
    for (;;) {
        const std::uint64_t draw = next();
        if (range == 0) {
            return draw;
        }
        if (draw < limit) {
            return lo + draw % range;
        }
    }
}

Rational Sampler::rational_entry(const SampleConfig& config) {
    const std::uint64_t p =
        uniform(1, static_cast<std::uint64_t>(config.entry_max) * config.denominator_max);
    const std::uint64_t q = uniform(1, config.denominator_max);
    return {BigInt(p), BigInt(q)};
}

MatchingMatrix Sampler::matrix(const SampleConfig& config) {
    if (config.positivity == Positivity::required) {
        return positive_matrix(config);
    }
    for (;;) {
        std::array<Rational, 4> entries;
        bool any_nonzero = false;
        for (auto& entry : entries) {
            if (uniform(0, 3) == 0) {
                entry = 0;
            } else {
                entry = rational_entry(config);
                any_nonzero = true;
            }
        }
        if (any_nonzero) {
            return {entries[0], entries[1], entries[2], entries[3]};
        }
    }
}

MatchingMatrix Sampler::positive_matrix(const SampleConfig& config) {
    return {rational_entry(config), rational_entry(config), rational_entry(config),
            rational_entry(config)};
}

Rational Sampler::positive_scalar(const SampleConfig& config) {
    const std::uint64_t p = uniform(1, 5 * static_cast<std::uint64_t>(config.denominator_max));
    const std::uint64_t q = uniform(1, config.denominator_max);
    return {BigInt(p), BigInt(q)};
}

Rational Sampler::epsilon_for(const MatchingMatrix& m) {
    if (!is_positive(m)) {
        throw InvalidWitnessError("epsilon grid needs a positive matrix, got " + to_string(m));
    }
    // Sign-balanced grid: 16 points in (-min(a,d), 0), 16 in (0, min(b,c)).
    const Rational low = -std::min(m.a(), m.d());
    const Rational high = std::min(m.b(), m.c());
    const std::uint64_t j = uniform(1, 16);
    const bool positive = uniform(0, 1) == 1;
    const Rational bound = positive ? high : low;
    return bound * Rational(BigInt(j), BigInt(17));
}

MatchingMatrix Sampler::homogamy_witness(const SampleConfig& config) {
    const Rational a = rational_entry(config);
    const Rational d = rational_entry(config);
    switch (uniform(0, 2)) {
    case 0: return {a, 0, 0, d};
    case 1: return {a, rational_entry(config), 0, d};
    default: return {a, 0, rational_entry(config), d};
    }
}

MatchingMatrix Sampler::heterogamy_witness(const SampleConfig& config) {
    return {0, rational_entry(config), rational_entry(config), 0};
}

MatchingMatrix Sampler::boundary_limit() {
    return {0, BigInt(uniform(1, 20)), BigInt(uniform(1, 20)), 0};
}

std::string_view to_string(CertificateKind kind) {
    switch (kind) {
    case CertificateKind::ordinal_disagreement: return "ordinal-disagreement";
    case CertificateKind::axiom_violation: return "axiom-violation";
    case CertificateKind::affine_impossibility: return "affine-impossibility";
    }
    return "unknown";
}

namespace {

int sign(const Rational& value) {
    if (value > 0) {
        return 1;
    }
    return value < 0 ? -1 : 0;
}

} // namespace

bool validate_certificate(const CounterexampleCertificate& certificate,
                          const IndexDefinition& index1, const IndexDefinition& index2) {
    for (const MatchingMatrix* m : {&certificate.m, &certificate.m_prime}) {
        if (!index1.in_domain(*m) || !index2.in_domain(*m)) {
            return false;
        }
    }
    const std::array<Rational, 4> recomputed = {
        index1.evaluate(certificate.m), index1.evaluate(certificate.m_prime),
        index2.evaluate(certificate.m), index2.evaluate(certificate.m_prime)};
    if (recomputed != certificate.values) {
        return false;
    }
    switch (certificate.kind) {
    case CertificateKind::ordinal_disagreement: {
        const int s1 = sign(recomputed[0] - recomputed[1]);
        const int s2 = sign(recomputed[2] - recomputed[3]);
        return s1 != 0 && s2 != 0 && s1 != s2;
    }
    case CertificateKind::axiom_violation:
        // Recorded for a heterogamy witness m_prime that outranks m.
        return recomputed[1] > recomputed[0];
    case CertificateKind::affine_impossibility:
        return recomputed[0] != recomputed[2];
    }
    return false;
}

bool SuiteReport::zero_failures() const {
    return std::all_of(tallies.begin(), tallies.end(),
                       [](const AxiomTally& t) { return t.fail == 0; });
}

const AxiomTally* SuiteReport::tally_for(std::string_view axiom) const {
    for (const AxiomTally& tally : tallies) {
        if (tally.axiom == axiom) {
            return &tally;
        }
    }
    return nullptr;
}

namespace {

AxiomReport run_axiom_once(const IndexDefinition& index, std::string_view axiom, Sampler& sampler,
                           const SampleConfig& config) {
    using namespace axiom_names;
    if (axiom == scale_invariance) {
        const MatchingMatrix m = sampler.matrix(config);
        return check_scale_invariance(index, m, sampler.positive_scalar(config));
    }
    if (axiom == side_invariance) {
        return check_side_invariance(index, sampler.matrix(config));
    }
    if (axiom == type_invariance) {
        return check_type_invariance(index, sampler.matrix(config));
    }
    if (axiom == marginal_monotonicity) {
        // Defined for positive pairs only; the grid keeps epsilon admissible.
        const MatchingMatrix m = sampler.positive_matrix(config);
        return check_marginal_monotonicity(index, m, sampler.epsilon_for(m));
    }
    if (axiom == random_decomposability) {
        const MatchingMatrix m = sampler.positive_matrix(config);
        return check_random_decomposability(index, m, sampler.positive_matrix(config));
    }
    if (axiom == population_decomposability) {
        const MatchingMatrix m = sampler.positive_matrix(config);
        return check_population_decomposability(index, m, sampler.positive_matrix(config));
    }
    if (axiom == maximum_homogamy) {
        const MatchingMatrix m = sampler.matrix(config);
        return check_maximum_homogamy(index, m, sampler.homogamy_witness(config));
    }
    if (axiom == maximum_heterogamy) {
        const MatchingMatrix m = sampler.matrix(config);
        return check_maximum_heterogamy(index, m, sampler.heterogamy_witness(config));
    }
    if (axiom == continuity) {
        const MatchingMatrix limit = sampler.boundary_limit();
        return check_continuity(index, limit, sampler.positive_matrix(config), 20);
    }
    throw UnknownAxiomError("unknown axiom '" + std::string(axiom) + "'");
}

} // namespace

SuiteReport axiom_suite(const IndexDefinition& index, const std::vector<std::string>& axioms,
                        const SampleConfig& config) {
    for (const std::string& axiom : axioms) {
        if (!is_known_axiom(axiom)) {
            throw UnknownAxiomError("unknown axiom '" + axiom + "'");
        }
    }
    SuiteReport report;
    report.index = index.name;
    report.config = config;
    for (const std::string& axiom : axioms) {
        AxiomTally tally;
        tally.axiom = axiom;
        // Per-axiom substream: adding or reordering axioms does not shift
        // the witnesses any other axiom sees.
        Sampler sampler(config.seed ^ fnv1a(axiom));
        for (std::uint32_t i = 0; i < config.count; ++i) {
            AxiomReport result = run_axiom_once(index, axiom, sampler, config);
            switch (result.verdict) {
            case Verdict::pass: ++tally.pass; break;
            case Verdict::fail:
                ++tally.fail;
                if (!tally.first_failure) {
                    tally.first_failure = std::move(result);
                }
                break;
            case Verdict::skipped_out_of_domain: ++tally.skipped; break;
            }
        }
        report.tallies.push_back(std::move(tally));
    }
    return report;
}

std::optional<CounterexampleCertificate>
find_ordinal_disagreement(const IndexDefinition& index1, const IndexDefinition& index2,
                          std::uint32_t budget, const SampleConfig& config) {
    Sampler sampler(config.seed);
    for (std::uint32_t i = 0; i < budget; ++i) {
        const MatchingMatrix m = sampler.matrix(config);
        const MatchingMatrix m_prime = sampler.matrix(config);
        if (!index1.in_domain(m) || !index1.in_domain(m_prime) || !index2.in_domain(m) ||
            !index2.in_domain(m_prime)) {
            continue;
        }
        const Rational diff1 = index1.evaluate(m) - index1.evaluate(m_prime);
        const Rational diff2 = index2.evaluate(m) - index2.evaluate(m_prime);
        if (sign(diff1) != 0 && sign(diff2) != 0 && sign(diff1) != sign(diff2)) {
            return CounterexampleCertificate{
                CertificateKind::ordinal_disagreement,
                index1.name,
                index2.name,
                m,
                m_prime,
                {index1.evaluate(m), index1.evaluate(m_prime), index2.evaluate(m),
                 index2.evaluate(m_prime)}};
        }
    }
    return std::nullopt;
}

bool RecoveredParams::in_linear_family() const {
    return max_residual == 0 && symmetry_ok && alpha > beta && beta >= 0;
}

RecoveredParams recover_linear_params(const IndexDefinition& index, const SampleConfig& config) {
    const auto& basis = basis_matrices();
    RecoveredParams params;
    params.index = index.name;
    params.alpha_prime = tilde_transform(index, basis[0]);
    params.beta_prime = tilde_transform(index, basis[1]);
    params.gamma_prime = tilde_transform(index, basis[2]);
    params.delta_prime = tilde_transform(index, basis[3]);
    params.symmetry_ok = params.beta_prime == params.gamma_prime &&
                         params.alpha_prime == params.delta_prime;
    params.alpha = (3 * params.alpha_prime - 2 * params.beta_prime) / 5;
    params.beta = (-2 * params.alpha_prime + 3 * params.beta_prime) / 5;

    params.max_residual = 0;
    Sampler sampler(config.seed);
    for (std::uint32_t i = 0; i < config.count; ++i) {
        const MatchingMatrix m = sampler.positive_matrix(config);
        if (!index.in_domain(m)) {
            continue;
        }
        const Rational linear = params.alpha * m.a() + params.beta * m.b() +
                                params.beta * m.c() + params.alpha * m.d();
        Rational residual = tilde_transform(index, m) - linear;
        if (residual < 0) {
            residual = -residual;
        }
        params.max_residual = std::max(params.max_residual, residual);
    }
    return params;
}

CharacterizationReport verify_characterization(const IndexDefinition& index, const SampleConfig& config) {
    CharacterizationReport report{index.name, axiom_suite(index, cdmz3_axiom_list(), config),
                          recover_linear_params(index, config)};
    report.axioms_pass = report.suite.zero_failures();
    report.in_linear_family = report.params.in_linear_family();
    report.consistent = report.axioms_pass == report.in_linear_family;
    if (!report.consistent) {
        report.verdict = "characterization-violated";
    } else {
        report.verdict = report.axioms_pass ? "member" : "non-member";
    }
    return report;
}

AffineReplay affine_impossibility_replay() {
    const MatchingMatrix case1(1, 0, 0, 1);   // bc = 0, ad > 0
    const MatchingMatrix case2(0, 1, 1, 0);   // ad = 0, bc > 0
    const MatchingMatrix witness(1, 1, 1, 1);

    const Rational t1 = normalized_trace(case1);
    const Rational t1_mod = trace_modified(case1);
    const Rational t2 = normalized_trace(case2);
    const Rational t2_mod = trace_modified(case2);

    // Solve trace_mod = alpha * trace + beta through the two observed points.
    const Rational alpha = (t1_mod - t2_mod) / (t1 - t2);
    const Rational beta = t2_mod - alpha * t2;

    AffineReplay replay{case1,
                        case2,
                        witness,
                        t1,
                        t1_mod,
                        t2,
                        t2_mod,
                        alpha,
                        beta,
                        CounterexampleCertificate{
                            CertificateKind::affine_impossibility,
                            "trace",
                            "trace_mod",
                            witness,
                            witness,
                            {normalized_trace(witness), normalized_trace(witness),
                             trace_modified(witness), trace_modified(witness)}}};
    return replay;
}

CounterexampleCertificate check_affine_impossibility() {
    return affine_impossibility_replay().certificate;
}

std::optional<CounterexampleCertificate>
find_heterogamy_violation(const IndexDefinition& index, std::uint32_t budget) {
    const MatchingMatrix reference(1, 1, 1, 1);
    if (!index.in_domain(reference)) {
        return std::nullopt;
    }
    const Rational at_reference = index.evaluate(reference);
    for (std::uint32_t i = 0; i < budget; ++i) {
        const MatchingMatrix het(0, 1, BigInt(i) + 1, 0);
        if (!index.in_domain(het)) {
            continue;
        }
        const Rational at_het = index.evaluate(het);
        if (at_het > at_reference) {
            return CounterexampleCertificate{CertificateKind::axiom_violation,
                                             index.name,
                                             index.name,
                                             reference,
                                             het,
                                             {at_reference, at_het, at_reference, at_het}};
        }
    }
    return std::nullopt;
}

ReproReport reproduce_published(const SampleConfig& config) {
    const IndexDefinition alr_def = make_alr();
    const IndexDefinition alr_mod_def = make_alr_modified();
    const IndexDefinition trace_def = make_normalized_trace();
    const IndexDefinition trace_mod_def = make_trace_modified();

    const MatchingMatrix m(1, 1, 1, 1);
    const MatchingMatrix m_prime(1, 1, 3, 2);
    CounterexampleCertificate ordinal{
        CertificateKind::ordinal_disagreement,
        alr_def.name,
        alr_mod_def.name,
        m,
        m_prime,
        {alr(m), alr(m_prime), alr_modified(m), alr_modified(m_prime)}};

    ReproReport report{std::move(ordinal),
                       false,
                       affine_impossibility_replay(),
                       {},
                       {},
                       false};
    report.ordinal_valid = validate_certificate(report.ordinal_certificate, alr_def, alr_mod_def);

    report.suites.push_back(axiom_suite(alr_def, cdmz3_axiom_list(), config));
    report.suites.push_back(axiom_suite(alr_mod_def, cdmz3_axiom_list(), config));
    report.suites.push_back(axiom_suite(trace_def, cdmz2_axiom_list(), config));
    report.suites.push_back(axiom_suite(trace_mod_def, cdmz2_axiom_list(), config));

    report.recoveries.push_back(recover_linear_params(alr_def, config));
    report.recoveries.push_back(recover_linear_params(alr_mod_def, config));

    const bool values_expected =
        report.ordinal_certificate.values ==
            std::array<Rational, 4>{Rational(1), Rational(21, 23), Rational(3, 2),
                                    Rational(35, 23)} &&
        report.affine.certificate.values[0] == Rational(1, 2) &&
        report.affine.certificate.values[2] == Rational(3, 4) &&
        report.affine.alpha == 1 && report.affine.beta == 0;
    const bool suites_expected =
        std::all_of(report.suites.begin(), report.suites.end(),
                    [](const SuiteReport& suite) { return suite.zero_failures(); });
    const bool recoveries_expected =
        report.recoveries[0].alpha == 1 && report.recoveries[0].beta == 0 &&
        report.recoveries[0].in_linear_family() && report.recoveries[1].alpha == 1 &&
        report.recoveries[1].beta == Rational(1, 2) && report.recoveries[1].in_linear_family();

    report.all_expected =
        report.ordinal_valid && values_expected && suites_expected && recoveries_expected;
    return report;
}

} // namespace assort
