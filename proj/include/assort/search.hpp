#pragma once

#include "assort/axioms.hpp"
#include "assort/indices.hpp"
#include "assort/matrix.hpp"
#include "assort/rational.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace assort {

enum class Positivity { required, allow_boundary };

/// Deterministic sampling plan. Entries are rationals p/q with
/// 1 <= p <= entry_max * denominator_max and 1 <= q <= denominator_max;
/// identical (seed, config) reproduces the identical stream.
struct SampleConfig {
    std::uint64_t seed = 0;
    std::uint32_t count = 1000;
    std::uint32_t entry_max = 100;
    std::uint32_t denominator_max = 10;
    Positivity positivity = Positivity::required;
};

/// splitmix64 stream; hand-rolled so that reports are byte-identical
/// regardless of the standard library in use.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);  // inclusive bounds

    Rational rational_entry(const SampleConfig& config);
    MatchingMatrix matrix(const SampleConfig& config);
    MatchingMatrix positive_matrix(const SampleConfig& config);

    // lambda > 0 for scale-invariance witnesses.
    Rational positive_scalar(const SampleConfig& config);

    // Nonzero epsilon from a sign-balanced 32-point grid spanning
    // (-min(a,d), min(b,c)); requires m positive.
    Rational epsilon_for(const MatchingMatrix& m);

    // ad > 0, bc = 0.
    MatchingMatrix homogamy_witness(const SampleConfig& config);

    // a = d = 0, b > 0, c > 0.
    MatchingMatrix heterogamy_witness(const SampleConfig& config);

    // (0, b, c, 0) with integer b, c >= 1; boundary limits whose
    // continuity gaps shrink geometrically for the linear family.
    MatchingMatrix boundary_limit();

private:
    std::uint64_t state_;
};

enum class CertificateKind { ordinal_disagreement, axiom_violation, affine_impossibility };

std::string_view to_string(CertificateKind kind);

/// A pair of matrices plus the four index values demonstrating the claimed
/// relation; re-validates under independent re-evaluation.
struct CounterexampleCertificate {
    CertificateKind kind;
    std::string index1;
    std::string index2;
    MatchingMatrix m;
    MatchingMatrix m_prime;
    std::array<Rational, 4> values;  // I1(m), I1(m'), I2(m), I2(m')
};

bool validate_certificate(const CounterexampleCertificate& certificate,
                          const IndexDefinition& index1, const IndexDefinition& index2);

/// Per-axiom tallies of one randomized suite, with the first failing
/// certificate retained.
struct AxiomTally {
    std::string axiom;
    std::uint32_t pass = 0;
    std::uint32_t fail = 0;
    std::uint32_t skipped = 0;
    std::optional<AxiomReport> first_failure;
};

struct SuiteReport {
    std::string index;
    SampleConfig config;
    std::vector<AxiomTally> tallies;

    bool zero_failures() const;
    const AxiomTally* tally_for(std::string_view axiom) const;
};

/// Runs each named axiom on `config.count` freshly sampled witnesses.
/// Throws UnknownAxiomError for unrecognized names.
SuiteReport axiom_suite(const IndexDefinition& index, const std::vector<std::string>& axioms,
                        const SampleConfig& config);

/// Rejection-samples matrix pairs until the two indices rank a pair in
/// opposite strict orders; absent when the budget is exhausted.
std::optional<CounterexampleCertificate>
find_ordinal_disagreement(const IndexDefinition& index1, const IndexDefinition& index2,
                          std::uint32_t budget, const SampleConfig& config);

/// The constructive half of the linear-family characterization: evaluates
/// the rescaled index at the four basis matrices, recovers (alpha, beta)
/// and reports the largest sampled deviation from the implied linear form.
struct RecoveredParams {
    std::string index;
    Rational alpha_prime, beta_prime, gamma_prime, delta_prime;
    Rational alpha, beta;
    Rational max_residual;
    bool symmetry_ok = false;

    // True iff the index is exactly the recovered family member with the
    // characterized constraint alpha > beta >= 0.
    bool in_linear_family() const;
};

RecoveredParams recover_linear_params(const IndexDefinition& index, const SampleConfig& config);

/// Both directions of the characterization on samples: the axioms hold
/// with zero failures iff the recovered member reproduces the index.
struct CharacterizationReport {
    std::string index;
    SuiteReport suite;
    RecoveredParams params;
    bool axioms_pass = false;
    bool in_linear_family = false;
    bool consistent = false;      // biconditional between the two lines above
    std::string verdict;          // "member" | "non-member" | "characterization-violated"
};

CharacterizationReport verify_characterization(const IndexDefinition& index, const SampleConfig& config);

/// Mechanical replay of the affine-impossibility argument for the trace
/// pair: a pure-homogamy matrix forces alpha + beta = 1, a pure-heterogamy
/// matrix forces beta = 0, and the all-ones matrix then separates the two
/// indices (1/2 vs 3/4).
struct AffineReplay {
    MatchingMatrix case1;  // bc = 0, ad > 0
    MatchingMatrix case2;  // ad = 0, bc > 0
    MatchingMatrix witness;
    Rational trace_at_case1, trace_mod_at_case1;
    Rational trace_at_case2, trace_mod_at_case2;
    Rational alpha, beta;  // solved from the two cases
    CounterexampleCertificate certificate;
};

AffineReplay affine_impossibility_replay();
CounterexampleCertificate check_affine_impossibility();

/// Scans heterogamy matrices (0, b, c, 0) with growing c/b against the
/// reference matrix (1,1,1,1); a certificate means maximum heterogamy
/// fails for the index.
std::optional<CounterexampleCertificate>
find_heterogamy_violation(const IndexDefinition& index, std::uint32_t budget);

/// The full reproduction bundle, as one auditable report: both published
/// counterexamples, the axiom suites behind them, and the parameter
/// recoveries.
struct ReproReport {
    CounterexampleCertificate ordinal_certificate;
    bool ordinal_valid = false;
    AffineReplay affine;
    std::vector<SuiteReport> suites;           // alr, alr_mod on the CDMZ3 list; trace, trace_mod on the CDMZ2 list
    std::vector<RecoveredParams> recoveries;   // alr, alr_mod
    bool all_expected = false;
};

ReproReport reproduce_published(const SampleConfig& config);

} // namespace assort
