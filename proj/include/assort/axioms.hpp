#pragma once

#include "assort/indices.hpp"
#include "assort/matrix.hpp"
#include "assort/rational.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace assort {

enum class Verdict { pass, fail, skipped_out_of_domain };

std::string_view to_string(Verdict v);

/// Self-contained certificate for one axiom instance: the witnesses are
/// sufficient to re-run the check, and lhs/rhs are both sides of the tested
/// relation (absent when the check was skipped out of domain).
struct AxiomReport {
    std::string axiom;
    std::string index;
    std::vector<MatchingMatrix> witnesses;
    std::optional<Rational> lhs;
    std::optional<Rational> rhs;
    std::string relation;   // relation required between lhs and rhs, e.g. "==", ">", ">="
    Verdict verdict = Verdict::skipped_out_of_domain;
    std::string note;

    bool passed() const { return verdict == Verdict::pass; }
};

namespace axiom_names {
inline constexpr std::string_view scale_invariance = "scale_invariance";
inline constexpr std::string_view side_invariance = "side_invariance";
inline constexpr std::string_view type_invariance = "type_invariance";
inline constexpr std::string_view marginal_monotonicity = "marginal_monotonicity";
inline constexpr std::string_view random_decomposability = "random_decomposability";
inline constexpr std::string_view population_decomposability = "population_decomposability";
inline constexpr std::string_view maximum_homogamy = "maximum_homogamy";
inline constexpr std::string_view maximum_heterogamy = "maximum_heterogamy";
inline constexpr std::string_view continuity = "continuity";
} // namespace axiom_names

bool is_known_axiom(std::string_view name);

/// The hypothesis list of the likelihood-ratio characterization: the three
/// invariances, marginal monotonicity and random decomposability.
std::vector<std::string> cdmz3_axiom_list();

/// The hypothesis list of the normalized-trace characterization: the three
/// invariances, marginal monotonicity, maximum homogamy and population
/// decomposability.
std::vector<std::string> cdmz2_axiom_list();

/// I(M) == I(lambda * M). Throws NonPositiveScalarError for lambda <= 0.
AxiomReport check_scale_invariance(const IndexDefinition& index, const MatchingMatrix& m,
                                   const Rational& lambda);

/// I(M) == I(side_swap(M)).
AxiomReport check_side_invariance(const IndexDefinition& index, const MatchingMatrix& m);

/// I(M) == I(type_swap(M)).
AxiomReport check_type_invariance(const IndexDefinition& index, const MatchingMatrix& m);

/// For the marginal-preserving move M_eps = perturb(M, eps) with eps != 0:
/// I(M_eps) > I(M) must hold exactly when eps > 0. Propagates
/// PerturbationOutOfRangeError; throws InvalidWitnessError for eps == 0.
AxiomReport check_marginal_monotonicity(const IndexDefinition& index, const MatchingMatrix& m,
                                        const Rational& epsilon);

/// I(M+M') == [r(M) I(M) + r(M') I(M')] / r(M+M') for positive M, M'.
AxiomReport check_random_decomposability(const IndexDefinition& index, const MatchingMatrix& m,
                                         const MatchingMatrix& m_prime);

/// I(M+M') == [|M| I(M) + |M'| I(M')] / (|M|+|M'|) for positive M, M'.
AxiomReport check_population_decomposability(const IndexDefinition& index, const MatchingMatrix& m,
                                             const MatchingMatrix& m_prime);

/// I(M_hom) >= I(M) where M_hom has ad > 0 and bc = 0. Throws
/// InvalidWitnessError when M_hom fails the shape condition.
AxiomReport check_maximum_homogamy(const IndexDefinition& index, const MatchingMatrix& m,
                                   const MatchingMatrix& m_hom);

/// I(M) >= I(M_het) where M_het has b > 0, c > 0 and a = d = 0. Throws
/// InvalidWitnessError when M_het fails the shape condition.
AxiomReport check_maximum_heterogamy(const IndexDefinition& index, const MatchingMatrix& m,
                                     const MatchingMatrix& m_het);

/// Heuristic semi-decision of continuity at m_limit along the ray through
/// `direction` (a positive matrix, normalized to unit population): evaluates
/// I at m_limit + 2^-k * direction for k = 1..depth and passes iff the gaps
/// |I(M^k) - I(m_limit)| are non-increasing over the tail and the final gap
/// is below `threshold` (compared exactly as rationals).
AxiomReport check_continuity(const IndexDefinition& index, const MatchingMatrix& m_limit,
                             const MatchingMatrix& direction, int depth,
                             const Rational& threshold = Rational(1, 1000000));

} // namespace assort
