#include "assort/axioms.hpp"

#include "assort/errors.hpp"

#include <sstream>

namespace assort {

std::string_view to_string(Verdict v) {
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skipped_out_of_domain: return "skipped-out-of-domain";
    }
    return "unknown";
}

bool is_known_axiom(std::string_view name) {
    using namespace axiom_names;
    return name == scale_invariance || name == side_invariance || name == type_invariance ||
           name == marginal_monotonicity || name == random_decomposability ||
           name == population_decomposability || name == maximum_homogamy ||
           name == maximum_heterogamy || name == continuity;
}

std::vector<std::string> cdmz3_axiom_list() {
    using namespace axiom_names;
    return {std::string(scale_invariance), std::string(side_invariance),
            std::string(type_invariance), std::string(marginal_monotonicity),
            std::string(random_decomposability)};
}

std::vector<std::string> cdmz2_axiom_list() {
    using namespace axiom_names;
    return {std::string(scale_invariance),    std::string(side_invariance),
            std::string(type_invariance),     std::string(marginal_monotonicity),
            std::string(maximum_homogamy),    std::string(population_decomposability)};
}

namespace {

AxiomReport skipped(std::string_view axiom, const IndexDefinition& index,
                    std::vector<MatchingMatrix> witnesses) {
    AxiomReport report;
    report.axiom = axiom;
    report.index = index.name;
    report.witnesses = std::move(witnesses);
    report.verdict = Verdict::skipped_out_of_domain;
    report.note = "a witness lies outside the index domain";
    return report;
}

AxiomReport equality_report(std::string_view axiom, const IndexDefinition& index,
                            std::vector<MatchingMatrix> witnesses, Rational lhs, Rational rhs) {
    AxiomReport report;
    report.axiom = axiom;
    report.index = index.name;
    report.witnesses = std::move(witnesses);
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    report.relation = "==";
    report.verdict = *report.lhs == *report.rhs ? Verdict::pass : Verdict::fail;
    return report;
}

} // namespace

AxiomReport check_scale_invariance(const IndexDefinition& index, const MatchingMatrix& m,
                                   const Rational& lambda) {
    const MatchingMatrix scaled = scale(m, lambda);
    if (!index.in_domain(m) || !index.in_domain(scaled)) {
        return skipped(axiom_names::scale_invariance, index, {m, scaled});
    }
    AxiomReport report = equality_report(axiom_names::scale_invariance, index, {m, scaled},
                                         index.evaluate(m), index.evaluate(scaled));
    report.note = "lambda = " + to_fraction_string(lambda);
    return report;
}

AxiomReport check_side_invariance(const IndexDefinition& index, const MatchingMatrix& m) {
    const MatchingMatrix swapped = side_swap(m);
    if (!index.in_domain(m) || !index.in_domain(swapped)) {
        return skipped(axiom_names::side_invariance, index, {m, swapped});
    }
    return equality_report(axiom_names::side_invariance, index, {m, swapped}, index.evaluate(m),
                           index.evaluate(swapped));
}

AxiomReport check_type_invariance(const IndexDefinition& index, const MatchingMatrix& m) {
    const MatchingMatrix swapped = type_swap(m);
    if (!index.in_domain(m) || !index.in_domain(swapped)) {
        return skipped(axiom_names::type_invariance, index, {m, swapped});
    }
    return equality_report(axiom_names::type_invariance, index, {m, swapped}, index.evaluate(m),
                           index.evaluate(swapped));
}

AxiomReport check_marginal_monotonicity(const IndexDefinition& index, const MatchingMatrix& m,
                                        const Rational& epsilon) {
    if (epsilon == 0) {
        throw InvalidWitnessError("marginal monotonicity needs a nonzero epsilon");
    }
    const MatchingMatrix perturbed = perturb(m, epsilon);
    if (!index.in_domain(m) || !index.in_domain(perturbed)) {
        return skipped(axiom_names::marginal_monotonicity, index, {m, perturbed});
    }
    AxiomReport report;
    report.axiom = axiom_names::marginal_monotonicity;
    report.index = index.name;
    report.witnesses = {m, perturbed};
    report.lhs = index.evaluate(perturbed);
    report.rhs = index.evaluate(m);
    report.relation = epsilon > 0 ? ">" : "<";
    const bool holds = epsilon > 0 ? *report.lhs > *report.rhs : *report.lhs < *report.rhs;
    report.verdict = holds ? Verdict::pass : Verdict::fail;
    report.note = "epsilon = " + to_fraction_string(epsilon);
    return report;
}

AxiomReport check_random_decomposability(const IndexDefinition& index, const MatchingMatrix& m,
                                         const MatchingMatrix& m_prime) {
    const MatchingMatrix sum = m + m_prime;
    if (!is_positive(m) || !is_positive(m_prime) || !index.in_domain(m) ||
        !index.in_domain(m_prime) || !index.in_domain(sum)) {
        return skipped(axiom_names::random_decomposability, index, {m, m_prime, sum});
    }
    const Rational rhs = (random_rate(m) * index.evaluate(m) +
                          random_rate(m_prime) * index.evaluate(m_prime)) /
                         random_rate(sum);
    return equality_report(axiom_names::random_decomposability, index, {m, m_prime, sum},
                           index.evaluate(sum), rhs);
}

AxiomReport check_population_decomposability(const IndexDefinition& index, const MatchingMatrix& m,
                                             const MatchingMatrix& m_prime) {
    const MatchingMatrix sum = m + m_prime;
    if (!is_positive(m) || !is_positive(m_prime) || !index.in_domain(m) ||
        !index.in_domain(m_prime) || !index.in_domain(sum)) {
        return skipped(axiom_names::population_decomposability, index, {m, m_prime, sum});
    }
    const Rational rhs = (population(m) * index.evaluate(m) +
                          population(m_prime) * index.evaluate(m_prime)) /
                         (population(m) + population(m_prime));
    return equality_report(axiom_names::population_decomposability, index, {m, m_prime, sum},
                           index.evaluate(sum), rhs);
}

AxiomReport check_maximum_homogamy(const IndexDefinition& index, const MatchingMatrix& m,
                                   const MatchingMatrix& m_hom) {
    if (!(m_hom.a() * m_hom.d() > 0 && m_hom.b() * m_hom.c() == 0)) {
        throw InvalidWitnessError("maximum homogamy witness must have ad > 0 and bc = 0, got " +
                                  to_string(m_hom));
    }
    if (!index.in_domain(m) || !index.in_domain(m_hom)) {
        return skipped(axiom_names::maximum_homogamy, index, {m, m_hom});
    }
    AxiomReport report;
    report.axiom = axiom_names::maximum_homogamy;
    report.index = index.name;
    report.witnesses = {m, m_hom};
    report.lhs = index.evaluate(m_hom);
    report.rhs = index.evaluate(m);
    report.relation = ">=";
    report.verdict = *report.lhs >= *report.rhs ? Verdict::pass : Verdict::fail;
    return report;
}

AxiomReport check_maximum_heterogamy(const IndexDefinition& index, const MatchingMatrix& m,
                                     const MatchingMatrix& m_het) {
    if (!(m_het.b() > 0 && m_het.c() > 0 && m_het.a() == 0 && m_het.d() == 0)) {
        throw InvalidWitnessError(
            "maximum heterogamy witness must have b > 0, c > 0 and a = d = 0, got " +
            to_string(m_het));
    }
    if (!index.in_domain(m) || !index.in_domain(m_het)) {
        return skipped(axiom_names::maximum_heterogamy, index, {m, m_het});
    }
    AxiomReport report;
    report.axiom = axiom_names::maximum_heterogamy;
    report.index = index.name;
    report.witnesses = {m, m_het};
    report.lhs = index.evaluate(m);
    report.rhs = index.evaluate(m_het);
    report.relation = ">=";
    report.verdict = *report.lhs >= *report.rhs ? Verdict::pass : Verdict::fail;
    return report;
}

AxiomReport check_continuity(const IndexDefinition& index, const MatchingMatrix& m_limit,
                             const MatchingMatrix& direction, int depth,
                             const Rational& threshold) {
    if (!is_positive(direction)) {
        throw InvalidWitnessError("continuity direction must be a positive matrix, got " +
                                  to_string(direction));
    }
    if (depth < 1) {
        throw InvalidWitnessError("continuity depth must be at least 1");
    }
    // The step scale is normalized away so that verdicts depend on the ray,
    // not on the magnitude of the direction vector.
    const MatchingMatrix unit = scale(direction, 1 / population(direction));
    if (!index.in_domain(m_limit)) {
        return skipped(axiom_names::continuity, index, {m_limit, direction});
    }

    std::vector<Rational> gaps;
    gaps.reserve(static_cast<std::size_t>(depth));
    const Rational at_limit = index.evaluate(m_limit);
    Rational step(1, 2);
    for (int k = 1; k <= depth; ++k, step /= 2) {
        const MatchingMatrix point = m_limit + scale(unit, step);
        if (!index.in_domain(point)) {
            return skipped(axiom_names::continuity, index, {m_limit, direction});
        }
        Rational gap = index.evaluate(point) - at_limit;
        if (gap < 0) {
            gap = -gap;
        }
        gaps.push_back(std::move(gap));
    }

    bool tail_non_increasing = true;
    for (std::size_t k = gaps.size() / 2; k + 1 < gaps.size(); ++k) {
        if (gaps[k] < gaps[k + 1]) {
            tail_non_increasing = false;
            break;
        }
    }

    AxiomReport report;
    report.axiom = axiom_names::continuity;
    report.index = index.name;
    report.witnesses = {m_limit, direction};
    report.lhs = gaps.back();
    report.rhs = threshold;
    report.relation = "<";
    report.verdict =
        (tail_non_increasing && gaps.back() < threshold) ? Verdict::pass : Verdict::fail;

    std::ostringstream note;
    note << "depth " << depth << "; tail "
         << (tail_non_increasing ? "non-increasing" : "not non-increasing") << "; last gaps:";
    for (std::size_t k = gaps.size() >= 3 ? gaps.size() - 3 : 0; k < gaps.size(); ++k) {
        note << " " << to_decimal_string(gaps[k], 6);
    }
    report.note = note.str();
    return report;
}

} // namespace assort
