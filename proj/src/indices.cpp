#include "assort/indices.hpp"

#include "assort/errors.hpp"

#include <utility>
#include <vector>

namespace assort {

Rational IndexDefinition::evaluate(const MatchingMatrix& m) const {
    if (!domain(m)) {
        throw OutOfDomainError(name + " is not defined at " + to_string(m));
    }
    return rule(m);
}

LinearFamilyParams LinearFamilyParams::characterized(Rational alpha, Rational beta) {
    if (!(alpha > beta && beta >= 0)) {
        throw ConstraintViolationError("linear family requires alpha > beta >= 0, got alpha=" +
                                       to_fraction_string(alpha) + ", beta=" +
                                       to_fraction_string(beta));
    }
    return {std::move(alpha), std::move(beta), true};
}

LinearFamilyParams LinearFamilyParams::unconstrained(Rational alpha, Rational beta) {
    return {std::move(alpha), std::move(beta), false};
}

std::string LinearFamilyParams::name() const {
    if (denominator(alpha) == 1 && denominator(beta) == 1) {
        return "linear:" + to_fraction_string(alpha) + "/" + to_fraction_string(beta);
    }
    return "linear:" + to_fraction_string(alpha) + "," + to_fraction_string(beta);
}

Rational alr(const MatchingMatrix& m) {
    const Rational r = random_rate(m);
    if (r == 0) {
        throw OutOfDomainError("alr is not defined at " + to_string(m) +
                               ": the random matching rate is zero");
    }
    return (m.a() + m.d()) / r;
}

Rational alr_modified(const MatchingMatrix& m) {
    const Rational r = random_rate(m);
    if (r == 0) {
        throw OutOfDomainError("alr_mod is not defined at " + to_string(m) +
                               ": the random matching rate is zero");
    }
    return (m.a() + m.d() + m.b() / 2 + m.c() / 2) / r;
}

namespace {

Rational trace_clauses(const MatchingMatrix& m, const Rational& interior_numerator,
                       std::string_view name) {
    const bool pure_homogamy = m.b() * m.c() == 0;
    const bool pure_heterogamy = m.a() * m.d() == 0;
    if (pure_homogamy && pure_heterogamy) {
        throw OutOfDomainError(std::string(name) + " is not defined at " + to_string(m) +
                               ": bc = 0 and ad = 0 select conflicting clauses");
    }
    if (pure_homogamy) {
        return 1;
    }
    if (pure_heterogamy) {
        return 0;
    }
    return interior_numerator / population(m);
}

} // namespace

Rational normalized_trace(const MatchingMatrix& m) {
    return trace_clauses(m, m.a() + m.d(), "trace");
}

Rational trace_modified(const MatchingMatrix& m) {
    return trace_clauses(m, m.a() + m.d() + m.b() / 2 + m.c() / 2, "trace_mod");
}

IndexDefinition make_alr() {
    return {"alr", in_alr_domain, [](const MatchingMatrix& m) { return alr(m); }, true};
}

IndexDefinition make_alr_modified() {
    return {"alr_mod", in_alr_domain, [](const MatchingMatrix& m) { return alr_modified(m); },
            true};
}

IndexDefinition make_normalized_trace() {
    return {"trace", in_trace_domain, [](const MatchingMatrix& m) { return normalized_trace(m); },
            false};
}

IndexDefinition make_trace_modified() {
    return {"trace_mod", in_trace_domain,
            [](const MatchingMatrix& m) { return trace_modified(m); }, false};
}

IndexDefinition linear_family(const LinearFamilyParams& params) {
    const Rational alpha = params.alpha;
    const Rational beta = params.beta;
    return {params.name(), in_alr_domain,
            [alpha, beta](const MatchingMatrix& m) -> Rational {
                const Rational numerator =
                    alpha * m.a() + beta * m.b() + beta * m.c() + alpha * m.d();
                return numerator / random_rate(m);
            },
            true};
}

Rational tilde_transform(const IndexDefinition& index, const MatchingMatrix& m) {
    return random_rate(m) * index.evaluate(m);
}

namespace {

// Fixed probe set used to reject index definitions with negative values at
// registration time. Deterministic by construction.
const std::vector<MatchingMatrix>& probe_matrices() {
    static const std::vector<MatchingMatrix> probes = {
        MatchingMatrix(1, 1, 1, 1),  MatchingMatrix(2, 1, 1, 1),
        MatchingMatrix(1, 2, 1, 1),  MatchingMatrix(1, 1, 2, 1),
        MatchingMatrix(1, 1, 1, 2),  MatchingMatrix(1, 1, 3, 2),
        MatchingMatrix(1, 2, 3, 4),  MatchingMatrix(9, 1, 2, 7),
        MatchingMatrix(Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5)),
        MatchingMatrix(0, 1, 1, 0),  MatchingMatrix(1, 0, 0, 1),
        MatchingMatrix(0, 1, 4, 0),  MatchingMatrix(2, 0, 0, 3),
        MatchingMatrix(1, 1, 0, 1),  MatchingMatrix(0, 1, 1, 1),
    };
    return probes;
}

} // namespace

IndexRegistry IndexRegistry::with_builtins() {
    IndexRegistry registry;
    registry.add(make_alr());
    registry.add(make_alr_modified());
    registry.add(make_normalized_trace());
    registry.add(make_trace_modified());
    return registry;
}

void IndexRegistry::add(IndexDefinition def) {
    if (defs_.contains(def.name)) {
        throw ConstraintViolationError("index '" + def.name + "' is already registered");
    }
    for (const MatchingMatrix& probe : probe_matrices()) {
        if (def.in_domain(probe) && def.rule(probe) < 0) {
            throw ConstraintViolationError("index '" + def.name +
                                           "' returns a negative value at " + to_string(probe) +
                                           "; indices map into the nonnegative reals");
        }
    }
    defs_.emplace(def.name, std::move(def));
}

bool IndexRegistry::contains(std::string_view name) const {
    return defs_.find(name) != defs_.end();
}

IndexDefinition IndexRegistry::resolve(std::string_view name) const {
    if (auto it = defs_.find(name); it != defs_.end()) {
        return it->second;
    }
    constexpr std::string_view prefix = "linear:";
    if (name.starts_with(prefix)) {
        return linear_family(parse_linear_params(name.substr(prefix.size())));
    }
    throw UnknownIndexError("unknown index '" + std::string(name) + "'");
}

std::vector<std::string> IndexRegistry::names() const {
    std::vector<std::string> out;
    out.reserve(defs_.size());
    for (const auto& [name, def] : defs_) {
        out.push_back(name);
    }
    return out;
}

LinearFamilyParams parse_linear_params(std::string_view text) {
    std::string_view alpha_text;
    std::string_view beta_text;
    if (auto comma = text.find(','); comma != std::string_view::npos) {
        alpha_text = text.substr(0, comma);
        beta_text = text.substr(comma + 1);
    } else {
        // Without a comma the only unambiguous form is integer/integer.
        auto slash = text.find('/');
        if (slash == std::string_view::npos ||
            text.find('/', slash + 1) != std::string_view::npos) {
            throw ParseError("cannot parse linear family parameters '" + std::string(text) +
                             "'; expected alpha/beta with integers, or alpha,beta with rationals");
        }
        alpha_text = text.substr(0, slash);
        beta_text = text.substr(slash + 1);
    }
    return LinearFamilyParams::characterized(parse_rational(alpha_text),
                                             parse_rational(beta_text));
}

} // namespace assort
