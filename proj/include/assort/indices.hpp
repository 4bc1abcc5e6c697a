#pragma once

#include "assort/matrix.hpp"
#include "assort/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace assort {

/// A named assortativeness index: a pure evaluation rule together with the
/// predicate delimiting where the rule is defined. Values are nonnegative
/// on the domain.
struct IndexDefinition {
    std::string name;
    std::function<bool(const MatchingMatrix&)> domain;
    std::function<Rational(const MatchingMatrix&)> rule;

    // True for indices whose characterization covers positive matrices
    // only; evaluations elsewhere are flagged as an extension by the CLI.
    bool extension_outside_positive = false;

    bool in_domain(const MatchingMatrix& m) const { return domain(m); }

    // Domain-checked evaluation. Throws OutOfDomainError.
    Rational evaluate(const MatchingMatrix& m) const;
};

/// Parameters (alpha, beta) of the linear family
/// M -> (alpha*a + beta*b + beta*c + alpha*d) / r(M).
struct LinearFamilyParams {
    Rational alpha;
    Rational beta;
    bool constrained = false;

    // Requires alpha > beta >= 0; throws ConstraintViolationError.
    static LinearFamilyParams characterized(Rational alpha, Rational beta);

    // No constraint on (alpha, beta); for counterexample experiments.
    static LinearFamilyParams unconstrained(Rational alpha, Rational beta);

    // Canonical instance name: "linear:1/0" when both parameters are
    // integers, otherwise "linear:p/q,p/q".
    std::string name() const;
};

/// Aggregate likelihood ratio (a+d)/r(M). Throws OutOfDomainError when the
/// random rate vanishes.
Rational alr(const MatchingMatrix& m);

/// The variant (a + d + b/2 + c/2) / r(M), defined on the same domain.
Rational alr_modified(const MatchingMatrix& m);

/// Normalized trace: 1 if bc=0, (a+d)/|M| if abcd!=0, 0 if ad=0.
/// Single-valued only where bc!=0 or ad!=0; throws OutOfDomainError
/// elsewhere (both bc=0 and ad=0).
Rational normalized_trace(const MatchingMatrix& m);

/// The variant with interior value (a + d + b/2 + c/2)/|M|.
Rational trace_modified(const MatchingMatrix& m);

IndexDefinition make_alr();
IndexDefinition make_alr_modified();
IndexDefinition make_normalized_trace();
IndexDefinition make_trace_modified();

/// The index M -> (alpha*a + beta*b + beta*c + alpha*d) / r(M) on the
/// whole likelihood-ratio domain.
IndexDefinition linear_family(const LinearFamilyParams& params);

/// The rescaled value r(M) * I(M). Propagates OutOfDomainError.
Rational tilde_transform(const IndexDefinition& index, const MatchingMatrix& m);

/// Name-to-definition registry backing the CLI. Canonical names: "alr",
/// "alr_mod", "trace", "trace_mod" plus parsed "linear:..." instances.
class IndexRegistry {
public:
    static IndexRegistry with_builtins();

    // Registers a definition. Rejects duplicate names and definitions that
    // produce a negative value on the probe set (ConstraintViolationError).
    void add(IndexDefinition def);

    bool contains(std::string_view name) const;

    // Looks up a registered name, or parses "linear:<alpha>/<beta>" /
    // "linear:<alpha>,<beta>" into a characterized family member.
    // Throws UnknownIndexError for anything else.
    IndexDefinition resolve(std::string_view name) const;

    std::vector<std::string> names() const;

private:
    std::map<std::string, IndexDefinition, std::less<>> defs_;
};

/// Parses the parameter part of a "linear:..." name.
LinearFamilyParams parse_linear_params(std::string_view text);

} // namespace assort
