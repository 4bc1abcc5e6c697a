#pragma once

#include "assort/rational.hpp"

#include <array>
#include <iosfwd>
#include <string>

namespace assort {

/// A 2x2 matching pattern
///
///     ( a  b )
///     ( c  d )
///
/// where `a` is the mass of high-high couples, `b` high-low, `c` low-high
/// and `d` low-low. Entries are nonnegative exact rationals, not all zero.
/// Immutable after construction.
class MatchingMatrix {
public:
    // Throws NegativeEntryError / AllZeroError when the invariants fail.
    MatchingMatrix(Rational a, Rational b, Rational c, Rational d);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    bool operator==(const MatchingMatrix& other) const = default;

private:
    Rational a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const MatchingMatrix& m);
std::string to_string(const MatchingMatrix& m);

/// Row and column masses, in the order (a+b, c+d, a+c, b+d):
/// high-type men, low-type men, high-type women, low-type women.
struct Marginals {
    Rational men_high, men_low, women_high, women_low;

    bool operator==(const Marginals& other) const = default;
};

/// Coefficients of a matrix over the basis M1=(2,1,1,1), M2=(1,2,1,1),
/// M3=(1,1,2,1), M4=(1,1,1,2), split into nonnegative parts:
/// t_prime[i] - t[i] = s[i], t[i] = max(-s[i], 0), t_prime[i] = max(s[i], 0).
struct DecompositionCoefficients {
    std::array<Rational, 4> s;
    std::array<Rational, 4> t;
    std::array<Rational, 4> t_prime;
};

/// The four basis matrices M1..M4.
const std::array<MatchingMatrix, 4>& basis_matrices();

/// Population size |M| = a+b+c+d. Strictly positive by the matrix invariant.
Rational population(const MatchingMatrix& m);

/// Expected mass of like-type couples under random matching with the
/// observed marginals: [(a+b)(a+c) + (d+b)(d+c)] / |M|. Returns 0 for the
/// degenerate patterns outside the likelihood-ratio domain; domain
/// enforcement belongs to index evaluation, not to this formula.
Rational random_rate(const MatchingMatrix& m);

/// True iff random_rate(m) != 0, i.e. the aggregate likelihood ratio is
/// well defined at m.
bool in_alr_domain(const MatchingMatrix& m);

/// True iff bc != 0 or ad != 0, the domain on which the normalized trace
/// is single-valued.
bool in_trace_domain(const MatchingMatrix& m);

/// True iff all four entries are strictly positive.
bool is_positive(const MatchingMatrix& m);

/// Entrywise multiplication by lambda > 0. Throws NonPositiveScalarError.
MatchingMatrix scale(const MatchingMatrix& m, const Rational& lambda);

/// Swaps the roles of the two sides: (a,b,c,d) -> (a,c,b,d).
MatchingMatrix side_swap(const MatchingMatrix& m);

/// Swaps the type labels on both sides: (a,b,c,d) -> (d,c,b,a).
MatchingMatrix type_swap(const MatchingMatrix& m);

/// Entrywise sum.
MatchingMatrix operator+(const MatchingMatrix& m, const MatchingMatrix& n);

Marginals marginals(const MatchingMatrix& m);

/// The marginal-preserving move (a+e, b-e, c-e, d+e). Requires m positive
/// and a strictly positive result, i.e. -min(a,d) < e < min(b,c); throws
/// PerturbationOutOfRangeError otherwise. Preserves marginals, population
/// and random_rate exactly.
MatchingMatrix perturb(const MatchingMatrix& m, const Rational& epsilon);

/// Coefficients of m over basis_matrices(): s[i] = entry_i - |M|/5.
DecompositionCoefficients basis_decompose(const MatchingMatrix& m);

} // namespace assort
