#include "assort/matrix.hpp"

#include "assort/errors.hpp"

#include <ostream>
#include <sstream>

namespace assort {

MatchingMatrix::MatchingMatrix(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ < 0 || b_ < 0 || c_ < 0 || d_ < 0) {
        throw NegativeEntryError("matching matrix entries must be nonnegative, got " +
                                 to_string(*this));
    }
    if (a_ == 0 && b_ == 0 && c_ == 0 && d_ == 0) {
        throw AllZeroError("the zero matrix is not a matching matrix");
    }
}

std::ostream& operator<<(std::ostream& os, const MatchingMatrix& m) {
    return os << "(" << to_fraction_string(m.a()) << ", " << to_fraction_string(m.b()) << ", "
              << to_fraction_string(m.c()) << ", " << to_fraction_string(m.d()) << ")";
}

std::string to_string(const MatchingMatrix& m) {
    // Entries may violate the construction invariants here: this is also
    // used to format rejected input in error messages.
    std::ostringstream os;
    os << "(" << to_fraction_string(m.a()) << ", " << to_fraction_string(m.b()) << ", "
       << to_fraction_string(m.c()) << ", " << to_fraction_string(m.d()) << ")";
    return os.str();
}

const std::array<MatchingMatrix, 4>& basis_matrices() {
    static const std::array<MatchingMatrix, 4> basis = {
        MatchingMatrix(2, 1, 1, 1),
        MatchingMatrix(1, 2, 1, 1),
        MatchingMatrix(1, 1, 2, 1),
        MatchingMatrix(1, 1, 1, 2),
    };
    return basis;
}

Rational population(const MatchingMatrix& m) {
    return m.a() + m.b() + m.c() + m.d();
}

Rational random_rate(const MatchingMatrix& m) {
    const Rational numerator =
        (m.a() + m.b()) * (m.a() + m.c()) + (m.d() + m.b()) * (m.d() + m.c());
    return numerator / population(m);
}

bool in_alr_domain(const MatchingMatrix& m) {
    return random_rate(m) != 0;
}

bool in_trace_domain(const MatchingMatrix& m) {
    return m.b() * m.c() != 0 || m.a() * m.d() != 0;
}

bool is_positive(const MatchingMatrix& m) {
    return m.a() > 0 && m.b() > 0 && m.c() > 0 && m.d() > 0;
}

MatchingMatrix scale(const MatchingMatrix& m, const Rational& lambda) {
    if (lambda <= 0) {
        throw NonPositiveScalarError("scale factor must be positive, got " +
                                     to_fraction_string(lambda));
    }
    return {lambda * m.a(), lambda * m.b(), lambda * m.c(), lambda * m.d()};
}

MatchingMatrix side_swap(const MatchingMatrix& m) {
    return {m.a(), m.c(), m.b(), m.d()};
}

MatchingMatrix type_swap(const MatchingMatrix& m) {
    return {m.d(), m.c(), m.b(), m.a()};
}

MatchingMatrix operator+(const MatchingMatrix& m, const MatchingMatrix& n) {
    return {m.a() + n.a(), m.b() + n.b(), m.c() + n.c(), m.d() + n.d()};
}

Marginals marginals(const MatchingMatrix& m) {
    return {m.a() + m.b(), m.c() + m.d(), m.a() + m.c(), m.b() + m.d()};
}

MatchingMatrix perturb(const MatchingMatrix& m, const Rational& epsilon) {
    if (!is_positive(m)) {
        throw PerturbationOutOfRangeError("perturb requires a positive matrix, got " +
                                          to_string(m));
    }
    const Rational a = m.a() + epsilon;
    const Rational b = m.b() - epsilon;
    const Rational c = m.c() - epsilon;
    const Rational d = m.d() + epsilon;
    if (a <= 0 || b <= 0 || c <= 0 || d <= 0) {
        throw PerturbationOutOfRangeError(
            "epsilon " + to_fraction_string(epsilon) + " leaves " + to_string(m) +
            " with a non-positive entry; admissible range is (-min(a,d), min(b,c))");
    }
    return {a, b, c, d};
}

DecompositionCoefficients basis_decompose(const MatchingMatrix& m) {
    const Rational fifth = population(m) / 5;
    DecompositionCoefficients out;
    out.s = {m.a() - fifth, m.b() - fifth, m.c() - fifth, m.d() - fifth};
    for (std::size_t i = 0; i < 4; ++i) {
        out.t[i] = out.s[i] < 0 ? Rational(-out.s[i]) : Rational(0);
        out.t_prime[i] = out.s[i] > 0 ? out.s[i] : Rational(0);
    }
    return out;
}

} // namespace assort
