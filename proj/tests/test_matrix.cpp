#include "assort/matrix.hpp"

#include "assort/errors.hpp"
#include "assort/search.hpp"

#include <doctest.h>

#include <array>

#include "test_util.hpp"

using namespace assort;
using testutil::mm;
using testutil::R;

namespace {

// Independent oracle for basis_decompose: solve the 4x4 system
// sum_i s_i * (M_i)_j = M_j by Gaussian elimination over rationals.
std::array<Rational, 4> solve_basis_system(const MatchingMatrix& m) {
    // Column i holds basis matrix M_i as a vector; augmented with m.
    Rational aug[4][5];
    const auto& basis = basis_matrices();
    for (int i = 0; i < 4; ++i) {
        aug[0][i] = basis[i].a();
        aug[1][i] = basis[i].b();
        aug[2][i] = basis[i].c();
        aug[3][i] = basis[i].d();
    }
    aug[0][4] = m.a();
    aug[1][4] = m.b();
    aug[2][4] = m.c();
    aug[3][4] = m.d();

    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        while (pivot < 4 && aug[pivot][col] == 0) {
            ++pivot;
        }
        REQUIRE(pivot < 4);
        if (pivot != col) {
            for (int j = 0; j <= 4; ++j) {
                std::swap(aug[pivot][j], aug[col][j]);
            }
        }
        const Rational inv_pivot = 1 / aug[col][col];
        for (int j = col; j <= 4; ++j) {
            aug[col][j] *= inv_pivot;
        }
        for (int row = 0; row < 4; ++row) {
            if (row == col || aug[row][col] == 0) {
                continue;
            }
            const Rational factor = aug[row][col];
            for (int j = col; j <= 4; ++j) {
                aug[row][j] -= factor * aug[col][j];
            }
        }
    }
    return {aug[0][4], aug[1][4], aug[2][4], aug[3][4]};
}

MatchingMatrix reconstruct(const DecompositionCoefficients& coeffs) {
    const auto& basis = basis_matrices();
    Rational entries[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i) {
        entries[0] += coeffs.s[i] * basis[i].a();
        entries[1] += coeffs.s[i] * basis[i].b();
        entries[2] += coeffs.s[i] * basis[i].c();
        entries[3] += coeffs.s[i] * basis[i].d();
    }
    return {entries[0], entries[1], entries[2], entries[3]};
}

} // namespace

TEST_CASE("matrix construction validates the domain") {
    CHECK_NOTHROW(mm(1, 1, 1, 1));
    CHECK_NOTHROW(mm(0, 0, 1, 0));
    CHECK_THROWS_AS(mm(0, 0, 0, 0), AllZeroError);
    CHECK_THROWS_AS(mm(1, -1, 1, 1), NegativeEntryError);
}

TEST_CASE("population sums the entries") {
    CHECK(population(mm(1, 1, 1, 1)) == 4);
    CHECK(population(mm(1, 1, 3, 2)) == 7);
    CHECK(population(mm(2, 1, 1, 1)) == 5);
}

TEST_CASE("random_rate matches the random-matching benchmark") {
    CHECK(random_rate(mm(1, 1, 1, 1)) == 2);
    CHECK(random_rate(mm(1, 1, 3, 2)) == Rational(23, 7));
    CHECK(random_rate(mm(0, 0, 1, 0)) == 0);
}

TEST_CASE("likelihood-ratio domain excludes exactly the two degenerate patterns") {
    CHECK(in_alr_domain(mm(1, 1, 3, 2)));
    CHECK_FALSE(in_alr_domain(mm(0, 0, 1, 0)));
    CHECK(in_alr_domain(mm(0, 1, 1, 0)));

    // Exhaustive over the 15 nonzero 0/1 patterns: outside the domain
    // exactly when a=b=d=0 or a=c=d=0.
    for (int mask = 1; mask < 16; ++mask) {
        const int a = mask & 1, b = (mask >> 1) & 1, c = (mask >> 2) & 1, d = (mask >> 3) & 1;
        const MatchingMatrix m = mm(a, b, c, d);
        const bool degenerate = (a == 0 && b == 0 && d == 0) || (a == 0 && c == 0 && d == 0);
        CHECK(in_alr_domain(m) == !degenerate);
        CHECK((random_rate(m) == 0) == degenerate);
    }
}

TEST_CASE("trace domain excludes exactly the overlap of the two clauses") {
    CHECK_FALSE(in_trace_domain(mm(1, 1, 0, 0)));
    CHECK(in_trace_domain(mm(1, 0, 0, 1)));
    CHECK(in_trace_domain(mm(1, 1, 1, 1)));

    for (int mask = 1; mask < 16; ++mask) {
        const int a = mask & 1, b = (mask >> 1) & 1, c = (mask >> 2) & 1, d = (mask >> 3) & 1;
        const bool excluded = b * c == 0 && a * d == 0;
        CHECK(in_trace_domain(mm(a, b, c, d)) == !excluded);
    }
}

TEST_CASE("is_positive requires all entries strictly positive") {
    CHECK(is_positive(mm(1, 1, 1, 1)));
    CHECK_FALSE(is_positive(mm(0, 1, 1, 1)));
    CHECK(is_positive(mm(1, 1, 3, 2)));
}

TEST_CASE("scale multiplies entrywise and rejects non-positive factors") {
    CHECK(scale(mm(1, 1, 1, 1), 2) == mm(2, 2, 2, 2));
    CHECK(scale(mm(1, 1, 3, 2), R("1/7")) == mm("1/7", "1/7", "3/7", "2/7"));
    CHECK_THROWS_AS(scale(mm(1, 1, 1, 1), 0), NonPositiveScalarError);
    CHECK_THROWS_AS(scale(mm(1, 1, 1, 1), -1), NonPositiveScalarError);
}

TEST_CASE("side_swap and type_swap match their definitions") {
    CHECK(side_swap(mm(1, 2, 3, 4)) == mm(1, 3, 2, 4));
    CHECK(side_swap(mm(1, 1, 1, 1)) == mm(1, 1, 1, 1));
    CHECK(side_swap(mm(1, 1, 3, 2)) == mm(1, 3, 1, 2));

    CHECK(type_swap(mm(1, 2, 3, 4)) == mm(4, 3, 2, 1));
    CHECK(type_swap(mm(1, 1, 1, 1)) == mm(1, 1, 1, 1));
    CHECK(type_swap(mm(1, 1, 3, 2)) == mm(2, 3, 1, 1));
}

TEST_CASE("swaps are involutions preserving population and random_rate") {
    Sampler sampler(7);
    SampleConfig config;
    config.positivity = Positivity::allow_boundary;
    for (int i = 0; i < 1000; ++i) {
        const MatchingMatrix m = sampler.matrix(config);
        CHECK(side_swap(side_swap(m)) == m);
        CHECK(type_swap(type_swap(m)) == m);
        CHECK(population(side_swap(m)) == population(m));
        CHECK(population(type_swap(m)) == population(m));
        CHECK(random_rate(side_swap(m)) == random_rate(m));
        CHECK(random_rate(type_swap(m)) == random_rate(m));
    }
}

TEST_CASE("addition is entrywise") {
    CHECK(mm(1, 1, 1, 1) + mm(2, 1, 1, 1) == mm(3, 2, 2, 2));
    CHECK(mm(1, 1, 1, 1) + mm(1, 1, 1, 1) == mm(2, 2, 2, 2));
    CHECK(mm(2, 1, 1, 1) + mm(1, 2, 1, 1) == mm(3, 3, 2, 2));
}

TEST_CASE("marginals are the four side totals") {
    CHECK(marginals(mm(1, 1, 3, 2)) == Marginals{2, 5, 4, 3});
    CHECK(marginals(mm(1, 1, 1, 1)) == Marginals{2, 2, 2, 2});
    CHECK(marginals(mm(2, 1, 1, 1)) == Marginals{3, 2, 3, 2});
}

TEST_CASE("perturb shifts mass along the diagonal within the admissible range") {
    CHECK(perturb(mm(1, 1, 1, 1), R("1/2")) == mm("3/2", "1/2", "1/2", "3/2"));
    CHECK(perturb(mm(1, 1, 1, 1), 0) == mm(1, 1, 1, 1));
    CHECK_THROWS_AS(perturb(mm(1, 1, 1, 1), 1), PerturbationOutOfRangeError);
    CHECK_THROWS_AS(perturb(mm(1, 1, 1, 1), -1), PerturbationOutOfRangeError);
    CHECK_THROWS_AS(perturb(mm(0, 1, 1, 1), R("1/2")), PerturbationOutOfRangeError);
}

TEST_CASE("perturb preserves marginals, population and random_rate exactly") {
    Sampler sampler(11);
    const SampleConfig config;
    for (int i = 0; i < 1000; ++i) {
        const MatchingMatrix m = sampler.positive_matrix(config);
        const Rational epsilon = sampler.epsilon_for(m);
        const MatchingMatrix perturbed = perturb(m, epsilon);
        CHECK(marginals(perturbed) == marginals(m));
        CHECK(population(perturbed) == population(m));
        CHECK(random_rate(perturbed) == random_rate(m));
    }
}

TEST_CASE("random_rate is homogeneous of degree one") {
    Sampler sampler(13);
    const SampleConfig config;
    for (int i = 0; i < 500; ++i) {
        const MatchingMatrix m = sampler.positive_matrix(config);
        const Rational lambda = sampler.positive_scalar(config);
        CHECK(random_rate(scale(m, lambda)) == lambda * random_rate(m));
    }
}

TEST_CASE("basis decomposition matches the closed form and the linear-system oracle") {
    const auto flat = basis_decompose(mm(1, 1, 1, 1));
    CHECK(flat.s == std::array<Rational, 4>{R("1/5"), R("1/5"), R("1/5"), R("1/5")});

    const auto unit = basis_decompose(mm(2, 1, 1, 1));
    CHECK(unit.s == std::array<Rational, 4>{1, 0, 0, 0});

    const auto asym = basis_decompose(mm(1, 1, 3, 2));
    CHECK(asym.s == std::array<Rational, 4>{R("-2/5"), R("-2/5"), R("8/5"), R("3/5")});
    CHECK(asym.t == std::array<Rational, 4>{R("2/5"), R("2/5"), 0, 0});
    CHECK(asym.t_prime == std::array<Rational, 4>{0, 0, R("8/5"), R("3/5")});

    for (const auto& m : {mm(1, 1, 1, 1), mm(2, 1, 1, 1), mm(1, 1, 3, 2), mm("1/2", "3", "7/3", "1")}) {
        CHECK(basis_decompose(m).s == solve_basis_system(m));
    }
}

TEST_CASE("basis decomposition reconstructs the matrix") {
    Sampler sampler(17);
    SampleConfig config;
    config.positivity = Positivity::allow_boundary;
    for (int i = 0; i < 1000; ++i) {
        const MatchingMatrix m = sampler.matrix(config);
        const auto coeffs = basis_decompose(m);
        CHECK(reconstruct(coeffs) == m);
        for (int j = 0; j < 4; ++j) {
            CHECK(coeffs.t_prime[j] - coeffs.t[j] == coeffs.s[j]);
            CHECK(coeffs.t[j] >= 0);
            CHECK(coeffs.t_prime[j] >= 0);
        }
    }

    // Oracle cross-check on a smaller batch.
    Sampler oracle_sampler(19);
    for (int i = 0; i < 100; ++i) {
        const MatchingMatrix m = oracle_sampler.matrix(config);
        CHECK(basis_decompose(m).s == solve_basis_system(m));
    }
}

TEST_CASE("positive matrices share all marginals exactly when one is a perturbation") {
    Sampler sampler(23);
    const SampleConfig config;
    for (int i = 0; i < 500; ++i) {
        const MatchingMatrix m = sampler.positive_matrix(config);
        // Independent construction of a positive matrix with m's marginals:
        // choose a' in the admissible interval, then solve the side totals.
        const Marginals mg = marginals(m);
        const Rational epsilon = sampler.epsilon_for(m);
        const Rational a_new = m.a() + epsilon;
        const Rational b_new = mg.men_high - a_new;
        const Rational c_new = mg.women_high - a_new;
        const Rational d_new = population(m) - a_new - b_new - c_new;
        const MatchingMatrix independent(a_new, b_new, c_new, d_new);

        CHECK(marginals(independent) == mg);
        CHECK(independent == perturb(m, epsilon));
    }
}
