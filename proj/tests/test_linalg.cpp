#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsi/errors.hpp"
#include "qsi/matrix.hpp"
#include "qsi/rng.hpp"

#include <numeric>
#include <vector>

using namespace qsi;

namespace {

ExactMatrix random_matrix(SplitMix64& g, int rows, int cols, long long bound) {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = g.in_range(-bound, bound);
    return m;
}

// gcd of all maximal minors; 1 exactly when the columns are a basis of a
// saturated lattice
Int maximal_minor_gcd(const ExactMatrix& m) {
    const int n = m.rows(), k = m.cols();
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    Int g = 0;
    for (;;) {
        ExactMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(pick[i], j);
        g = boost::multiprecision::gcd(g, determinant(sub));
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g;
}

} // namespace

TEST_CASE("rank on fixed inputs") {
    CHECK(rank(ExactMatrix::identity(3)) == 3);
    CHECK(rank(ExactMatrix::from_rows({{1, 1}, {1, 1}})) == 1);
    CHECK(rank(ExactMatrix(0, 5)) == 0);
    CHECK(rank(ExactMatrix(5, 0)) == 0);
    CHECK(rank(ExactMatrix::from_rows({{0, 0}, {0, 0}})) == 0);
}

TEST_CASE("determinant on fixed inputs") {
    CHECK(determinant(ExactMatrix::identity(4)) == 1);
    CHECK(determinant(ExactMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(ExactMatrix::from_rows({{7}})) == 7);
    CHECK(determinant(ExactMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(ExactMatrix(2, 3)), NonSquare);
}

TEST_CASE("nullspace on fixed inputs") {
    CHECK(nullspace_basis(ExactMatrix::identity(3)).empty());

    const auto one = nullspace_basis(ExactMatrix::from_rows({{1, -1}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0].at(0, 0) == 1);
    CHECK(one[0].at(1, 0) == 1);

    CHECK(nullspace_basis(ExactMatrix(2, 3)).size() == 3);
}

TEST_CASE("from_rationals clears denominators") {
    const ExactMatrix m =
        ExactMatrix::from_rationals(1, 3, {Rat(1, 2), Rat(1, 3), Rat(2)});
    CHECK(m.at(0, 0) == 3);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(0, 2) == 12);
}

TEST_CASE("rank equals rank of the transpose") {
    SplitMix64 g(11);
    for (int t = 0; t < 80; ++t) {
        const int rows = 1 + static_cast<int>(g.below(6));
        const int cols = 1 + static_cast<int>(g.below(6));
        const ExactMatrix m = random_matrix(g, rows, cols, 9);
        CHECK(rank(m) == rank(m.transpose()));
    }
}

TEST_CASE("determinant vanishes exactly on singular matrices") {
    SplitMix64 g(12);
    for (int t = 0; t < 80; ++t) {
        const int n = 1 + static_cast<int>(g.below(5));
        const ExactMatrix m = random_matrix(g, n, n, 4);
        CHECK((determinant(m) != 0) == (rank(m) == n));
    }
}

TEST_CASE("nullspace vectors are killed and count the corank") {
    SplitMix64 g(13);
    for (int t = 0; t < 60; ++t) {
        const int rows = 1 + static_cast<int>(g.below(5));
        const int cols = 1 + static_cast<int>(g.below(5));
        const ExactMatrix m = random_matrix(g, rows, cols, 6);
        const auto basis = nullspace_basis(m);
        CHECK(static_cast<int>(basis.size()) == m.cols() - rank(m));
        for (const ExactMatrix& v : basis) CHECK((m * v).is_zero());
    }
}

TEST_CASE("modular rank is a lower bound, almost always exact") {
    SplitMix64 g(14);
    int agreements = 0;
    const int trials = 1000;
    for (int t = 0; t < trials; ++t) {
        const int rows = 1 + static_cast<int>(g.below(5));
        const int cols = 1 + static_cast<int>(g.below(5));
        const ExactMatrix m = random_matrix(g, rows, cols, 20);
        const int exact = rank(m);
        const int modular = rank_mod_prime(m, g.next());
        CHECK(modular <= exact);
        if (modular == exact) ++agreements;
    }
    CHECK(agreements >= trials - 1);
}

TEST_CASE("kernel lattice is a saturated basis of the kernel") {
    SplitMix64 g(15);
    for (int t = 0; t < 60; ++t) {
        const int rows = 1 + static_cast<int>(g.below(4));
        const int cols = 1 + static_cast<int>(g.below(4));
        const ExactMatrix m = random_matrix(g, rows, cols, 5);
        const ExactMatrix k = kernel_lattice(m);
        CHECK(k.cols() == m.cols() - rank(m));
        if (k.cols() > 0) {
            CHECK((m * k).is_zero());
            CHECK(rank(k) == k.cols());
            CHECK(maximal_minor_gcd(k) == 1);
        }
    }
}

TEST_CASE("solve_exact reproduces a planted integer solution") {
    SplitMix64 g(16);
    int done = 0;
    while (done < 40) {
        const int rows = 2 + static_cast<int>(g.below(4));
        const int cols = 1 + static_cast<int>(g.below(static_cast<std::uint64_t>(rows)));
        const ExactMatrix a = random_matrix(g, rows, cols, 5);
        if (rank(a) != cols) continue;
        const ExactMatrix x = random_matrix(g, cols, 2, 7);
        CHECK(solve_exact(a, a * x) == x);
        ++done;
    }
}
