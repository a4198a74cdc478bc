#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsi/errors.hpp"
#include "qsi/flag.hpp"
#include "qsi/rng.hpp"

using namespace qsi;

namespace {

Partition p(std::initializer_list<int> parts) {
    return Partition(std::vector<int>(parts));
}

FlagProblem paper_example() {
    return make_flag_problem(4, 5, {p({5, 2, 1}), p({4, 2}), p({4, 2})});
}

// coordinate flags: F_i spanned by the first delta_i basis vectors
std::vector<FlagChain> coordinate_flags(const FlagProblem& fp) {
    std::vector<FlagChain> flags;
    for (const Partition& lam : fp.lambdas) {
        FlagChain chain;
        for (int d : lam.column_data().lengths) {
            ExactMatrix f(fp.r, d);
            for (int i = 0; i < d; ++i) f.at(i, i) = 1;
            chain.push_back(std::move(f));
        }
        flags.push_back(std::move(chain));
    }
    return flags;
}

} // namespace

TEST_CASE("codimension condition") {
    CHECK(codim_condition(paper_example())); // 4*5 = 8 + 6 + 6
    CHECK(codim_condition(make_flag_problem(2, 1, {p({1}), p({1})})));
    CHECK_FALSE(codim_condition(make_flag_problem(2, 1, {p({1}), p({1}), p({1})})));
}

TEST_CASE("flag problem validation") {
    CHECK_THROWS_AS(make_flag_problem(2, 1, {p({1, 1})}), std::invalid_argument); // 2 rows
    CHECK_THROWS_AS(make_flag_problem(3, 1, {p({2})}), std::invalid_argument);    // part > ell
    CHECK_THROWS_AS(make_flag_problem(1, 1, {p({1})}), std::invalid_argument);
}

TEST_CASE("flag quiver of the worked example") {
    const FlagQuiverSpec spec = build_flag_quiver(paper_example());
    CHECK(spec.quiver.n_vertices() == 8);
    CHECK(spec.quiver.n_arrows() == 7);

    const VertexMap alpha{{"v1_1", 1}, {"v1_2", 2}, {"v1_3", 3}, {"v2_1", 1},
                          {"v2_2", 2}, {"v3_1", 1}, {"v3_2", 2}, {"s", 4}};
    const VertexMap beta{{"v1_1", 0}, {"v1_2", 3}, {"v1_3", 4}, {"v2_1", 1},
                         {"v2_2", 3}, {"v3_1", 1}, {"v3_2", 3}, {"s", 5}};
    const VertexMap sigma{{"v1_1", 3}, {"v1_2", 1}, {"v1_3", 1}, {"v2_1", 2},
                          {"v2_2", 2}, {"v3_1", 2}, {"v3_2", 2}, {"s", -5}};
    CHECK(spec.alpha == alpha);
    CHECK(spec.beta == beta);
    CHECK(spec.sigma == sigma);
    CHECK(ringel_form(spec.quiver, spec.alpha, spec.beta) == 0);
    CHECK(sigma_beta(spec.quiver, spec.beta) == spec.sigma);
}

TEST_CASE("flag quiver of the two-line determinant example") {
    const FlagQuiverSpec spec = build_flag_quiver(make_flag_problem(2, 1, {p({1}), p({1})}));
    CHECK(spec.alpha == VertexMap{{"v1_1", 1}, {"v2_1", 1}, {"s", 2}});
    CHECK(spec.beta == VertexMap{{"v1_1", 0}, {"v2_1", 0}, {"s", 1}});
    CHECK(spec.sigma == VertexMap{{"v1_1", 1}, {"v2_1", 1}, {"s", -1}});
}

TEST_CASE("codimension failure is rejected") {
    CHECK_THROWS_AS(build_flag_quiver(make_flag_problem(2, 1, {p({1}), p({1}), p({1})})),
                    CodimFailure);
}

TEST_CASE("construction identities on random flag problems") {
    SplitMix64 g(61);
    int done = 0;
    while (done < 25) {
        const int r = 2 + static_cast<int>(g.below(3)); // 2..4
        const int s = 1 + static_cast<int>(g.below(4)); // 1..4
        std::vector<Partition> lambdas;
        long long total = 0;
        for (int i = 0; i < s; ++i) {
            std::vector<int> parts;
            int cap = 5;
            const int len = static_cast<int>(g.below(static_cast<std::uint64_t>(r)));
            for (int k = 0; k < len; ++k) {
                const int part = 1 + static_cast<int>(g.below(static_cast<std::uint64_t>(cap)));
                parts.push_back(part);
                cap = part;
            }
            lambdas.emplace_back(std::move(parts));
            total += lambdas.back().size();
        }
        if (total == 0 || total % r != 0) continue;
        const long long ell = total / r;
        bool fits = ell >= 1 && ell <= 5;
        for (const Partition& l : lambdas) fits = fits && l.first() <= ell;
        if (!fits) continue;

        const FlagProblem fp = make_flag_problem(r, static_cast<int>(ell), lambdas);
        REQUIRE(codim_condition(fp));
        const FlagQuiverSpec spec = build_flag_quiver(fp);
        CHECK(ringel_form(spec.quiver, spec.alpha, spec.beta) == 0);
        CHECK(sigma_beta(spec.quiver, spec.beta) == spec.sigma);
        CHECK(evaluate_weight(spec.sigma, spec.alpha) == 0);
        ++done;
    }
}

TEST_CASE("translation identity on fixed inputs") {
    const TranslationReport det2 = verify_translation(make_flag_problem(2, 1, {p({1}), p({1})}), 1);
    CHECK(det2.quiver_dim == 1);
    CHECK(det2.tensor_dim == 1);
    CHECK(det2.equal);

    const FlagProblem ktt = make_flag_problem(3, 3, {p({2, 1}), p({2, 1}), p({2, 1})});
    const TranslationReport base = verify_translation(ktt, 1);
    CHECK(base.quiver_dim == 2);
    CHECK(base.tensor_dim == 2);
    CHECK(base.equal);

    const TranslationReport stretched = verify_translation(ktt, 4);
    CHECK(stretched.quiver_dim == 5);
    CHECK(stretched.tensor_dim == 5);
    CHECK(stretched.equal);
}

TEST_CASE("semistability inequality evaluation") {
    const FlagProblem fp = paper_example();
    const auto flags = coordinate_flags(fp);

    // the full space always sits on the boundary
    CHECK(flag_semistability_refute(fp, flags, ExactMatrix::identity(fp.r)));
    // the zero subspace is harmless
    CHECK(flag_semistability_refute(fp, flags, ExactMatrix(fp.r, 0)));

    // fully degenerate coordinate flags fail against the first axis:
    // every b-count hits the line, so the left side is 5 + 4 + 4 > 5
    ExactMatrix axis(fp.r, 1);
    axis.at(0, 0) = 1;
    CHECK_FALSE(flag_semistability_refute(fp, flags, axis));

    const auto found = search_refuting_subspace(fp, flags, 10, 5);
    REQUIRE(found.has_value());
    CHECK_FALSE(flag_semistability_refute(fp, flags, *found));
}

TEST_CASE("semistability input validation") {
    const FlagProblem fp = paper_example();
    auto flags = coordinate_flags(fp);

    CHECK_THROWS_AS(flag_semistability_refute(fp, flags, ExactMatrix(fp.r + 1, 1)),
                    ShapeMismatch);

    auto wrong = flags;
    wrong[0][0] = ExactMatrix(fp.r, 2); // rank 0, declared dimension 1
    CHECK_THROWS_AS(flag_semistability_refute(fp, wrong, ExactMatrix::identity(fp.r)),
                    ShapeMismatch);

    auto twisted = flags;
    // replace F^1_2 by a 2-plane not containing F^1_1
    ExactMatrix plane(fp.r, 2);
    plane.at(1, 0) = 1;
    plane.at(2, 1) = 1;
    twisted[0][1] = plane;
    CHECK_THROWS_AS(flag_semistability_refute(fp, twisted, ExactMatrix::identity(fp.r)),
                    NotNested);
}
