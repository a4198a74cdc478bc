#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qsi/conjectures.hpp"
#include "qsi/errors.hpp"

using namespace qsi;

namespace {

StretchTable table_of(std::initializer_list<long long> values) {
    StretchTable t;
    t.values = values;
    return t;
}

} // namespace

TEST_CASE("polynomial consistency on fixed tables") {
    const StretchVerdict linear = check_polynomial_consistency(table_of({2, 3, 4, 5, 6}), 1);
    CHECK(linear.holds);
    CHECK(linear.newton_coeffs == std::vector<long long>{2, 1}); // P(n) = n + 1

    const StretchVerdict constant = check_polynomial_consistency(table_of({1, 1, 1, 1}), 0);
    CHECK(constant.holds);
    CHECK(constant.newton_coeffs == std::vector<long long>{1});

    const StretchVerdict broken = check_polynomial_consistency(table_of({1, 2, 4}), 1);
    CHECK_FALSE(broken.holds);
    CHECK(broken.counterexample_n == 3);
    CHECK(broken.expected == 3);
    CHECK(broken.actual == 4);

    CHECK_THROWS_AS(check_polynomial_consistency(table_of({1, 2}), 1), InsufficientData);
}

TEST_CASE("forced-value verdicts on fixed tables") {
    CHECK(check_saturation(table_of({0, 0, 0, 0})).holds);
    CHECK_FALSE(check_saturation(table_of({0, 0, 1, 0})).holds);
    CHECK(check_saturation(table_of({0, 0, 1, 0})).counterexample_n == 3);

    CHECK(check_fulton(table_of({1, 1, 1})).holds);
    CHECK_FALSE(check_fulton(table_of({1, 2})).holds);

    const StretchVerdict ktt = check_ktt(table_of({2, 3, 4, 5}));
    CHECK(ktt.holds);
    CHECK_FALSE(ktt.vacuous);
    const StretchVerdict bad = check_ktt(table_of({2, 3, 5}));
    CHECK_FALSE(bad.holds);
    CHECK(bad.counterexample_n == 3);
    CHECK(bad.expected == 4);

    for (const auto& verdict :
         {check_saturation(table_of({3, 7, 13})), check_fulton(table_of({3, 7, 13})),
          check_ktt(table_of({3, 7, 13}))}) {
        CHECK(verdict.holds);
        CHECK(verdict.vacuous);
    }
}

TEST_CASE("witness search finds the double-arrow witness") {
    const auto witnesses = search_ktt_witnesses(2, 1, 4, 23);
    REQUIRE(!witnesses.empty());
    bool found = false;
    for (const KttWitness& w : witnesses) {
        CHECK(w.table.at(1) == 2);
        CHECK(w.ktt_holds);
        CHECK(w.oracle_agrees);
        if (w.quiver.n_arrows() == 2 && w.table.values == std::vector<long long>{2, 3, 4, 5})
            found = true;
    }
    CHECK(found);
}

TEST_CASE("witness search on a single vertex is empty") {
    CHECK(search_ktt_witnesses(1, 3, 4, 23).empty());
}
