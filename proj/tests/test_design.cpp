#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "odkit/design.hpp"
#include "oracles.hpp"

using namespace odkit;
using namespace odkit_test;

TEST_CASE("the small full designs verify") {
    for (const auto& d : {od2_literal(), od4_literal(), od8_literal()}) {
        VerifyResult r = verify_od(d);
        CHECK(r.ok);
        CHECK(r.message.empty());
        CHECK(substitution_oracle(d, 20, 42));
    }
}

TEST_CASE("verification failures report the first broken condition") {
    // Same-variable twice in a row breaks the gram condition.
    IntMatrix bad(2, 2, {1, 1, -2, 1});
    OrthogonalDesign d({1, 1}, bad);
    VerifyResult r = verify_od(d);
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("gram of x1") != std::string::npos);
    CHECK_FALSE(substitution_oracle(d, 20, 7));

    // A flipped sign keeps both grams but breaks anticommutation.
    IntMatrix flip(2, 2, {1, 2, 2, 1});
    OrthogonalDesign d2({1, 1}, flip);
    VerifyResult r2 = verify_od(d2);
    CHECK_FALSE(r2.ok);
    CHECK(r2.message.find("anticommutation") != std::string::npos);
    CHECK_FALSE(substitution_oracle(d2, 20, 7));

    // Unknown variable code rejected at construction.
    CHECK_THROWS_AS(OrthogonalDesign({1, 1}, IntMatrix(2, 2, {1, 3, -3, 1})), domain_error);
}

TEST_CASE("coefficient-list input catches support overlap first") {
    IntMatrix a(2, 2, {1, 0, 0, 1});
    IntMatrix b(2, 2, {1, 0, 0, -1});  // overlaps a at (0,0)
    VerifyResult r = verify_od_coefficients(2, {1, 1}, {a, b});
    CHECK_FALSE(r.ok);
    CHECK(r.message.find("supports of x1 and x2 overlap at (0,0)") != std::string::npos);
    CHECK_THROWS_AS(OrthogonalDesign::from_coefficients({1, 1}, {a, b}), domain_error);
}

TEST_CASE("round trip through coefficient matrices") {
    OrthogonalDesign d = od4_literal();
    OrthogonalDesign back = OrthogonalDesign::from_coefficients(d.type(), d.coefficients());
    CHECK(back == d);
}

TEST_CASE("substitution satisfies the defining identity") {
    OrthogonalDesign d = od2_literal();
    IntMatrix m = d.substitute({3, 5});
    IntMatrix want(2, 2, {3, 5, -5, 3});
    CHECK(m == want);
    CHECK(m.gram().is_scalar_multiple_of_identity(34));

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> pick(-20, 20);
    OrthogonalDesign d8 = od8_literal();
    for (int t = 0; t < 10; ++t) {
        std::vector<i64> v(8);
        i64 want_w = 0;
        for (auto& x : v) {
            x = pick(rng);
            want_w += x * x;
        }
        CHECK(d8.substitute(v).gram().is_scalar_multiple_of_identity(want_w));
    }
    CHECK(is_hadamard(d8.substitute_ones()));
    CHECK(is_hadamard(od4_literal().substitute_ones()));
}

TEST_CASE("transpose and variable negation preserve validity") {
    OrthogonalDesign d = od4_literal();
    CHECK(verify_od(d.transpose()).ok);
    CHECK(verify_od(d.negate_var(2)).ok);
    CHECK(d.negate_var(2).negate_var(2) == d);
}

TEST_CASE("merging variables produces coarser designs") {
    OrthogonalDesign d = od4_literal();
    OrthogonalDesign m = merge_variables(d, {{0, 1}, {2, 3}});
    CHECK(m.type() == std::vector<i64>{2, 2});
    CHECK(verify_od(m).ok);
    CHECK(substitution_oracle(m, 20, 11));

    OrthogonalDesign t = merge_to_type(d, {1, 3});
    CHECK(t.type() == std::vector<i64>{1, 3});
    CHECK(verify_od(t).ok);

    CHECK(is_hadamard(merge_to_weighing(d)));
    CHECK_THROWS_AS(merge_to_type(d, {2, 3}), domain_error);

    OrthogonalDesign d22 = merge_variables(od4_literal(), {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(merge_to_type(d22, {1, 3}), domain_error);  // parts 2,2 cannot make 1
}

TEST_CASE("plug_in validates amicability and the weighted gram sum") {
    OrthogonalDesign d = od2_literal();
    IntMatrix h2(2, 2, {1, 1, 1, -1});
    IntMatrix i2 = IntMatrix::identity(2);
    PlugInResult res = plug_in(d, {h2, i2});
    CHECK(res.weight == 3);
    CHECK(is_weighing(res.matrix, 3));

    IntMatrix j2 = IntMatrix::all_ones(2, 2);
    CHECK_THROWS_WITH_AS(plug_in(d, {i2, j2}), doctest::Contains("weighted gram sum"),
                         domain_error);
    CHECK_THROWS_WITH_AS(plug_in(d, {h2, j2}), doctest::Contains("not amicable"), domain_error);
}

TEST_CASE("commutation helper") {
    IntMatrix a(2, 2, {1, 1, 0, 1});
    IntMatrix b(2, 2, {1, 0, 1, 1});
    CHECK_FALSE(matrices_commute(a, b));
    CHECK(matrices_commute(a, a * a));
    CHECK(matrices_commute(a, IntMatrix::identity(2)));
}
