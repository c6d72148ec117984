#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "odkit/latin.hpp"
#include "odkit/rings.hpp"

using namespace odkit;

namespace {

void check_phi_homomorphism(const Ring& r) {
    CHECK(r.phi(0).to_dense() == IntMatrix::identity(r.phi(0).size()));
    for (std::size_t a = 0; a < r.size(); ++a)
        for (std::size_t b = 0; b < r.size(); ++b)
            CHECK((r.phi(a) * r.phi(b)) == r.phi(r.add(a, b)));
    // Injective: distinct elements map to distinct permutations.
    for (std::size_t a = 1; a < r.size(); ++a) CHECK(r.phi(a) != r.phi(0));
}

}  // namespace

TEST_CASE("integers mod m") {
    Ring z6 = Ring::integers_mod(6);
    CHECK(z6.size() == 6);
    CHECK(z6.add(4, 5) == 3);
    CHECK(z6.mul(4, 5) == 2);
    CHECK(z6.neg(2) == 4);
    CHECK(z6.is_unit(5));
    CHECK_FALSE(z6.is_unit(3));
    CHECK(z6.additive_decomposition() == std::vector<i64>{6});
    CHECK(z6.phi(1).to_dense() == circulant_shift(6));
    check_phi_homomorphism(z6);
}

TEST_CASE("small fields use the classical moduli") {
    Ring f4 = Ring::galois_field(2, 2);
    CHECK(f4.size() == 4);
    CHECK(f4.modulus_polynomial() == std::vector<i64>{1, 1, 1});  // x^2+x+1
    // x * x = x + 1, and (x)(x+1) = 1.
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.mul(2, 3) == 1);
    for (std::size_t a = 1; a < 4; ++a) CHECK(f4.is_unit(a));

    Ring f8 = Ring::galois_field(2, 3);
    CHECK(f8.modulus_polynomial() == std::vector<i64>{1, 1, 0, 1});  // x^3+x+1

    Ring f9 = Ring::galois_field(3, 2);
    CHECK(f9.modulus_polynomial() == std::vector<i64>{1, 0, 1});  // x^2+1
    CHECK(f9.mul(3, 3) == 2);  // x * x = -1

    check_phi_homomorphism(f4);
    check_phi_homomorphism(f9);

    // Tensor layout: digits (1,1) inflate to shift x shift.
    CHECK(f4.phi(3).to_dense() ==
          kron(MonomialMatrix::shift(2, 1), MonomialMatrix::shift(2, 1)).to_dense());
}

TEST_CASE("galois ring of sixteen elements") {
    Ring gr = Ring::galois_ring(2, 2, 2);
    CHECK(gr.size() == 16);
    CHECK(gr.describe() == "GR(4,2)");
    CHECK(gr.modulus_polynomial() == std::vector<i64>{1, 1, 1});  // x^2+x+1 lifts untouched
    CHECK(gr.additive_decomposition() == std::vector<i64>{4, 4});
    // The class of x has multiplicative order 3.
    std::size_t x = 4;
    CHECK(gr.pow(x, 3) == gr.one());
    CHECK(gr.pow(x, 1) != gr.one());
    // Units are exactly the elements staying nonzero mod 2: 12 of 16.
    std::size_t units = 0;
    for (std::size_t a = 0; a < 16; ++a)
        if (gr.is_unit(a)) ++units;
    CHECK(units == 12);
    CHECK_FALSE(gr.is_unit(0));
    CHECK_FALSE(gr.is_unit(2));
    CHECK_FALSE(gr.is_unit(8));
    CHECK_FALSE(gr.is_unit(10));
    check_phi_homomorphism(gr);
}

TEST_CASE("ring names parse") {
    CHECK(Ring::parse("Z8").describe() == "Z8");
    CHECK(Ring::parse("GF(9)").describe() == "GF(9)");
    CHECK(Ring::parse("GR(4,2)").describe() == "GR(4,2)");
    CHECK(Ring::parse("GF(9)").size() == 9);
    CHECK_THROWS_AS(Ring::parse("GF(6)"), domain_error);
    CHECK_THROWS_AS(Ring::parse("what"), domain_error);
    CHECK_THROWS_AS(Ring::integers_mod(1 << 20), domain_error);  // over the size cap
}

TEST_CASE("unit difference sets") {
    Ring f5 = Ring::galois_field(5, 1);
    CHECK(unit_difference_set(f5, 3) == std::vector<std::size_t>{0, 1, 2});
    CHECK(max_unit_difference_set(f5).size() == 5);  // whole field works

    Ring z4 = Ring::integers_mod(4);
    CHECK(unit_difference_set(z4, 2) == std::vector<std::size_t>{0, 1});
    CHECK(unit_difference_set(z4, 3).empty());
    CHECK(max_unit_difference_set(z4).size() == 2);

    // The sixteen-element galois ring holds a four-element set, no more.
    Ring gr = Ring::galois_ring(2, 2, 2);
    std::vector<std::size_t> best = max_unit_difference_set(gr);
    CHECK(best.size() == 4);
    for (std::size_t i = 0; i < best.size(); ++i)
        for (std::size_t j = i + 1; j < best.size(); ++j)
            CHECK(gr.is_unit(gr.sub(best[i], best[j])));

    // Enumeration yields ascending tuples in lex order.
    std::vector<std::vector<std::size_t>> seen;
    for_each_unit_difference_set(Ring::integers_mod(3), 2, false, [&](const auto& s) {
        seen.push_back(s);
        return false;
    });
    std::vector<std::vector<std::size_t>> want = {{0, 1}, {0, 2}, {1, 2}};
    CHECK(seen == want);
}

TEST_CASE("representation grid certificate") {
    Ring f3 = Ring::galois_field(3, 1);
    KGrid g = build_k_grid(f3, {0, 1}, {0, 1});
    CHECK(g.members() == 2);
    CHECK(g.cols() == 2);
    CHECK(g.block() == 3);
    // Cross sums of distinct members must be (0,1) matrices.
    IntMatrix sum(3, 3);
    for (std::size_t l = 0; l < 2; ++l)
        sum = sum + (g.k[0][l] * g.k[1][l].transpose()).to_dense();
    CHECK(entries_in(sum, {0, 1}));

    Ring z4 = Ring::integers_mod(4);
    CHECK_THROWS_AS(build_k_grid(z4, {0, 2}, {0, 2}), domain_error);  // 2*2 = 2*0 collide
    CHECK_THROWS_AS(build_k_grid(z4, {0, 1}, {1, 1}), domain_error);  // repeated column
}

TEST_CASE("latin square families from fields") {
    Ring f5 = Ring::galois_field(5, 1);
    std::vector<IntMatrix> mols = mols_field(f5);
    CHECK(mols.size() == 4);
    for (const auto& sq : mols) CHECK(is_latin(sq));
    CHECK(are_orthogonal_latin(mols[0], mols[3]));
    CHECK_FALSE(are_orthogonal_latin(mols[0], mols[0]));

    std::vector<IntMatrix> msls = msls_field(Ring::galois_field(2, 2));
    CHECK(msls.size() == 3);
    CHECK(are_suitable_latin(msls[0], msls[1]));
    CHECK_FALSE(are_suitable_latin(msls[0], msls[0]));

    CHECK_THROWS_AS(mols_field(Ring::integers_mod(6)), domain_error);
    CHECK_FALSE(is_latin(IntMatrix(2, 2, {0, 1, 0, 1})));
}
