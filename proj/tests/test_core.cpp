#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <random>

#include "odkit/checked.hpp"
#include "odkit/matrix.hpp"
#include "odkit/monomial.hpp"
#include "odkit/packed.hpp"

using namespace odkit;

namespace {

IntMatrix random_small(std::mt19937& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
    return m;
}

IntMatrix sylvester(unsigned t) {
    IntMatrix h(1, 1);
    h(0, 0) = 1;
    IntMatrix h2(2, 2, {1, 1, 1, -1});
    for (unsigned i = 0; i < t; ++i) h = kron(h2, h);
    return h;
}

}  // namespace

TEST_CASE("checked arithmetic is exact or throws") {
    CHECK(checked_add(i64(3), i64(4)) == 7);
    CHECK(checked_mul(i64(-5), i64(6)) == -30);
    CHECK(checked_sub(INT64_MIN + 1, i64(1)) == INT64_MIN);
    CHECK_THROWS_AS(checked_add(INT64_MAX, i64(1)), arithmetic_error);
    CHECK_THROWS_AS(checked_sub(INT64_MIN, i64(1)), arithmetic_error);
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2 + 1, i64(2)), arithmetic_error);
    CHECK_THROWS_AS(checked_neg(INT64_MIN), arithmetic_error);
}

TEST_CASE("i128 printing") {
    i128 v = 1;
    for (int i = 0; i < 100; ++i) v *= 2;
    CHECK(to_string_i128(v) == "1267650600228229401496703205376");
    CHECK(to_string_i128(-v) == "-1267650600228229401496703205376");
    CHECK(to_string_i128(0) == "0");
}

TEST_CASE("matrix product matches mul_transpose") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix a = random_small(rng, 5, 7, -4, 4);
        IntMatrix b = random_small(rng, 6, 7, -4, 4);
        CHECK(a.mul_transpose(b) == a * b.transpose());
    }
}

TEST_CASE("kron satisfies the mixed product rule") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 10; ++trial) {
        IntMatrix a = random_small(rng, 3, 4, -3, 3);
        IntMatrix c = random_small(rng, 4, 2, -3, 3);
        IntMatrix b = random_small(rng, 2, 3, -3, 3);
        IntMatrix d = random_small(rng, 3, 3, -3, 3);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("direct sum places blocks on the diagonal") {
    IntMatrix a(2, 2, {1, 2, 3, 4});
    IntMatrix b(1, 1, {5});
    IntMatrix s = direct_sum(a, b);
    IntMatrix want(3, 3, {1, 2, 0, 3, 4, 0, 0, 0, 5});
    CHECK(s == want);
}

TEST_CASE("shift permutation powers close up") {
    IntMatrix r3 = circulant_shift(3);
    IntMatrix want(3, 3, {0, 1, 0, 0, 0, 1, 1, 0, 0});
    CHECK(r3 == want);
    for (std::size_t n = 1; n <= 12; ++n) {
        IntMatrix r = circulant_shift(n);
        IntMatrix p = IntMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i) p = p * r;
        CHECK(p == IntMatrix::identity(n));
    }
}

TEST_CASE("back identity is a symmetric involution") {
    IntMatrix r = back_identity(5);
    CHECK(r == r.transpose());
    CHECK(r * r == IntMatrix::identity(5));
    IntMatrix r3 = back_identity(3);
    IntMatrix want(3, 3, {0, 0, 1, 0, 1, 0, 1, 0, 0});
    CHECK(r3 == want);
}

TEST_CASE("circulant rows rotate the first row") {
    IntMatrix c = circulant({7, 8, 9});
    IntMatrix want(3, 3, {7, 8, 9, 9, 7, 8, 8, 9, 7});
    CHECK(c == want);
    // circ(first_row) = sum of first_row[j] * shift^j
    IntMatrix r = circulant_shift(4);
    IntMatrix acc(4, 4);
    std::vector<i64> row = {2, -1, 0, 5};
    IntMatrix p = IntMatrix::identity(4);
    for (std::size_t j = 0; j < 4; ++j) {
        acc = acc + p.scaled(row[j]);
        p = p * r;
    }
    CHECK(circulant(row) == acc);
}

TEST_CASE("templated tensor inflates by block column") {
    IntMatrix w(2, 2, {1, -1, 0, 1});
    IntMatrix k1(2, 2, {1, 2, 3, 4});
    IntMatrix k2(2, 2, {5, 6, 7, 8});
    IntMatrix t = templated_tensor(w, {k1, k2});
    IntMatrix want(4, 4,
                   {1, 2, -5, -6,
                    3, 4, -7, -8,
                    0, 0, 5, 6,
                    0, 0, 7, 8});
    CHECK(t == want);
    // With equal blocks it degenerates to a Kronecker product.
    CHECK(templated_tensor(w, {k1, k1}) == kron(w, k1));
}

TEST_CASE("weighing and hadamard checks") {
    IntMatrix h2(2, 2, {1, 1, 1, -1});
    CHECK(is_hadamard(h2));
    CHECK(is_weighing(h2, 2));
    CHECK(is_hadamard(sylvester(3)));
    IntMatrix w(2, 2, {1, 1, 1, 1});
    CHECK_FALSE(is_hadamard(w));
    IntMatrix conf(4, 4,
                   {0, 1, 1, 1,
                    1, 0, 1, -1,
                    1, 1, 0, 1,
                    1, -1, 1, 0});
    CHECK_FALSE(is_weighing(conf, 3));  // that particular sign pattern fails
    IntMatrix w23(3, 3, {0, 1, 1, 1, 0, -1, 1, -1, 0});
    CHECK_FALSE(is_weighing(w23, 2));  // W(3,2) does not exist; gram has cross terms
}

TEST_CASE("packed round trip and products") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> d(-1, 1);
    IntMatrix a(70, 70), b(70, 70);
    for (std::size_t r = 0; r < 70; ++r)
        for (std::size_t c = 0; c < 70; ++c) {
            a(r, c) = d(rng);
            b(r, c) = d(rng);
        }
    PackedPM pa = PackedPM::from_dense(a);
    PackedPM pb = PackedPM::from_dense(b);
    CHECK(pa.to_dense() == a);
    CHECK(packed_mul_transpose(pa, pb) == a.mul_transpose(b));
    CHECK(pa.entry(13, 59) == a(13, 59));
    std::size_t nz = 0;
    for (std::size_t c = 0; c < 70; ++c)
        if (a(13, c) != 0) ++nz;
    CHECK(pa.row_support(13) == nz);
}

TEST_CASE("packed streaming checks agree with dense ones") {
    IntMatrix h = sylvester(4);
    PackedPM ph = PackedPM::from_dense(h);
    CHECK(packed_gram_is_scaled_identity(ph, 16));
    CHECK_FALSE(packed_gram_is_scaled_identity(ph, 8));
    // H * H^T = 16 I has entries in {0, +-16}.
    CHECK(packed_product_entries_in_zero_pm(ph, ph, 16));
    CHECK_FALSE(packed_product_entries_in_zero_pm(ph, ph, 4));
    PackedPM pj = PackedPM::from_dense(IntMatrix::all_ones(16, 16));
    CHECK(packed_product_is_constant(pj, pj, 16));
    CHECK_FALSE(packed_product_is_constant(ph, pj, 0));  // the all-ones row of H has sum 16
}

TEST_CASE("monomial matrices compose like their dense forms") {
    MonomialMatrix s1 = MonomialMatrix::shift(6, 1);
    MonomialMatrix s4 = MonomialMatrix::shift(6, 4);
    CHECK((s1 * s4) == MonomialMatrix::shift(6, 5));
    CHECK((s1 * s4).to_dense() == s1.to_dense() * s4.to_dense());
    CHECK(s1.transpose().to_dense() == s1.to_dense().transpose());
    CHECK((s1 * s1.transpose()) == MonomialMatrix(6));

    MonomialMatrix a({1, 0, 2}, {1, -1, 1});
    MonomialMatrix b({2, 1, 0}, {-1, 1, 1});
    CHECK((a * b).to_dense() == a.to_dense() * b.to_dense());
    CHECK(kron(a, b).to_dense() == kron(a.to_dense(), b.to_dense()));
}

TEST_CASE("parallel row loop covers every row once") {
    std::vector<int> hits(1000, 0);
    parallel_for_rows(1000, [&](std::size_t r) { hits[r] += 1; });
    for (int h : hits) CHECK(h == 1);
    CHECK_THROWS_AS(
        parallel_for_rows(8, [&](std::size_t r) {
            if (r == 5) throw domain_error("boom");
        }),
        domain_error);
}

TEST_CASE("overflow in matrix ops surfaces as an error") {
    IntMatrix big(1, 1, {INT64_MAX});
    CHECK_THROWS_AS(big + big, arithmetic_error);
    CHECK_THROWS_AS(big.scaled(2), arithmetic_error);
    IntMatrix two(1, 1, {2});
    CHECK_THROWS_AS(big * two, arithmetic_error);
}
