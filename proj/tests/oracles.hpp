#pragma once

// Shared test oracles. These deliberately avoid the library's own verifier
// logic so the two can cross-check each other.

#include <random>
#include <vector>

#include "odkit/design.hpp"
#include "odkit/matrix.hpp"

namespace odkit_test {

// Independent check of the defining identity: for integer values v,
// substituting x_i := v_i must give D D^T = (sum s_i v_i^2) I.
// Sampling several value tuples catches every failure mode of a broken
// design with overwhelming probability, and is logically independent of
// the coefficient-wise verifier.
inline bool substitution_oracle(const odkit::OrthogonalDesign& d, int trials, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(-9, 9);
    for (int t = 0; t < trials; ++t) {
        std::vector<odkit::i64> vals(d.num_vars());
        for (auto& v : vals) v = pick(rng);
        odkit::i64 want = 0;
        for (std::size_t i = 0; i < vals.size(); ++i)
            want = odkit::checked_add(want, odkit::checked_mul(d.type()[i],
                                                               odkit::checked_mul(vals[i], vals[i])));
        odkit::IntMatrix m = d.substitute(vals);
        if (!m.gram().is_scalar_multiple_of_identity(want)) return false;
    }
    // Supports must be disjoint for the coded form to even exist, but a
    // coefficient-list input can overlap; the substitution above cannot see
    // cancellation-free overlaps, so also count nonzero cells per variable.
    std::size_t cells = 0;
    for (const odkit::i64& v : d.entries().data())
        if (v != 0) ++cells;
    std::size_t expect = 0;
    for (std::size_t i = 0; i < d.num_vars(); ++i) {
        odkit::IntMatrix a = d.coefficient(i);
        for (const odkit::i64& v : a.data())
            if (v != 0) ++expect;
    }
    return cells == expect;
}

inline odkit::OrthogonalDesign od2_literal() {
    odkit::IntMatrix e(2, 2, {1, 2, -2, 1});
    return odkit::OrthogonalDesign({1, 1}, e);
}

inline odkit::OrthogonalDesign od4_literal() {
    odkit::IntMatrix e(4, 4,
                       {1, 2, 3, 4,
                        -2, 1, 4, -3,
                        -3, -4, 1, 2,
                        -4, 3, -2, 1});
    return odkit::OrthogonalDesign({1, 1, 1, 1}, e);
}

inline odkit::OrthogonalDesign od8_literal() {
    odkit::IntMatrix e(8, 8,
                       {1, 2, 3, 4, 5, 6, 7, 8,
                        -2, 1, 4, -3, 6, -5, 8, -7,
                        -3, -4, 1, 2, -7, 8, 5, -6,
                        -4, 3, -2, 1, 8, 7, -6, -5,
                        -5, -6, 7, -8, 1, 2, -3, 4,
                        -6, 5, -8, -7, -2, 1, 4, 3,
                        -7, -8, -5, 6, 3, -4, 1, 2,
                        -8, 7, 6, 5, -4, -3, -2, 1});
    return odkit::OrthogonalDesign({1, 1, 1, 1, 1, 1, 1, 1}, e);
}

}  // namespace odkit_test
