#pragma once

#include <vector>

#include "odkit/design.hpp"
#include "odkit/matrix.hpp"

namespace odkit {

// Fixed full designs of order 2^t on 2^t variables, t = 1..3. These are
// the workhorse ingredients: substituting and merging them yields every
// weighing matrix and coarser design of those orders used elsewhere.
OrthogonalDesign base_od(unsigned t);

IntMatrix sylvester_hadamard(unsigned t);  // order 2^t, entries +-1

// W(2^t, k) for 1 <= k <= 2^t: keep k variables, zero the rest.
IntMatrix weighing_power2(unsigned t, i64 k);

// Full design of order 2^t whose type subset sums cover 1..2^t, so any
// needed part sizes can be merged out of it. t = 1..3 are the all-ones
// designs; t = 4 has no all-ones design, so a unit-search result with
// eight variables stands in (checked at load).
OrthogonalDesign full_od_power2(unsigned t);

bool subset_sums_cover_all(const std::vector<i64>& type);

// Quadratic character core over GF(q): zero diagonal, entry chi(a_i - a_j)
// elsewhere. Symmetric for q = 1 mod 4, antisymmetric for q = 3 mod 4;
// P P^T = q I - J and P J = J P = 0 either way.
IntMatrix paley_core(i64 q);

// Symmetric circulants of order (p+1)/2 with R R^T + S S^T = p I, R with
// zero diagonal and +-1 off it, S all +-1. Exhaustive lexicographic search.
struct GSPair {
    i64 p;
    IntMatrix r, s;
};
GSPair goethals_seidel_pair(i64 p);

// Symmetric +-1 circulants with A^2 + B^2 + C^2 + D^2 = 4 n I.
// Lexicographically first solution of the row-sum profile search.
struct WilliamsonQuad {
    i64 n;
    IntMatrix a, b, c, d;
};
WilliamsonQuad williamson_quad(i64 n);

// Doubling templates to order 2n. Variables of the two inputs are kept
// disjoint; each template validates the condition that makes it work.
//   [[D, E], [-E^T, D^T]]  needs every coefficient pair to commute;
OrthogonalDesign double_commuting(const OrthogonalDesign& d, const OrthogonalDesign& e);
//   [[X, Y], [-Y, X]]      needs every cross coefficient pair amicable;
OrthogonalDesign double_amicable(const OrthogonalDesign& x, const OrthogonalDesign& y);
//   H_2 tensor D           unconditional, doubles every type entry.
OrthogonalDesign double_tensor(const OrthogonalDesign& d);

}  // namespace odkit
